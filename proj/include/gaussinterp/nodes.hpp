#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gaussinterp {

enum class Family { uniform, kadec, jittered, punctured, explicit_nodes };

[[nodiscard]] std::string_view family_name(Family family) noexcept;
[[nodiscard]] Family parse_family(std::string_view name);

/// Generator parameters. Only the fields relevant to the family are meaningful.
struct WindowParams {
    int n = 0;              // truncation half-width
    double c = 0.0;         // kadec perturbation
    double delta = 0.0;     // jitter half-width
    std::uint64_t seed = 0; // jitter seed

    friend bool operator==(const WindowParams&, const WindowParams&) = default;
};

/// Spacing bounds actually realized by a node sequence.
struct Spacing {
    double q;  // smallest consecutive gap
    double Q;  // largest consecutive gap
};

/// Finite, strictly increasing truncation of a bi-infinite node sequence.
///
/// Immutable once built. Positions run 0..size()-1; the signed index j used by
/// the generators maps to position center() + j.
class NodeWindow {
public:
    /// Validates the nodes and recomputes (q, Q); throws NonIncreasing otherwise.
    NodeWindow(std::vector<double> nodes, Family family, WindowParams params = {});

    [[nodiscard]] std::span<const double> nodes() const noexcept { return nodes_; }
    [[nodiscard]] double operator[](std::size_t pos) const { return nodes_[pos]; }
    [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
    [[nodiscard]] double q() const noexcept { return spacing_.q; }
    [[nodiscard]] double Q() const noexcept { return spacing_.Q; }
    [[nodiscard]] Family family() const noexcept { return family_; }
    [[nodiscard]] const WindowParams& params() const noexcept { return params_; }

    /// Position of the central node (x_0 for symmetric generators).
    [[nodiscard]] std::size_t center() const noexcept { return nodes_.size() / 2; }

    /// Position of signed index j; throws IndexOutOfRange.
    [[nodiscard]] std::size_t position(std::ptrdiff_t j) const;

    [[nodiscard]] double front() const noexcept { return nodes_.front(); }
    [[nodiscard]] double back() const noexcept { return nodes_.back(); }

    /// Middle half of [front, back], where truncation effects are small.
    [[nodiscard]] std::pair<double, double> central_half() const noexcept;

    /// Short human-readable descriptor, e.g. "kadec(n=20,c=0.2)".
    [[nodiscard]] std::string descriptor() const;

    friend bool operator==(const NodeWindow& a, const NodeWindow& b) {
        return a.family_ == b.family_ && a.params_ == b.params_ && a.nodes_ == b.nodes_;
    }

private:
    std::vector<double> nodes_;
    Spacing spacing_{};
    Family family_;
    WindowParams params_;
};

/// Tightest (q, Q); requires at least two nodes and strictly positive gaps.
[[nodiscard]] Spacing validate_window(std::span<const double> nodes);

/// x_j = j for j in -n..n.
[[nodiscard]] NodeWindow uniform_nodes(int n);

/// x_0 = 0, x_j = -x_{-j} = j + c^2/j; satisfies |x_j - j| <= c^2 < 1/4.
[[nodiscard]] NodeWindow kadec_nodes(int n, double c);

/// x_j = j + u_j with u_j uniform on [-delta, delta) drawn from CounterRng(seed).
[[nodiscard]] NodeWindow jittered_nodes(int n, double delta, std::uint64_t seed);

/// {-n..-1} and {1..n}: the integers with the origin removed.
[[nodiscard]] NodeWindow punctured_integer_nodes(int n);

[[nodiscard]] NodeWindow explicit_nodes(std::vector<double> nodes);

/// Generator dispatch for the four generated families; explicit windows have
/// no generator and are rejected.
[[nodiscard]] NodeWindow make_window(Family family, const WindowParams& params);

/// Extreme eigenvalues of S(j,k) = sinc(x_j - x_k), a proxy for the Riesz bounds.
struct RieszBounds {
    double lower;
    double upper;
};
[[nodiscard]] RieszBounds riesz_bounds_estimate(const NodeWindow& window);

// JSON document {family, params, nodes:[...]} and one-column CSV.
[[nodiscard]] std::string window_to_json(const NodeWindow& window);
[[nodiscard]] NodeWindow window_from_json(std::string_view text);
[[nodiscard]] std::string window_to_csv(const NodeWindow& window);
[[nodiscard]] NodeWindow window_from_csv(std::string_view text);

}  // namespace gaussinterp
