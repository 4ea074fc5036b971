#include "gaussinterp/nodes.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "gaussinterp/bandlimited.hpp"
#include "gaussinterp/errors.hpp"
#include "gaussinterp/io.hpp"
#include "gaussinterp/random.hpp"

namespace gaussinterp {

std::string_view family_name(Family family) noexcept {
    switch (family) {
        case Family::uniform: return "uniform";
        case Family::kadec: return "kadec";
        case Family::jittered: return "jittered";
        case Family::punctured: return "punctured";
        case Family::explicit_nodes: return "explicit";
    }
    return "explicit";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::uniform, Family::kadec, Family::jittered, Family::punctured,
                     Family::explicit_nodes}) {
        if (family_name(f) == name) return f;
    }
    throw InvalidArgument("unknown window family '" + std::string(name) + "'");
}

Spacing validate_window(std::span<const double> nodes) {
    if (nodes.size() < 2) throw InvalidArgument("a window needs at least two nodes");
    Spacing s{std::numeric_limits<double>::infinity(), 0.0};
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!std::isfinite(nodes[i])) {
            throw NonFinite("node " + std::to_string(i) + " is not finite");
        }
    }
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const double gap = nodes[i + 1] - nodes[i];
        if (!(gap > 0.0)) {
            throw NonIncreasing(i, "nodes must be strictly increasing; gap at index " +
                                       std::to_string(i) + " is " + format_number(gap));
        }
        s.q = std::min(s.q, gap);
        s.Q = std::max(s.Q, gap);
    }
    return s;
}

NodeWindow::NodeWindow(std::vector<double> nodes, Family family, WindowParams params)
    : nodes_(std::move(nodes)), family_(family), params_(params) {
    if (nodes_.size() == 1) {
        if (!std::isfinite(nodes_[0])) throw NonFinite("node 0 is not finite");
        // A lone node has no gaps; report unit spacing so grids stay well defined.
        spacing_ = {1.0, 1.0};
    } else if (nodes_.empty()) {
        throw InvalidArgument("a window needs at least one node");
    } else {
        spacing_ = validate_window(nodes_);
    }
}

std::size_t NodeWindow::position(std::ptrdiff_t j) const {
    const auto pos = static_cast<std::ptrdiff_t>(center()) + j;
    if (pos < 0 || pos >= static_cast<std::ptrdiff_t>(nodes_.size())) {
        throw IndexOutOfRange("index " + std::to_string(j) + " is outside the window");
    }
    return static_cast<std::size_t>(pos);
}

std::pair<double, double> NodeWindow::central_half() const noexcept {
    const double mid = 0.5 * (front() + back());
    const double quarter = 0.25 * (back() - front());
    return {mid - quarter, mid + quarter};
}

namespace {

// Shortest round-trip spelling; descriptors are labels, not data.
std::string shortest(double v) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

}  // namespace

std::string NodeWindow::descriptor() const {
    std::ostringstream os;
    os << family_name(family_);
    switch (family_) {
        case Family::uniform:
        case Family::punctured: os << "(n=" << params_.n << ")"; break;
        case Family::kadec: os << "(n=" << params_.n << ",c=" << shortest(params_.c) << ")"; break;
        case Family::jittered:
            os << "(n=" << params_.n << ",delta=" << shortest(params_.delta)
               << ",seed=" << params_.seed << ")";
            break;
        case Family::explicit_nodes: os << "(size=" << nodes_.size() << ")"; break;
    }
    return os.str();
}

namespace {

void require_n(int n, int min_n) {
    if (n < min_n) {
        throw InvalidArgument("n must be at least " + std::to_string(min_n) + ", got " +
                              std::to_string(n));
    }
}

}  // namespace

NodeWindow uniform_nodes(int n) {
    require_n(n, 1);
    std::vector<double> x;
    x.reserve(2 * static_cast<std::size_t>(n) + 1);
    for (int j = -n; j <= n; ++j) x.push_back(j);
    return NodeWindow(std::move(x), Family::uniform, {.n = n});
}

NodeWindow kadec_nodes(int n, double c) {
    require_n(n, 1);
    if (!(std::abs(c) > 0.0 && std::abs(c) < 0.5)) {
        throw InvalidArgument("kadec parameter must satisfy 0 < |c| < 1/2, got " + format_number(c));
    }
    const double c2 = c * c;
    std::vector<double> positive;
    for (int j = 1; j <= n; ++j) {
        const double shift = c2 / j;
        if (!(shift < 0.25)) throw InvalidArgument("kadec bound |x_j - j| < 1/4 violated");
        positive.push_back(j + shift);
    }
    std::vector<double> x;
    x.reserve(2 * positive.size() + 1);
    for (auto it = positive.rbegin(); it != positive.rend(); ++it) x.push_back(-*it);
    x.push_back(0.0);
    x.insert(x.end(), positive.begin(), positive.end());
    return NodeWindow(std::move(x), Family::kadec, {.n = n, .c = c});
}

NodeWindow jittered_nodes(int n, double delta, std::uint64_t seed) {
    require_n(n, 1);
    if (!(delta >= 0.0 && delta < 0.5)) {
        throw InvalidArgument("jitter must satisfy 0 <= delta < 1/2, got " + format_number(delta));
    }
    const CounterRng rng(seed);
    std::vector<double> x;
    x.reserve(2 * static_cast<std::size_t>(n) + 1);
    for (int j = -n; j <= n; ++j) {
        const double u = delta == 0.0 ? 0.0 : rng.symmetric(j, delta);
        x.push_back(j + u);
    }
    return NodeWindow(std::move(x), Family::jittered, {.n = n, .delta = delta, .seed = seed});
}

NodeWindow punctured_integer_nodes(int n) {
    require_n(n, 2);
    std::vector<double> x;
    x.reserve(2 * static_cast<std::size_t>(n));
    for (int j = -n; j <= n; ++j) {
        if (j != 0) x.push_back(j);
    }
    return NodeWindow(std::move(x), Family::punctured, {.n = n});
}

NodeWindow explicit_nodes(std::vector<double> nodes) {
    const int half = static_cast<int>(nodes.size() / 2);
    return NodeWindow(std::move(nodes), Family::explicit_nodes, {.n = half});
}

NodeWindow make_window(Family family, const WindowParams& params) {
    switch (family) {
        case Family::uniform: return uniform_nodes(params.n);
        case Family::kadec: return kadec_nodes(params.n, params.c);
        case Family::jittered: return jittered_nodes(params.n, params.delta, params.seed);
        case Family::punctured: return punctured_integer_nodes(params.n);
        case Family::explicit_nodes: break;
    }
    throw InvalidArgument("explicit windows have no generator; pass the nodes");
}

RieszBounds riesz_bounds_estimate(const NodeWindow& window) {
    const auto x = window.nodes();
    const auto n = static_cast<Eigen::Index>(x.size());
    Eigen::MatrixXd s(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        s(j, j) = 1.0;
        for (Eigen::Index k = 0; k < j; ++k) {
            s(j, k) = s(k, j) = sinc(x[j] - x[k]);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success) {
        throw FactorizationFailure("eigensolver did not converge on the sinc Gram matrix");
    }
    return {eig.eigenvalues()(0), eig.eigenvalues()(n - 1)};
}

std::string window_to_json(const NodeWindow& window) {
    const auto& p = window.params();
    nlohmann::json params = {{"n", p.n}};
    if (window.family() == Family::kadec) params["c"] = p.c;
    if (window.family() == Family::jittered) {
        params["delta"] = p.delta;
        params["seed"] = p.seed;
    }
    nlohmann::json doc = {
        {"family", std::string(family_name(window.family()))},
        {"params", params},
        {"nodes", std::vector<double>(window.nodes().begin(), window.nodes().end())},
    };
    return doc.dump(2);
}

NodeWindow window_from_json(std::string_view text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array()) {
            throw InvalidArgument("window JSON must contain a 'nodes' array");
        }
        const Family family = parse_family(doc.value("family", std::string("explicit")));
        WindowParams p;
        if (doc.contains("params")) {
            const auto& jp = doc["params"];
            p.n = jp.value("n", 0);
            p.c = jp.value("c", 0.0);
            p.delta = jp.value("delta", 0.0);
            p.seed = jp.value("seed", std::uint64_t{0});
        }
        return NodeWindow(doc["nodes"].get<std::vector<double>>(), family, p);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("window JSON: ") + e.what());
    }
}

std::string window_to_csv(const NodeWindow& window) {
    std::string out = "x\n";
    for (double v : window.nodes()) {
        out += format_number(v);
        out += '\n';
    }
    return out;
}

NodeWindow window_from_csv(std::string_view text) {
    std::vector<double> nodes;
    std::istringstream is{std::string(text)};
    std::string line;
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (!header_seen) {
            header_seen = true;
            if (line == "x") continue;
        }
        try {
            std::size_t used = 0;
            nodes.push_back(std::stod(line, &used));
            if (used != line.size()) throw std::invalid_argument(line);
        } catch (const std::exception&) {
            throw InvalidArgument("window CSV: cannot parse '" + line + "'");
        }
    }
    return explicit_nodes(std::move(nodes));
}

}  // namespace gaussinterp
