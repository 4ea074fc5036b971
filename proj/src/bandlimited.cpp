#include "gaussinterp/bandlimited.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "gaussinterp/errors.hpp"
#include "gaussinterp/io.hpp"
#include "gaussinterp/quadrature.hpp"

namespace gaussinterp {

namespace {

constexpr double kPi = std::numbers::pi;

// r = x - 2 round(x/2) lies in [-1, 1] and is computed exactly.
double reduce_period2(double x) { return x - 2.0 * std::nearbyint(0.5 * x); }

// Shortest round-trip form, used in function ids.
std::string shortest(double v) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, r.ptr};
}

std::string join_numbers(std::span<const double> v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += shortest(v[i]);
    }
    return out;
}

}  // namespace

double sin_pi(double x) {
    if (!std::isfinite(x)) throw NonFinite("sin_pi argument is not finite");
    const double r = reduce_period2(x);
    if (r > 0.5) return std::sin(kPi * (1.0 - r));
    if (r < -0.5) return -std::sin(kPi * (1.0 + r));
    return std::sin(kPi * r);
}

double cos_pi(double x) {
    if (!std::isfinite(x)) throw NonFinite("cos_pi argument is not finite");
    const double r = std::abs(reduce_period2(x));
    if (r <= 0.25) return std::cos(kPi * r);
    if (r < 0.75) return std::sin(kPi * (0.5 - r));
    return -std::cos(kPi * (1.0 - r));
}

double sinc(double x) {
    if (std::abs(x) < 1e-6) {
        const double t = kPi * x;
        const double t2 = t * t;
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
    }
    return sin_pi(x) / (kPi * x);
}

BandlimitedFunction::BandlimitedFunction(FunctionKind kind, std::string id, Eval eval,
                                         std::optional<double> l2_norm)
    : kind_(kind),
      id_(std::move(id)),
      eval_(std::make_shared<const Eval>(std::move(eval))),
      l2_norm_(l2_norm) {}

BandlimitedFunction BandlimitedFunction::scaled(double factor) const {
    auto inner = eval_;
    std::optional<double> norm;
    if (l2_norm_) norm = std::abs(factor) * *l2_norm_;
    return {kind_, id_ + ";scale=" + shortest(factor),
            [inner, factor](double t) { return factor * (*inner)(t); }, norm};
}

BandlimitedFunction sinc_function() {
    return {FunctionKind::sinc, "kind=sinc", [](double t) { return sinc(t); }, 1.0};
}

BandlimitedFunction pw_combo(std::span<const double> shifts, std::span<const double> weights) {
    if (shifts.size() != weights.size()) {
        throw DimensionMismatch("combo needs as many weights as shifts (" +
                                std::to_string(shifts.size()) + " vs " +
                                std::to_string(weights.size()) + ")");
    }
    std::vector<double> s(shifts.begin(), shifts.end());
    std::vector<double> w(weights.begin(), weights.end());
    for (double v : s) {
        if (!std::isfinite(v)) throw NonFinite("combo shift is not finite");
    }
    for (double v : w) {
        if (!std::isfinite(v)) throw NonFinite("combo weight is not finite");
    }

    // Integer-shifted sincs are orthonormal, so the norm is the l2 norm of the
    // weights after merging repeated shifts.
    std::optional<double> norm;
    bool integer_shifts = true;
    for (double v : s) integer_shifts = integer_shifts && v == std::nearbyint(v);
    if (integer_shifts) {
        std::map<double, double> merged;
        for (std::size_t k = 0; k < s.size(); ++k) merged[s[k]] += w[k];
        double sq = 0.0;
        for (const auto& [shift, weight] : merged) sq += weight * weight;
        norm = std::sqrt(sq);
    }

    std::string id = "kind=combo;shifts=" + join_numbers(s) + ";weights=" + join_numbers(w);
    return {FunctionKind::shifted_sinc_combo, std::move(id),
            [s = std::move(s), w = std::move(w)](double t) {
                double sum = 0.0;
                for (std::size_t k = 0; k < s.size(); ++k) sum += w[k] * sinc(t - s[k]);
                return sum;
            },
            norm};
}

BandlimitedFunction fejer_square() {
    return {FunctionKind::fejer_square, "kind=fejer",
            [](double t) {
                const double s = sinc(0.5 * t);
                return s * s;
            },
            std::sqrt(4.0 / 3.0)};
}

BandlimitedFunction trig_spectrum_function(std::span<const std::complex<double>> coeffs) {
    if (coeffs.empty() || coeffs.size() % 2 == 0) {
        throw InvalidArgument("spectrum coefficients must be indexed -M..M (odd count)");
    }
    double scale = 0.0;
    for (const auto& c : coeffs) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw NonFinite("spectrum coefficient is not finite");
        }
        scale = std::max(scale, std::abs(c));
    }
    std::vector<double> real;
    real.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (std::abs(coeffs[i].imag()) > 1e-12 * scale) {
            throw InvalidArgument("spectrum coefficient " + std::to_string(i) +
                                  " has a nonzero imaginary part; the function would not be real");
        }
        real.push_back(coeffs[i].real());
    }
    const auto m = static_cast<int>(real.size() / 2);
    double sq = 0.0;
    for (double c : real) sq += c * c;

    return {FunctionKind::trig_spectrum, "kind=trig;coeffs=" + join_numbers(real),
            [real = std::move(real), m](double t) {
                double sum = 0.0;
                for (int i = 0; i < static_cast<int>(real.size()); ++i) {
                    if (real[i] != 0.0) sum += real[i] * sinc(t + (i - m));
                }
                return sum;
            },
            std::sqrt(sq)};
}

HigginsG::HigginsG(double c) : c_(c) {
    if (!(std::abs(c) > 0.0 && std::abs(c) < 0.5)) {
        throw InvalidArgument("Higgins parameter must satisfy 0 < |c| < 1/2, got " +
                              format_number(c));
    }
    norm_ = 2.0 * std::sinh(kPi * c);
}

double HigginsG::operator()(double x) const {
    if (!std::isfinite(x)) throw NonFinite("G argument is not finite");
    const double two_c = 2.0 * c_;
    const double d = (x - two_c) * (x + two_c);
    const double first = d >= 0.0 ? cos_pi(std::sqrt(d)) : std::cosh(kPi * std::sqrt(-d));
    return x * (first - cos_pi(x)) / norm_;
}

double HigginsG::derivative(double x) const {
    constexpr double h = 1e-6;
    auto central = [&](double step) { return ((*this)(x + step) - (*this)(x - step)) / (2.0 * step); };
    return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

double HigginsG::node(int l) const {
    if (l == 0) return 0.0;
    const double c2 = c_ * c_;
    const int j = std::abs(l);
    const double x = j + c2 / j;
    return l > 0 ? x : -x;
}

BandlimitedFunction HigginsG::fundamental(int l) const {
    const double xl = node(l);
    const double slope = derivative(xl);
    if (!(std::abs(slope) >= 1e-12)) {
        throw DivergentDerivative("|G'(x_" + std::to_string(l) + ")| = " +
                                  format_number(std::abs(slope)) + " is below 1e-12");
    }
    const HigginsG g = *this;
    std::string id = "kind=higgins;c=" + shortest(c_) + ";l=" + std::to_string(l);
    return {FunctionKind::higgins_g, std::move(id),
            [g, xl, slope](double x) {
                const double dx = x - xl;
                if (dx == 0.0) return 1.0;
                // Close to x_l the divided difference G[x_l, x] is replaced by
                // G' at the midpoint, which is second-order accurate.
                if (std::abs(dx) < 1e-5) return g.derivative(xl + 0.5 * dx) / slope;
                return g(x) / (dx * slope);
            },
            std::nullopt};
}

double l2_error(const std::function<double(double)>& f, const std::function<double(double)>& g,
                double a, double b, double step) {
    const Grid grid(a, b, step);
    std::vector<double> sq(grid.points());
    for (std::size_t k = 0; k < grid.points(); ++k) {
        const double x = grid[k];
        const double d = f(x) - g(x);
        if (!std::isfinite(d)) throw NonFinite("non-finite sample at x = " + format_number(x));
        sq[k] = d * d;
    }
    return std::sqrt(simpson(sq, grid.h()));
}

namespace {

std::vector<double> parse_list(const std::string& text, const std::string& key) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidArgument("function spec: cannot parse '" + item + "' in " + key);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

BandlimitedFunction parse_function(std::string_view spec) {
    std::map<std::string, std::string> fields;
    std::string text(spec);
    // Bare names such as "sinc" are accepted as shorthand.
    if (!text.empty() && text.find_first_of("=;") == std::string::npos) text = "kind=" + text;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t semi = text.find(';', start);
        const std::string part =
            text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
        if (!part.empty()) {
            const std::size_t eq = part.find('=');
            if (eq == std::string::npos) {
                throw InvalidArgument("function spec: expected key=value, got '" + part + "'");
            }
            fields[part.substr(0, eq)] = part.substr(eq + 1);
        }
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    if (!fields.count("kind")) throw InvalidArgument("function spec needs kind=...");
    auto need = [&](const std::string& key) -> const std::string& {
        auto it = fields.find(key);
        if (it == fields.end()) throw InvalidArgument("function spec needs " + key + "=...");
        return it->second;
    };
    const std::string& kind = fields["kind"];
    if (kind == "sinc") return sinc_function();
    if (kind == "fejer") return fejer_square();
    if (kind == "combo") {
        return pw_combo(parse_list(need("shifts"), "shifts"), parse_list(need("weights"), "weights"));
    }
    if (kind == "trig") {
        const auto real = parse_list(need("coeffs"), "coeffs");
        std::vector<std::complex<double>> c(real.begin(), real.end());
        return trig_spectrum_function(c);
    }
    if (kind == "higgins") {
        const double c = parse_list(need("c"), "c").at(0);
        const int l = fields.count("l") ? static_cast<int>(parse_list(fields["l"], "l").at(0)) : 0;
        return HigginsG(c).fundamental(l);
    }
    throw InvalidArgument("unknown function kind '" + kind + "'");
}

}  // namespace gaussinterp
