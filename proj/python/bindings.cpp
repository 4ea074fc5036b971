#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gaussinterp/bandlimited.hpp"
#include "gaussinterp/cli.hpp"
#include "gaussinterp/errors.hpp"
#include "gaussinterp/experiments.hpp"
#include "gaussinterp/gram.hpp"
#include "gaussinterp/interp1d.hpp"
#include "gaussinterp/interp2d.hpp"
#include "gaussinterp/kernel.hpp"
#include "gaussinterp/nodes.hpp"

namespace py = pybind11;
using namespace gaussinterp;

namespace {

std::vector<double> as_vector(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    return {a.data(), a.data() + a.size()};
}

py::array_t<double> as_array(const std::vector<double>& v) { return py::array_t<double>(v.size(), v.data()); }

py::dict to_dict(const Table& t) {
    py::dict d;
    for (std::size_t c = 0; c < t.header.size(); ++c) {
        py::list column;
        for (const auto& row : t.rows) {
            std::visit([&](const auto& v) { column.append(v); }, row[c]);
        }
        d[py::str(t.header[c])] = column;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Gaussian interpolation of bandlimited functions";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", error);
    py::register_exception<NonIncreasing>(m, "NonIncreasing", error);
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", error);
    py::register_exception<IndexOutOfRange>(m, "IndexOutOfRange", error);
    py::register_exception<FactorizationFailure>(m, "FactorizationFailure", error);
    py::register_exception<InsufficientData>(m, "InsufficientData", error);
    py::register_exception<ZeroData>(m, "ZeroData", error);
    py::register_exception<DivergentDerivative>(m, "DivergentDerivative", error);
    py::register_exception<NonFinite>(m, "NonFinite", error);

    m.def("gaussian", &gaussian, py::arg("lam"), py::arg("x"));
    m.def("gaussian_ft", &gaussian_ft, py::arg("lam"), py::arg("u"));
    m.def("kappa", &kappa, py::arg("alpha"));

    py::class_<NodeWindow>(m, "NodeWindow")
        .def_property_readonly("nodes", [](const NodeWindow& w) {
            return as_array({w.nodes().begin(), w.nodes().end()});
        })
        .def_property_readonly("q", &NodeWindow::q)
        .def_property_readonly("Q", &NodeWindow::Q)
        .def_property_readonly("center", &NodeWindow::center)
        .def_property_readonly("family", [](const NodeWindow& w) { return std::string(family_name(w.family())); })
        .def("descriptor", &NodeWindow::descriptor)
        .def("to_json", [](const NodeWindow& w) { return window_to_json(w); })
        .def_static("from_json", [](const std::string& s) { return window_from_json(s); })
        .def("__len__", &NodeWindow::size)
        .def("__repr__", [](const NodeWindow& w) { return "NodeWindow(" + w.descriptor() + ")"; });

    m.def("uniform_nodes", &uniform_nodes, py::arg("n"));
    m.def("kadec_nodes", &kadec_nodes, py::arg("n"), py::arg("c"));
    m.def("jittered_nodes", &jittered_nodes, py::arg("n"), py::arg("delta"), py::arg("seed"));
    m.def("punctured_integer_nodes", &punctured_integer_nodes, py::arg("n"));
    m.def("explicit_nodes", [](const py::array_t<double, py::array::c_style | py::array::forcecast>& x) {
        return explicit_nodes(as_vector(x));
    }, py::arg("nodes"));
    m.def("riesz_bounds", [](const NodeWindow& w) {
        const auto b = riesz_bounds_estimate(w);
        return py::make_tuple(b.lower, b.upper);
    });

    py::class_<BandlimitedFunction>(m, "BandlimitedFunction")
        .def("__call__", [](const BandlimitedFunction& f, double t) { return f(t); })
        .def("__call__", [](const BandlimitedFunction& f, const py::array_t<double>& t) {
            return py::vectorize([&f](double x) { return f(x); })(t);
        })
        .def_property_readonly("id", &BandlimitedFunction::id)
        .def_property_readonly("l2_norm", &BandlimitedFunction::l2_norm)
        .def("scaled", &BandlimitedFunction::scaled);
    m.def("parse_function", [](const std::string& s) { return parse_function(s); }, py::arg("spec"));

    py::class_<GaussianInterpolant>(m, "GaussianInterpolant")
        .def("__call__", [](const GaussianInterpolant& I, double x) { return I(x); })
        .def("__call__", [](const GaussianInterpolant& I,
                            const py::array_t<double, py::array::c_style | py::array::forcecast>& xs) {
            return as_array(I.evaluate(as_vector(xs)));
        })
        .def_property_readonly("coeffs", &GaussianInterpolant::coeffs)
        .def_property_readonly("data", &GaussianInterpolant::data)
        .def_property_readonly("lam", &GaussianInterpolant::lambda)
        .def_property_readonly("window", &GaussianInterpolant::window)
        .def_property_readonly("precision_bits", &GaussianInterpolant::precision_bits)
        .def("max_node_residual", &GaussianInterpolant::max_node_residual)
        .def("spectrum", [](const GaussianInterpolant& I, double u) { return InterpolantSpectrum(I)(u); });

    m.def("interpolate", [](const BandlimitedFunction& f, const NodeWindow& w, double lam) {
        return interpolate_function(f, w, lam);
    }, py::arg("f"), py::arg("window"), py::arg("lam"));
    m.def("interpolate_samples", [](const py::array_t<double, py::array::c_style | py::array::forcecast>& y,
                                    const NodeWindow& w, double lam) {
        return interpolate_sequence(as_vector(y), w, lam);
    }, py::arg("y"), py::arg("window"), py::arg("lam"));
    m.def("fundamental", [](const NodeWindow& w, double lam, std::size_t position) {
        return fundamental_function(w, lam, position);
    }, py::arg("window"), py::arg("lam"), py::arg("position"));

    m.def("inverse_decay", [](const NodeWindow& w, double lam) {
        const auto fit = measure_inverse_decay(GramSystem(w, lam));
        return py::dict(py::arg("rate") = fit.rate, py::arg("amplitude") = fit.amplitude,
                        py::arg("residual") = fit.residual, py::arg("points") = fit.points);
    }, py::arg("window"), py::arg("lam"));
    m.def("lp_norm_ratio", [](const NodeWindow& w, double lam,
                              const py::array_t<double, py::array::c_style | py::array::forcecast>& y,
                              const std::string& p) {
        return lp_norm_ratio(w, lam, as_vector(y), parse_norm(p));
    }, py::arg("window"), py::arg("lam"), py::arg("y"), py::arg("p") = "2");

    py::class_<GridInterpolant2D>(m, "GridInterpolant2D")
        .def("__call__", [](const GridInterpolant2D& I, double x, double y) { return I(x, y); })
        .def("evaluate_grid", [](const GridInterpolant2D& I,
                                 const py::array_t<double, py::array::c_style | py::array::forcecast>& xs,
                                 const py::array_t<double, py::array::c_style | py::array::forcecast>& ys) {
            return I.evaluate_grid(as_vector(xs), as_vector(ys));
        })
        .def_property_readonly("coeffs", &GridInterpolant2D::coeff_matrix)
        .def("max_grid_residual", &GridInterpolant2D::max_grid_residual);
    m.def("interpolate_grid", &interpolate_grid, py::arg("data"), py::arg("window_x"), py::arg("window_y"),
          py::arg("lam"));

    m.def("run_convergence", [](const BandlimitedFunction& f, const NodeWindow& w, std::vector<double> lams) {
        return to_dict(run_convergence(f, w, lams).table());
    }, py::arg("f"), py::arg("window"), py::arg("lams"));
    m.def("run_counterexample", [](int n, std::vector<double> lams) {
        return to_dict(run_counterexample(n, lams).table());
    }, py::arg("n"), py::arg("lams"));

    m.def("cli", [](std::vector<std::string> args) {
        args.insert(args.begin(), "gaussinterp");
        std::ostringstream out, err;
        const int code = cli::parse_and_dispatch(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Runs a CLI command in-process; returns (exit code, stdout, stderr).");
}
