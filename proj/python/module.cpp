// Python bindings: thin value-array wrappers over the core operations.

#include "gclm/analysis.hpp"
#include "gclm/dynamics.hpp"
#include "gclm/functionals.hpp"
#include "gclm/profile.hpp"

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gclm;

namespace {

Field to_field(py::array_t<double, py::array::c_style | py::array::forcecast> v) {
    auto buf = v.request();
    if (buf.ndim != 1) throw error("bad-field", "expected a 1-d array of samples");
    const double* p = static_cast<const double*>(buf.ptr);
    std::vector<double> vals(p, p + buf.shape[0]);
    return Field::from_values(Grid::get((int)buf.shape[0]), vals);
}

py::array_t<double> to_array(const std::vector<double>& v) {
    return py::array_t<double>((py::ssize_t)v.size(), v.data());
}

py::dict record_dict(const ProfileRecord& r) {
    py::dict d;
    d["a"] = r.a;
    d["c_omega_a"] = r.c_omega_a;
    d["alpha"] = r.alpha;
    d["H_omega_at_pi"] = r.H_omega_at_pi;
    d["residual_h"] = r.residual_h;
    d["residual_sup"] = r.residual_sup;
    d["converged"] = r.converged;
    d["values"] = to_array(r.omega_a.values());
    return d;
}

}  // namespace

PYBIND11_MODULE(_gclm, m) {
    m.doc() = "pseudo-spectral gCLM laboratory";

    m.def("nodes", [](int n) {
        auto g = Grid::get(n);
        std::vector<double> x(n);
        for (int j = 0; j < n; ++j) x[j] = g->node(j);
        return to_array(x);
    });
    m.def("hilbert", [](py::array_t<double> v) { return to_array(hilbert(to_field(v)).values()); });
    m.def("velocity", [](py::array_t<double> v) {
        auto [u, ux] = velocity(to_field(v));
        return py::make_tuple(to_array(u.values()), to_array(ux.values()));
    });
    m.def("derivative",
          [](py::array_t<double> v) { return to_array(derivative(to_field(v)).values()); });
    m.def("eval_at", [](py::array_t<double> v, double x) { return eval_at(to_field(v), x); });
    m.def("norm_H", [](py::array_t<double> v) { return norm_H(to_field(v)); });
    m.def("norm_X", [](py::array_t<double> v) { return norm_X(to_field(v)); });
    m.def("inner_Y",
          [](py::array_t<double> f, py::array_t<double> g) { return inner_Y(to_field(f), to_field(g)); });
    m.def("coercivity_ratio",
          [](py::array_t<double> v) { return coercivity_ratio(to_field(v)); });
    m.def("apply_L1", [](py::array_t<double> v) { return to_array(apply_L1(to_field(v)).values()); });
    m.def("rhs_rescaled", [](py::array_t<double> v, double a) {
        auto [f, c] = rhs_rescaled(to_field(v), a);
        return py::make_tuple(to_array(f.values()), c);
    });
    m.def(
        "relax",
        [](double a, int n, double tol, double horizon) {
            return record_dict(relax(equilibrium_field(Grid::get(n)), a, tol, horizon));
        },
        py::arg("a"), py::arg("n") = 1024, py::arg("tol") = 1e-10, py::arg("horizon") = 200.0);
    m.def(
        "evolve",
        [](py::array_t<double> v, double a, double horizon, double stride) {
            Trajectory t = evolve(to_field(v), a, horizon, stride);
            py::dict d;
            std::vector<double> tau, tp, lam, c, h, sup;
            for (const auto& r : t.rows) {
                tau.push_back(r.tau);
                tp.push_back(r.t_phys);
                lam.push_back(r.lambda);
                c.push_back(r.c_omega);
                h.push_back(r.h_norm);
                sup.push_back(r.sup_norm);
            }
            d["tau"] = to_array(tau);
            d["t_phys"] = to_array(tp);
            d["lambda"] = to_array(lam);
            d["c_omega"] = to_array(c);
            d["h_norm"] = to_array(h);
            d["sup_norm"] = to_array(sup);
            d["final"] = to_array(t.checkpoints.back().values());
            return d;
        },
        py::arg("values"), py::arg("a"), py::arg("horizon"), py::arg("stride") = 0.5);

    py::register_exception<error>(m, "GclmError");
}
