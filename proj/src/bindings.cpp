#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gst/catalog.hpp"
#include "gst/kernelcheck.hpp"
#include "gst/transform.hpp"
#include "gst/verify.hpp"

namespace py = pybind11;
using namespace gst;

namespace {

TransformParams params_for(const TransformPair& pair, double rel_tol) {
  TransformParams tp;
  tp.rho = pair.rho;
  if (rel_tol > 0.0) tp.quad.rel_tol = rel_tol;
  return tp;
}

double inverse_dispatch(const TransformPair& pair, double y,
                        const std::string& form, double rel_tol) {
  TransformParams tp = params_for(pair, rel_tol);
  if (form == "eq9") return inverse_gst(pair.G, tp, y);
  if (form == "eq14") return inverse_gst_zplane(pair.G, tp, y);
  if (form == "eq15") return inverse_gst_ibp(pair.G, tp, y);
  if (form == "abel") {
    if (!pair.delta.eval)
      throw DomainError("form abel requires a closed-form delta");
    return abel_inverse_from_delta(pair.delta, tp, y);
  }
  if (form == "disc-rho1") return stieltjes_disc_inverse(pair.G, tp, y);
  throw DomainError("unknown form '" + form + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "generalized Stieltjes transform core";

  // translators run newest-first, so the subclass must be registered last
  py::register_exception<Error>(m, "GstError", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "GstDomainError", PyExc_ValueError);

  py::class_<TransformPair>(m, "TransformPair")
      .def_readonly("name", &TransformPair::name)
      .def_readonly("rho", &TransformPair::rho)
      .def("F", [](const TransformPair& p, double y) { return p.F.density(y); })
      .def("G", [](const TransformPair& p, Cplx z) { return p.G.eval(z); })
      .def("G_deriv",
           [](const TransformPair& p, Cplx z) { return p.G.deriv(z); })
      .def("delta",
           [](const TransformPair& p, double t) {
             if (!p.delta.eval)
               throw DomainError("pair has no closed-form delta");
             return p.delta.eval(t);
           })
      .def("__repr__",
           [](const TransformPair& p) { return "TransformPair(" + p.name + ")"; });

  m.def("pair_power", &pair_power, py::arg("nu"), py::arg("rho"));
  m.def("pair_point_mass", &pair_point_mass, py::arg("t"), py::arg("rho"));
  m.def("pair_power_hyper", &pair_power_hyper, py::arg("nu"), py::arg("lambda_"),
        py::arg("rho"));
  m.def("pair_power_continued", &pair_power_continued, py::arg("nu"),
        py::arg("rho"));

  m.def(
      "forward",
      [](const TransformPair& pair, Cplx z, double rel_tol) {
        return forward_gst(pair.F, params_for(pair, rel_tol), z);
      },
      py::arg("pair"), py::arg("z"), py::arg("rel_tol") = 0.0);
  m.def("inverse", &inverse_dispatch, py::arg("pair"), py::arg("y"),
        py::arg("form") = "eq9", py::arg("rel_tol") = 0.0);
  m.def(
      "disc",
      [](const TransformPair& pair, double t, double rel_tol) {
        return discontinuity(pair.G, params_for(pair, rel_tol), t);
      },
      py::arg("pair"), py::arg("t"), py::arg("rel_tol") = 0.0);
  m.def(
      "delta_from_f",
      [](const TransformPair& pair, double t) {
        TransformParams tp = params_for(pair, 0.0);
        return delta_from_f(pair.F, tp, t);
      },
      py::arg("pair"), py::arg("t"));
  m.def("radial_inverse",
        [](const TransformPair& pair, double mu) {
          auto g = [&pair](Cplx zeta) { return pair.G.eval(zeta * zeta); };
          return radial_inverse(g, mu);
        },
        py::arg("pair"), py::arg("mu"));

  m.def(
      "chi_laplace_check",
      [](double rho, double x, double y) {
        KernelParams kp;
        kp.rho = rho;
        auto r = chi_laplace_check(rho, x, y, kp);
        return py::make_tuple(r.lhs, r.rhs);
      },
      py::arg("rho"), py::arg("x"), py::arg("y"));
  m.def(
      "chi_contour",
      [](double rho, double x, double t) { return chi_contour(rho, x, t); },
      py::arg("rho"), py::arg("x"), py::arg("t"));
  m.def(
      "contour_beta_identity",
      [](int n, double rho) {
        auto r = contour_beta_identity(n, rho);
        return py::make_tuple(r.lhs, r.rhs);
      },
      py::arg("n"), py::arg("rho"));
  m.def(
      "point_mass_sifting",
      [](double t, double rho) { return point_mass_sifting(t, rho); },
      py::arg("t"), py::arg("rho"));

  m.def(
      "run_suite",
      [](const std::string& suite, double rho) {
        py::list out;
        for (const CheckRecord& r : run_suite(suite, rho)) {
          py::dict d;
          d["check"] = r.check;
          py::dict params;
          for (const auto& [k, v] : r.params) params[k.c_str()] = v;
          d["params"] = params;
          d["lhs"] = r.lhs;
          d["rhs"] = r.rhs;
          d["abs_err"] = r.abs_err;
          d["rel_err"] = r.rel_err;
          d["pass"] = r.pass;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "all", py::arg("rho") = 0.0);
}
