#include "gst/verify.hpp"

#include <cmath>
#include <complex>

#include "gst/catalog.hpp"
#include "gst/kernelcheck.hpp"
#include "gst/transform.hpp"

namespace gst {

namespace {

using Params = std::vector<std::pair<std::string, double>>;

CheckRecord record(std::string check, Params params, double lhs, double rhs,
                   double tol_rel, double tol_abs = 0.0) {
  CheckRecord r;
  r.check = std::move(check);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_err = std::abs(lhs - rhs);
  r.rel_err = r.abs_err / std::max(std::abs(rhs), 1e-300);
  r.pass = r.abs_err <= std::max(tol_abs, tol_rel * std::abs(rhs));
  return r;
}

bool is_integer(double rho) { return std::abs(rho - std::round(rho)) < 1e-9; }

void suite_kernel(std::vector<CheckRecord>& out, double rho_override) {
  std::vector<double> grid_rhos = {0.5, 1.5, 2.5};
  std::vector<double> laplace_rhos = {0.5, 1.5, 2.5, 1.0, 2.0};
  std::vector<double> beta_rhos = {0.3, 0.7, 1.4, 2.6};
  if (rho_override > 0.0) {
    laplace_rhos = {rho_override};
    grid_rhos = is_integer(rho_override) ? std::vector<double>{}
                                         : std::vector<double>{rho_override};
    beta_rhos = grid_rhos;
  }

  const std::vector<double> xs = {0.5, 1.0, 2.0, 4.0};
  for (double rho : grid_rhos) {
    for (double x : xs) {
      for (double t : xs) {
        if (std::abs(x - t) < 0.1 * std::max(x, t)) continue;
        double bound = 1e-8 * std::pow(std::max(x, t), -rho - 1.0);
        double chi = std::abs(chi_contour(rho, x, t));
        out.push_back(record("chi_offdiagonal",
                             {{"rho", rho}, {"x", x}, {"t", t}}, chi, 0.0, 0.0,
                             bound));
        if (x < t) {
          double res = chi_symmetry_residual(rho, x, t);
          out.push_back(record("chi_symmetry",
                               {{"rho", rho}, {"x", x}, {"t", t}}, res, 0.0,
                               0.0, 2e-8));
        }
      }
    }
  }

  KernelParams kp;
  for (double rho : laplace_rhos) {
    kp.rho = rho;
    for (double x : {0.5, 1.0, 2.0}) {
      for (double y : {0.5, 1.0}) {
        auto lc = chi_laplace_check(rho, x, y, kp);
        out.push_back(record("chi_laplace",
                             {{"rho", rho}, {"x", x}, {"y", y}}, lc.lhs, lc.rhs,
                             1e-4));
      }
    }
  }

  for (double rho : beta_rhos) {
    for (int n = 0; n <= 10; ++n) {
      auto bi = contour_beta_identity(n, rho);
      out.push_back(record("contour_beta",
                           {{"rho", rho}, {"n", static_cast<double>(n)}},
                           bi.lhs.real(), bi.rhs, 1e-8));
      out.push_back(record("contour_beta_imag",
                           {{"rho", rho}, {"n", static_cast<double>(n)}},
                           bi.lhs.imag(), 0.0, 0.0,
                           1e-8 * std::max(1.0, std::abs(bi.rhs))));
    }
  }
}

void suite_sifting(std::vector<CheckRecord>& out) {
  double t = 1.0, rho = 1.5;
  double lhs = point_mass_sifting(t, rho);
  out.push_back(
      record("point_mass_sifting", {{"t", t}, {"rho", rho}}, lhs,
             std::exp(-t), 1e-3));
}

void suite_roundtrip(std::vector<CheckRecord>& out) {
  // Forward accuracy against the closed-form power pair.
  for (double rho : {0.5, 1.0, 1.5, 2.5}) {
    double nu = 0.5 * rho;
    auto pair = pair_power(nu, rho);
    TransformParams tp;
    tp.rho = rho;
    for (Cplx z : {Cplx(0.5, 0.0), Cplx(1.0, 0.0), Cplx(2.0, 1.0)}) {
      Cplx got = forward_gst(pair.F, tp, z);
      Cplx want = pair.G.eval(z);
      double rel = std::abs(got - want) / std::abs(want);
      out.push_back(record("forward_power",
                           {{"rho", rho},
                            {"nu", nu},
                            {"z_re", z.real()},
                            {"z_im", z.imag()}},
                           rel, 0.0, 0.0, 1e-7));
    }
  }
  // Inverse round trip, table rows 1 and 3.
  std::vector<TransformPair> pairs = {pair_power(0.5, 1.5),
                                      pair_power_hyper(0.5, 1.0, 1.5)};
  for (const auto& pair : pairs) {
    TransformParams tp;
    tp.rho = pair.rho;
    for (double y : {0.25, 1.0, 4.0}) {
      double got = inverse_gst(pair.G, tp, y);
      double want = pair.F.density(y);
      out.push_back(record("inverse_roundtrip",
                           {{"rho", pair.rho}, {"y", y}}, got, want, 1e-6));
    }
  }
}

void suite_forms(std::vector<CheckRecord>& out) {
  auto pair = pair_power(1.2, 1.5);
  TransformParams tp;
  tp.rho = pair.rho;
  const char* names[4] = {"eq9", "eq14", "eq15", "abel"};
  for (double y : {0.5, 1.0, 2.0}) {
    double v[4];
    v[0] = inverse_gst(pair.G, tp, y);
    v[1] = inverse_gst_zplane(pair.G, tp, y);
    v[2] = inverse_gst_ibp(pair.G, tp, y);
    v[3] = abel_inverse_from_delta(pair.delta, tp, y);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        out.push_back(record(std::string("forms_") + names[i] + "_" + names[j],
                             {{"rho", pair.rho}, {"y", y}}, v[i], v[j], 1e-6));
  }
  // rho = 1: the contour inverse equals the discontinuity formula.
  auto p1 = pair_power(0.5, 1.0);
  TransformParams tp1;
  tp1.rho = 1.0;
  for (double y : {0.5, 1.0, 2.0}) {
    double a = inverse_gst(p1.G, tp1, y);
    double b = stieltjes_disc_inverse(p1.G, tp1, y);
    out.push_back(
        record("forms_rho1_disc", {{"rho", 1.0}, {"y", y}}, a, b, 1e-6));
  }
}

void suite_laplace(std::vector<CheckRecord>& out) {
  std::vector<TransformPair> pairs = {pair_power(0.5, 1.5),
                                      pair_point_mass(1.0, 1.5),
                                      pair_power_hyper(0.5, 1.0, 1.5)};
  for (size_t i = 0; i < pairs.size(); ++i) {
    TransformParams tp;
    tp.rho = pairs[i].rho;
    for (double z : {0.5, 1.0, 2.0}) {
      double lhs = iterated_laplace_forward(pairs[i].F, tp, z);
      double rhs = forward_gst(pairs[i].F, tp, Cplx(z, 0.0)).real();
      out.push_back(record("iterated_laplace",
                           {{"pair", static_cast<double>(i)}, {"z", z}}, lhs,
                           rhs, 1e-4));
    }
  }
}

void suite_abel(std::vector<CheckRecord>& out) {
  for (double rho : {1.2, 1.8}) {
    auto pair = pair_power_continued(1.5, rho);
    TransformParams tp;
    tp.rho = rho;
    for (double t : {0.5, 1.0, 2.0}) {
      double lhs = delta_from_f(pair.F, tp, t);
      double rhs = discontinuity(pair.G, tp, t);
      out.push_back(record("abel_delta_from_f",
                           {{"rho", rho}, {"nu", 1.5}, {"t", t}}, lhs, rhs,
                           1e-4));
    }
  }
  auto pair = pair_power_continued(1.5, 1.0);
  TransformParams tp;
  tp.rho = 1.0;
  for (double t : {0.5, 1.0, 2.0}) {
    double lhs = delta_from_f(pair.F, tp, t);
    out.push_back(record("abel_rho1", {{"rho", 1.0}, {"t", t}}, lhs,
                         pair.F.density(t), 1e-10));
  }
}

void suite_radial(std::vector<CheckRecord>& out) {
  for (double nu : {0.5, 1.0}) {
    auto pair = pair_power(nu, 1.5);
    auto g = [&pair](Cplx zeta) { return pair.G.eval(zeta * zeta); };
    for (double mu : {0.5, 1.0, 2.0}) {
      double lhs = radial_inverse(g, mu);
      double rhs = 2.0 * mu * pair.F.density(mu * mu);
      out.push_back(
          record("radial_inverse", {{"nu", nu}, {"mu", mu}}, lhs, rhs, 1e-6));
    }
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "kernel", "sifting", "roundtrip", "forms", "laplace", "abel", "radial",
      "all"};
  return names;
}

std::vector<CheckRecord> run_suite(const std::string& suite,
                                   double rho_override) {
  std::vector<CheckRecord> out;
  bool all = suite == "all";
  bool known = all;
  if (all || suite == "kernel") suite_kernel(out, rho_override), known = true;
  if (all || suite == "sifting") suite_sifting(out), known = true;
  if (all || suite == "roundtrip") suite_roundtrip(out), known = true;
  if (all || suite == "forms") suite_forms(out), known = true;
  if (all || suite == "laplace") suite_laplace(out), known = true;
  if (all || suite == "abel") suite_abel(out), known = true;
  if (all || suite == "radial") suite_radial(out), known = true;
  if (!known) throw DomainError("run_suite: unknown suite '" + suite + "'");
  return out;
}

}  // namespace gst
