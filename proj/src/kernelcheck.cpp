#include "gst/kernelcheck.hpp"

#include <cmath>
#include <vector>

namespace gst {

namespace {

constexpr Cplx kI{0.0, 1.0};

void validate(const KernelParams& kp) {
  if (!(kp.rho > 0.0)) throw DomainError("KernelParams: rho must be > 0");
  if (kp.series_terms < 10)
    throw DomainError("KernelParams: series_terms must be >= 10");
  if (!(kp.laplace_cutoff > 0.0))
    throw DomainError("KernelParams: laplace_cutoff must be > 0");
}

bool is_integer_rho(double rho) {
  return std::abs(rho - std::round(rho)) < 1e-9 && std::round(rho) >= 1.0;
}

// c_0 .. c_{N-1} from (n + 1 - rho) c_{n+1} = c_n, c_0 = 1/rho.
std::vector<double> i2_coeffs(double rho, int terms) {
  std::vector<double> c(terms);
  c[0] = 1.0 / rho;
  for (int n = 0; n + 1 < terms; ++n) c[n + 1] = c[n] / (n + 1.0 - rho);
  return c;
}

Cplx i2_sum(Cplx u, double rho, const KernelParams& kp, bool deriv) {
  validate(kp);
  if (is_integer_rho(rho))
    throw DomainError("i2: series split requires non-integer rho");
  const int terms = kp.series_terms;
  std::vector<double> c = i2_coeffs(rho, terms);
  Cplx sum = 0.0;
  Cplx upow = 1.0;  // u^n, or u^{n-1} entering the derivative terms
  if (deriv) {
    for (int n = 1; n < terms; ++n) {
      sum += static_cast<double>(n) * c[n] * upow;
      upow *= u;
    }
  } else {
    for (int n = 0; n < terms; ++n) {
      sum += c[n] * upow;
      upow *= u;
    }
  }
  // Tail bound: once n + 1 - rho > 2 |u| the terms decay faster than 2^-k.
  double tail = 2.0 * terms * std::abs(c[terms - 1]) * std::abs(upow);
  if (!(terms - rho > 2.0 * std::abs(u)) ||
      tail > 1e-12 * std::max(1.0, std::abs(sum)))
    throw SeriesTruncationError("i2: series_terms too small for this |u|");
  return sum;
}

// A(1) = int_0^inf e^{-s} / (u + s) ds = -log u + int_0^inf e^{-s} log(u+s) ds,
// then A(m+1) = (u^{-m} - A(m)) / m; I(u) = A(rho + 1) at integer rho.
// The log integral is split at s0 = max(0, -Re u) so the near-singularity of
// log(u + s) for u close to the negative real axis sits at an endpoint.
Cplx i_integer(Cplx u, int n, const QuadConfig& cfg) {
  double s0 = std::max(0.0, -u.real());
  Cplx L = 0.0;
  if (s0 > 0.0) {
    L += integrate_finite(
             Integrand([&](double s) { return std::exp(-s) * std::log(u + s); }),
             0.0, s0, cfg)
             .value;
  }
  L += integrate_semi_infinite(
           [&](double r) -> Cplx {
             double e = std::exp(-(s0 + r));
             if (e == 0.0) return 0.0;
             return e * std::log(u + s0 + r);
           },
           cfg, 1.0)
           .value;
  Cplx a = -std::log(u) + L;
  for (int m = 1; m <= n; ++m)
    a = (principal_pow(u, -static_cast<double>(m)) - a) / static_cast<double>(m);
  return a;
}

double gate_real(Cplx v, const char* what) {
  double scale = std::max(1e-8, 1e-6 * std::abs(v.real()));
  if (std::abs(v.imag()) > scale)
    throw ResidualImaginaryError(std::string(what) + ": imaginary residue above gate",
                                 v.real(), v.imag());
  return v.real();
}

}  // namespace

Cplx chi_contour(double rho, double x, double t, const QuadConfig& cfg) {
  if (!(rho > 0.0)) throw DomainError("chi_contour: rho must be > 0");
  if (!(x > 0.0 && t > 0.0)) throw DomainError("chi_contour: x, t must be > 0");
  if (std::abs(x - t) < 0.05 * std::max(x, t))
    throw DomainError("chi_contour: too close to the diagonal; use chi_laplace_check");
  QuadConfig c = cfg;
  c.abs_tol = std::min(c.abs_tol, 1e-12);
  c.max_level = std::max(c.max_level, 11);
  auto g = [&](Cplx w, Cplx u) -> Cplx {
    return principal_pow(u, rho - 1.0) * principal_pow(x + t * w, -rho - 1.0);
  };
  Cplx q = integrate_contour(g, ContourSpec{1.0}, c).value;
  return rho * q / (2.0 * M_PI * kI);
}

double chi_symmetry_residual(double rho, double x, double t,
                             const QuadConfig& cfg) {
  return std::abs(chi_contour(rho, x, t, cfg) - chi_contour(rho, t, x, cfg));
}

Cplx i2_eval(Cplx u, double rho, const KernelParams& kp) {
  return i2_sum(u, rho, kp, false);
}

Cplx i2_deriv(Cplx u, double rho, const KernelParams& kp) {
  return i2_sum(u, rho, kp, true);
}

Cplx i_defining(Cplx u, double rho, const QuadConfig& cfg) {
  if (!(rho > 0.0)) throw DomainError("i_defining: rho must be > 0");
  auto f = [&](double s) -> Cplx {
    double e = std::exp(-s);
    if (e == 0.0) return 0.0;
    return e * principal_pow(u + s, -rho - 1.0);
  };
  return integrate_semi_infinite(f, cfg, std::max(1.0, std::abs(u))).value;
}

LaplaceCheck chi_laplace_check(double rho, double x, double y,
                               const KernelParams& kp) {
  validate(kp);
  if (!(x > 0.0 && y > 0.0))
    throw DomainError("chi_laplace_check: x, y must be > 0");
  const double xy = x * y;
  LaplaceCheck out;
  out.rhs = std::pow(x, -rho) * std::exp(-xy);

  QuadConfig outer = kp.quad;
  outer.max_level = std::max(outer.max_level, 11);
  Cplx q;
  if (is_integer_rho(rho)) {
    int n = static_cast<int>(std::round(rho));
    QuadConfig inner = kp.quad;
    inner.rel_tol = std::max(inner.rel_tol, 1e-9);
    inner.abs_tol = std::max(inner.abs_tol, 1e-13);
    inner.max_level = 9;
    outer.rel_tol = std::max(outer.rel_tol, 1e-8);
    auto g = [&](Cplx w, Cplx u) -> Cplx {
      return principal_pow(u, rho - 1.0) * i_integer(xy * w, n, inner);
    };
    q = integrate_contour(g, ContourSpec{1.0}, outer).value;
    q *= rho * std::pow(y, rho) / (2.0 * M_PI * kI);
  } else {
    auto g = [&](Cplx w, Cplx u) -> Cplx {
      return principal_pow(u, rho - 1.0) * principal_pow(w, -rho) *
             i2_eval(xy * w, rho, kp);
    };
    q = integrate_contour(g, ContourSpec{1.0}, outer).value;
    q *= rho * std::pow(x, -rho) / (2.0 * M_PI * kI);
  }
  out.lhs = gate_real(q, "chi_laplace_check");
  return out;
}

BetaIdentity contour_beta_identity(int n, double rho, const QuadConfig& cfg) {
  if (n < 0 || n > 20)
    throw DomainError("contour_beta_identity: requires 0 <= n <= 20");
  if (!(rho > 0.0) || is_integer_rho(rho))
    throw DomainError("contour_beta_identity: rho must be positive non-integer");
  QuadConfig c = cfg;
  c.max_level = std::max(c.max_level, 11);
  auto g = [&](Cplx w, Cplx u) -> Cplx {
    return principal_pow(u, rho - 1.0) * principal_pow(w, n - rho);
  };
  BetaIdentity out;
  out.lhs = integrate_contour(g, ContourSpec{1.0}, c).value / (2.0 * M_PI * kI);
  std::vector<double> coef = i2_coeffs(rho, n + 1);
  double fact = 1.0;
  for (int k = 2; k <= n; ++k) fact *= k;
  out.rhs = ((n % 2 == 0) ? 1.0 : -1.0) / (rho * coef[n] * fact);
  return out;
}

double point_mass_sifting(double t, double rho, const QuadConfig& cfg) {
  if (!(t > 0.0)) throw DomainError("point_mass_sifting: t must be > 0");
  if (!(rho > 0.0)) throw DomainError("point_mass_sifting: rho must be > 0");
  QuadConfig inner = cfg;
  inner.rel_tol = std::max(inner.rel_tol, 1e-9);
  inner.abs_tol = std::max(inner.abs_tol, 1e-12);
  inner.max_level = 9;
  QuadConfig outer = cfg;
  outer.rel_tol = std::max(outer.rel_tol, 1e-8);
  outer.max_level = std::max(outer.max_level, 11);

  // int_0^inf e^{-y} F_inv(y) dy with the y-integral taken inside the contour
  // integral; the y-path rotates to arg y = -sign(Im w) pi/4, which keeps
  // t + y w off the branch cut and e^{-y} decaying.
  auto g = [&](Cplx w, Cplx u) -> Cplx {
    double side = w.imag() >= 0.0 ? -1.0 : 1.0;
    Cplx dir = std::exp(kI * (side * 0.25 * M_PI));
    auto inner_f = [&](double s) -> Cplx {
      if (s == 0.0) return 0.0;
      Cplx yv = s * dir;
      Cplx e = std::exp(-yv);
      return e * principal_pow(yv, rho) * principal_pow(t + yv * w, -rho - 1.0) * dir;
    };
    Cplx j = rho * integrate_semi_infinite(inner_f, inner, std::max(1.0, t)).value;
    return principal_pow(u, rho - 1.0) * j;
  };
  Cplx q = integrate_contour(g, ContourSpec{1.0}, outer).value / (2.0 * M_PI * kI);
  return gate_real(q, "point_mass_sifting");
}

}  // namespace gst
