#include "gst/transform.hpp"

#include <algorithm>
#include <cmath>

namespace gst {

namespace {

constexpr Cplx kI{0.0, 1.0};

void check_rho(const TransformParams& p) {
  if (!(p.rho > 0.0)) throw DomainError("TransformParams: rho must be > 0");
}

void check_off_cut(Cplx z, const char* who) {
  if (z.imag() == 0.0 && z.real() <= 0.0)
    throw DomainError(std::string(who) + ": z on the closed negative real axis");
}

// Inverse transforms return real values; a large imaginary residue signals a
// branch or contract violation in G.
double gate_imag(Cplx v, const char* who) {
  double re = v.real(), im = v.imag();
  if (std::abs(im) > std::max(1e-8, 1e-6 * std::abs(re)))
    throw ResidualImaginaryError(std::string(who) + ": imaginary residue above gate",
                                 re, im);
  return re;
}

// 4th-order complex central difference along the radial direction z/|z|;
// the argument of z never changes, so samples stay off the cut.
std::function<Cplx(Cplx)> make_deriv(const CutPlaneFunction& G,
                                     const TransformParams& p) {
  if (G.deriv) return G.deriv;
  auto eval = G.eval;
  double step = p.derivative_step;
  return [eval, step](Cplx z) -> Cplx {
    double h = step * std::max(std::abs(z), 1.0);
    Cplx e = z / std::abs(z);
    Cplx d = (-eval(z + 2.0 * h * e) + 8.0 * eval(z + h * e) -
              8.0 * eval(z - h * e) + eval(z - 2.0 * h * e)) /
             (12.0 * h);
    return d / e;
  };
}

// Density part of the forward transform with kernel (y + z)^-(rho + order).
// For z near the cut the real-axis integrand develops an unresolvable spike
// at y ~ |z|; when the density extends analytically we integrate along the
// ray arg y = sign(arg z) * pi/4 instead (the kernel singularity sits in the
// opposite half-plane, so no singularity is crossed).
// Sum of segment integrals for piecewise densities; smooth on each segment.
QuadResult integrate_segments(const std::vector<double>& bp,
                              const std::function<Cplx(double)>& f,
                              const QuadConfig& cfg) {
  QuadResult total;
  for (size_t i = 0; i + 1 < bp.size(); ++i) {
    QuadResult q = integrate_finite(Integrand(f), bp[i], bp[i + 1], cfg);
    total.value += q.value;
    total.err_estimate += q.err_estimate;
    total.evals += q.evals;
  }
  return total;
}

Cplx forward_density_integral(const SourceFunction& F, double rho, Cplx z,
                              const QuadConfig& cfg, double* err_out) {
  double split = std::max(1.0, std::abs(z));
  QuadResult q;
  if (!F.breakpoints.empty()) {
    q = integrate_segments(
        F.breakpoints,
        [&](double y) { return F.density(y) * principal_pow(y + z, -rho); },
        cfg);
  } else if (F.density_complex && std::abs(std::arg(z)) > 0.75 * M_PI) {
    double phi = std::arg(z) > 0.0 ? 0.25 * M_PI : -0.25 * M_PI;
    Cplx dir = std::exp(kI * phi);
    auto f = [&](double s) -> Cplx {
      if (s == 0.0) return 0.0;
      Cplx y = s * dir;
      return F.density_complex(y) * principal_pow(y + z, -rho) * dir;
    };
    q = integrate_semi_infinite(f, cfg, split);
  } else {
    auto f = [&](double y) -> Cplx {
      if (y == 0.0) return 0.0;
      return F.density(y) * principal_pow(y + z, -rho);
    };
    q = integrate_semi_infinite(f, cfg, split);
  }
  if (err_out) *err_out = q.err_estimate;
  return q.value;
}

}  // namespace

SourceFunction make_tabulated_source(const std::vector<double>& y,
                                     const std::vector<double>& f,
                                     double alpha) {
  if (y.size() != f.size() || y.size() < 2)
    throw DomainError("tabulated source: need matching grids with >= 2 points");
  for (size_t i = 0; i < y.size(); ++i) {
    if (y[i] <= 0.0 || (i > 0 && y[i] <= y[i - 1]))
      throw DomainError("tabulated source: y-grid must be strictly increasing and > 0");
  }
  SourceFunction src;
  src.alpha = alpha;
  src.family = SourceFamily::Tabulated;
  src.breakpoints = y;
  src.density = [y, f](double x) -> double {
    if (x <= y.front() || x >= y.back()) {
      // Zero extension; the endpoints themselves still interpolate.
      if (x == y.front()) return f.front();
      if (x == y.back()) return f.back();
      return 0.0;
    }
    auto it = std::upper_bound(y.begin(), y.end(), x);
    size_t i = static_cast<size_t>(it - y.begin());
    double t = (x - y[i - 1]) / (y[i] - y[i - 1]);
    return f[i - 1] + t * (f[i] - f[i - 1]);
  };
  return src;
}

Cplx forward_gst(const SourceFunction& F, const TransformParams& p, Cplx z,
                 double* err_out) {
  check_rho(p);
  check_off_cut(z, "forward_gst");
  if (F.has_density() || F.density_complex) {
    if (!(F.alpha > 0.0 && F.alpha < p.rho))
      throw DomainError("forward_gst: admissibility exponent alpha outside (0, rho)");
  } else if (F.point_masses.empty()) {
    throw DomainError("forward_gst: source has neither density nor point masses");
  }
  Cplx value = 0.0;
  double err = 0.0;
  if (F.has_density() || F.density_complex)
    value = forward_density_integral(F, p.rho, z, p.quad, &err);
  for (const auto& pm : F.point_masses)
    value += pm.weight * principal_pow(pm.location + z, -p.rho);
  if (err_out) *err_out = err;
  return value;
}

double inverse_gst(const CutPlaneFunction& G, const TransformParams& p, double y,
                   double* err_out) {
  check_rho(p);
  if (!(y > 0.0)) throw DomainError("inverse_gst: y must be > 0");
  auto gp = make_deriv(G, p);
  double rho = p.rho;
  auto integrand = [&](Cplx w, Cplx u) -> Cplx {
    return principal_pow(u, rho - 1.0) * gp(y * w);
  };
  QuadResult q = integrate_contour(integrand, ContourSpec{1.0}, p.quad);
  Cplx value = kI / (2.0 * M_PI) * std::pow(y, rho) * q.value;
  if (err_out) *err_out = std::pow(y, rho) / (2.0 * M_PI) * q.err_estimate;
  return gate_imag(value, "inverse_gst");
}

double inverse_gst_zplane(const CutPlaneFunction& G, const TransformParams& p,
                          double y, double* err_out) {
  check_rho(p);
  if (!(y > 0.0)) throw DomainError("inverse_gst_zplane: y must be > 0");
  auto gp = make_deriv(G, p);
  double rho = p.rho;
  // (y + z)^{rho-1} = y^{rho-1} u^{rho-1} on the circle |z| = y.
  auto integrand = [&](Cplx z, Cplx u) -> Cplx {
    return principal_pow(u, rho - 1.0) * gp(z);
  };
  QuadResult q = integrate_contour(integrand, ContourSpec{y}, p.quad);
  Cplx value = kI / (2.0 * M_PI) * std::pow(y, rho - 1.0) * q.value;
  if (err_out) *err_out = std::pow(y, rho - 1.0) / (2.0 * M_PI) * q.err_estimate;
  return gate_imag(value, "inverse_gst_zplane");
}

double inverse_gst_ibp(const CutPlaneFunction& G, const TransformParams& p,
                       double y, double* err_out) {
  check_rho(p);
  if (!(p.rho > 1.0))
    throw DomainError("inverse_gst_ibp: only well-defined for rho > 1");
  if (!(y > 0.0)) throw DomainError("inverse_gst_ibp: y must be > 0");
  double rho = p.rho;
  auto integrand = [&](Cplx z, Cplx u) -> Cplx {
    return principal_pow(u, rho - 2.0) * G.eval(z);
  };
  QuadResult q = integrate_contour(integrand, ContourSpec{y}, p.quad);
  Cplx value = (rho - 1.0) * -kI / (2.0 * M_PI) * std::pow(y, rho - 2.0) * q.value;
  if (err_out)
    *err_out = (rho - 1.0) * std::pow(y, rho - 2.0) / (2.0 * M_PI) * q.err_estimate;
  return gate_imag(value, "inverse_gst_ibp");
}

double discontinuity(const CutPlaneFunction& G, const TransformParams& p,
                     double t, double* err_out) {
  if (!(t > 0.0)) throw DomainError("discontinuity: t must be > 0");
  auto jump = [&](double eps) -> Cplx {
    return (G.eval(Cplx(-t, -eps)) - G.eval(Cplx(-t, eps))) / (2.0 * M_PI * kI);
  };
  double eps = p.disc_offset * t;
  Cplx d1 = jump(eps);
  Cplx d2 = jump(0.5 * eps);
  Cplx value = 2.0 * d2 - d1;  // one Richardson step: the limit is linear in eps
  if (err_out) *err_out = std::abs(d2 - d1);
  return gate_imag(value, "discontinuity");
}

double stieltjes_disc_inverse(const CutPlaneFunction& G, const TransformParams& p,
                              double y, double* err_out) {
  if (std::abs(p.rho - 1.0) > 1e-12)
    throw DomainError("stieltjes_disc_inverse: requires rho = 1");
  return discontinuity(G, p, y, err_out);
}

double abel_inverse_from_delta(const DiscontinuityFn& delta,
                               const TransformParams& p, double y) {
  check_rho(p);
  if (!(p.rho > 1.0))
    throw DomainError("abel_inverse_from_delta: requires rho > 1");
  if (!(y > 0.0)) throw DomainError("abel_inverse_from_delta: y must be > 0");
  if (!delta.eval) throw DomainError("abel_inverse_from_delta: empty discontinuity");
  double rho = p.rho;
  auto f = [&](double t, double, double from_b) -> Cplx {
    return std::pow(from_b, rho - 2.0) * delta.eval(t);
  };
  QuadResult q = integrate_finite(EndpointIntegrand(f), 0.0, y, p.quad);
  return (rho - 1.0) * q.value.real();
}

double abel_inverse_from_delta_prime(const std::function<double(double)>& delta_prime,
                                     const TransformParams& p, double y) {
  check_rho(p);
  if (!(y > 0.0))
    throw DomainError("abel_inverse_from_delta_prime: y must be > 0");
  double rho = p.rho;
  auto f = [&](double t, double, double from_b) -> Cplx {
    return std::pow(from_b, rho - 1.0) * delta_prime(t);
  };
  QuadResult q = integrate_finite(EndpointIntegrand(f), 0.0, y, p.quad);
  return q.value.real();
}

double delta_from_f(const SourceFunction& F, const TransformParams& p, double t) {
  check_rho(p);
  if (!(p.rho < 2.0)) throw DomainError("delta_from_f: requires rho < 2");
  if (!(t > 0.0)) throw DomainError("delta_from_f: t must be > 0");
  if (!F.has_density()) throw DomainError("delta_from_f: source needs a density");
  if (std::abs(F.density(1e-10)) > 1e-3)
    throw DomainError("delta_from_f: requires F(0) = 0");
  if (std::abs(p.rho - 1.0) < 1e-12) return F.density(t);  // Delta = F at rho = 1
  double rho = p.rho;
  std::function<double(double)> fp = F.density_deriv;
  if (!fp) {
    auto dens = F.density;
    fp = [dens](double y) {
      double h = 1e-6 * y;
      return (dens(y + h) - dens(y - h)) / (2.0 * h);
    };
  }
  auto f = [&](double y, double, double from_b) -> Cplx {
    return std::pow(from_b, 1.0 - rho) * fp(y);
  };
  QuadResult q = integrate_finite(EndpointIntegrand(f), 0.0, t, p.quad);
  return std::sin(M_PI * rho) / (M_PI * (1.0 - rho)) * q.value.real();
}

double radial_inverse(const std::function<Cplx(Cplx)>& g, double mu,
                      const QuadConfig& cfg) {
  if (!(mu > 0.0)) throw DomainError("radial_inverse: mu must be > 0");
  // f(mu) = (mu^2 / pi) int_{-pi/2}^{pi/2} e^{2 i phi} g(mu e^{i phi})
  //         / sqrt(1 + e^{2 i phi}) dphi   (right semicircle zeta = mu e^{i phi}).
  auto f = [&](double phi, double from_a, double from_b) -> Cplx {
    double d = std::min(from_a, from_b);
    int side = from_b <= from_a ? +1 : -1;  // +1: near phi = +pi/2
    Cplx e1, e2, one_plus;                  // e^{i phi}, e^{2 i phi}, 1 + e^{2 i phi}
    if (d < 0.3) {
      double sd = std::sin(d), cd = std::cos(d);
      double s2 = std::sin(2.0 * d), c2 = std::cos(2.0 * d);
      e1 = Cplx(sd, side * cd);
      e2 = Cplx(-c2, side * s2);
      one_plus = Cplx(2.0 * sd * sd, side * s2);
    } else {
      e1 = std::exp(kI * phi);
      e2 = e1 * e1;
      one_plus = 1.0 + e2;
    }
    return e2 * g(mu * e1) / std::sqrt(one_plus);
  };
  QuadResult q = integrate_finite(EndpointIntegrand(f), -0.5 * M_PI, 0.5 * M_PI, cfg);
  Cplx value = mu * mu / M_PI * q.value;
  return gate_imag(value, "radial_inverse");
}

double laplace(const SourceFunction& F, double x, const QuadConfig& cfg) {
  if (!(x > 0.0)) throw DomainError("laplace: x must be > 0");
  double value = 0.0;
  if (F.has_density()) {
    auto f = [&](double y) -> Cplx {
      double e = std::exp(-x * y);
      if (e == 0.0) return 0.0;
      return e * F.density(y);
    };
    if (!F.breakpoints.empty()) {
      value = integrate_segments(F.breakpoints, f, cfg).value.real();
    } else {
      // Head (0, y1) carries the possible y = 0 singularity; the rest up to
      // the underflow point of e^{-x y} goes under a log substitution, which
      // stays accurate whether the mass sits at y ~ 1 or at y ~ 1/x.
      double y1 = std::min(1.0, 1.0 / x);
      double y2 = 746.0 / x;  // exp(-x y) == 0 beyond
      QuadResult head = integrate_finite(f, 0.0, y1, cfg);
      QuadResult rest = integrate_finite(
          Integrand([&](double t) {
            double y = y1 * std::exp(t);
            return y * f(y);
          }),
          0.0, std::log(y2 / y1), cfg);
      value = head.value.real() + rest.value.real();
    }
  }
  for (const auto& pm : F.point_masses)
    value += pm.weight * std::exp(-x * pm.location);
  return value;
}

double iterated_laplace_forward(const SourceFunction& F, const TransformParams& p,
                                double z) {
  check_rho(p);
  if (!(z > 0.0)) throw DomainError("iterated_laplace_forward: z must be > 0");
  QuadConfig inner = p.quad;
  inner.rel_tol = std::max(1e-9, inner.rel_tol);
  inner.abs_tol = std::max(1e-12, inner.abs_tol);
  inner.max_level = std::min(inner.max_level, 9);
  QuadConfig outer = inner;
  double rho = p.rho;
  auto f = [&](double x) -> Cplx {
    double e = std::exp(-x * z);
    if (e == 0.0 || x == 0.0) return 0.0;
    return std::pow(x, rho - 1.0) * e * laplace(F, x, inner);
  };
  QuadResult q = integrate_semi_infinite(f, outer, std::max(1.0, 1.0 / z));
  return q.value.real() / gamma_fn(rho);
}

}  // namespace gst
