#include "gst/catalog.hpp"

#include <cmath>
#include <sstream>

namespace gst {

namespace {

constexpr Cplx kI{0.0, 1.0};

std::string fmt_name(const char* family, std::initializer_list<std::pair<const char*, double>> kv) {
  std::ostringstream os;
  os << family << "(";
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) os << ",";
    os << k << "=" << v;
    first = false;
  }
  os << ")";
  return os.str();
}

SourceFunction power_law_source(double nu, double alpha) {
  SourceFunction F;
  F.family = SourceFamily::PowerLaw;
  F.alpha = alpha;
  F.density = [nu](double y) { return std::pow(y, nu - 1.0); };
  F.density_complex = [nu](Cplx y) { return principal_pow(y, nu - 1.0); };
  F.density_deriv = [nu](double y) { return (nu - 1.0) * std::pow(y, nu - 2.0); };
  return F;
}

TransformPair power_pair_impl(double nu, double rho) {
  double b = beta_fn(nu, rho - nu);
  TransformPair pair;
  pair.name = fmt_name("power", {{"nu", nu}, {"rho", rho}});
  pair.rho = rho;
  // alpha sits in the admissible window (rho - nu, rho).
  pair.F = power_law_source(nu, rho - 0.5 * std::min(nu, rho));
  pair.G.eval = [b, nu, rho](Cplx z) { return b * principal_pow(z, nu - rho); };
  pair.G.deriv = [b, nu, rho](Cplx z) {
    return (nu - rho) * b * principal_pow(z, nu - rho - 1.0);
  };
  pair.G.beta = rho - nu;
  double dcoef = b * std::sin(M_PI * (rho - nu)) / M_PI;
  pair.delta.eval = [dcoef, nu, rho](double t) {
    return dcoef * std::pow(t, nu - rho);
  };
  return pair;
}

}  // namespace

TransformPair pair_power(double nu, double rho) {
  if (!(nu > 0.0 && nu < rho))
    throw DomainError("pair_power: requires 0 < nu < rho");
  return power_pair_impl(nu, rho);
}

TransformPair pair_power_continued(double nu, double rho) {
  if (!(nu > 0.0 && rho > 0.0))
    throw DomainError("pair_power_continued: requires nu > 0, rho > 0");
  TransformPair pair = power_pair_impl(nu, rho);
  pair.name = fmt_name("power_continued", {{"nu", nu}, {"rho", rho}});
  return pair;
}

TransformPair pair_point_mass(double t, double rho) {
  if (!(t > 0.0)) throw DomainError("pair_point_mass: requires t > 0");
  if (!(rho > 0.0)) throw DomainError("pair_point_mass: requires rho > 0");
  TransformPair pair;
  pair.name = fmt_name("point", {{"t", t}, {"rho", rho}});
  pair.rho = rho;
  pair.F.family = SourceFamily::PointMass;
  pair.F.alpha = 0.5 * rho;
  pair.F.point_masses = {{t, 1.0}};
  pair.G.eval = [t, rho](Cplx z) { return principal_pow(t + z, -rho); };
  pair.G.deriv = [t, rho](Cplx z) {
    return -rho * principal_pow(t + z, -rho - 1.0);
  };
  pair.G.beta = rho;
  return pair;
}

TransformPair pair_power_hyper(double nu, double lambda, double rho) {
  if (!(nu > 0.0 && nu < rho + lambda))
    throw DomainError("pair_power_hyper: requires 0 < nu < rho + lambda");
  if (!(rho > 0.0)) throw DomainError("pair_power_hyper: requires rho > 0");
  double c = rho + lambda;
  double b = beta_fn(nu, rho + lambda - nu);

  TransformPair pair;
  pair.name = fmt_name("hyper", {{"nu", nu}, {"lambda", lambda}, {"rho", rho}});
  pair.rho = rho;
  pair.F.family = SourceFamily::PowerHyper;
  double lo = std::max(0.0, rho - nu), hi = std::min(rho, rho + lambda - nu);
  pair.F.alpha = 0.5 * (lo + hi);
  pair.F.density = [nu, lambda](double y) {
    return std::pow(y, nu - 1.0) * std::pow(1.0 + y, -lambda);
  };
  pair.F.density_complex = [nu, lambda](Cplx y) {
    return principal_pow(y, nu - 1.0) * principal_pow(1.0 + y, -lambda);
  };
  pair.F.density_deriv = [nu, lambda](double y) {
    return (nu - 1.0) * std::pow(y, nu - 2.0) * std::pow(1.0 + y, -lambda) -
           lambda * std::pow(y, nu - 1.0) * std::pow(1.0 + y, -lambda - 1.0);
  };

  auto density_c = pair.F.density_complex;
  QuadConfig cfg;
  cfg.rel_tol = 1e-11;
  cfg.abs_tol = 1e-14;
  cfg.max_level = 11;
  // Defining integral with kernel (y + z)^-(rho + order); rotated onto the
  // ray arg y = sign(arg z) * pi/4 when z approaches the cut.
  auto numeric = [density_c, cfg](double expo, Cplx z) -> Cplx {
    double split = std::max(1.0, std::abs(z));
    if (std::abs(std::arg(z)) > 0.5 * M_PI) {
      double phi = std::arg(z) > 0.0 ? 0.25 * M_PI : -0.25 * M_PI;
      Cplx dir = std::exp(kI * phi);
      auto f = [&](double s) -> Cplx {
        if (s == 0.0) return 0.0;
        Cplx y = s * dir;
        return density_c(y) * principal_pow(y + z, -expo) * dir;
      };
      return integrate_semi_infinite(f, cfg, split).value;
    }
    auto f = [&](double y) -> Cplx {
      if (y == 0.0) return 0.0;
      return density_c(Cplx(y, 0.0)) * principal_pow(y + z, -expo);
    };
    return integrate_semi_infinite(f, cfg, split).value;
  };

  pair.G.eval = [b, nu, lambda, rho, c, numeric](Cplx z) -> Cplx {
    Cplx x = 1.0 - z;
    if (std::abs(x) < 0.9)
      return b * principal_pow(z, nu - rho) * gauss_2f1(nu, lambda, c, x);
    return numeric(rho, z);
  };
  pair.G.deriv = [b, nu, lambda, rho, c, numeric](Cplx z) -> Cplx {
    Cplx x = 1.0 - z;
    if (std::abs(x) < 0.9) {
      Cplx h = gauss_2f1(nu, lambda, c, x);
      Cplx hp = gauss_2f1(nu + 1.0, lambda + 1.0, c + 1.0, x);
      return b * ((nu - rho) * principal_pow(z, nu - rho - 1.0) * h -
                  nu * lambda / c * principal_pow(z, nu - rho) * hp);
    }
    return -rho * numeric(rho + 1.0, z);
  };
  pair.G.beta = rho - nu + std::min(lambda, nu);
  return pair;
}

}  // namespace gst
