#include "gst/branchfn.hpp"

#include <cmath>
#include <cstdlib>

namespace gst {

namespace {

bool on_cut(Cplx z) { return z.imag() == 0.0 && z.real() <= 0.0; }

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

Cplx lanczos_gamma(Cplx z) {
  // Requires Re(z) >= 0.5.
  z -= 1.0;
  Cplx acc = kLanczos[0];
  for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (z + static_cast<double>(k));
  Cplx t = z + 7.5;
  return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

}  // namespace

Cplx principal_pow(Cplx z, double a) {
  if (on_cut(z)) {
    if (z == Cplx(0.0, 0.0) && a > 0.0) return Cplx(0.0, 0.0);
    throw DomainError("principal_pow: argument on the closed negative real axis");
  }
  if (z.imag() == 0.0 && z.real() > 0.0) return Cplx(std::pow(z.real(), a), 0.0);
  return std::exp(a * std::log(z));
}

Cplx gamma_fn(Cplx x) {
  if (x.imag() == 0.0 && is_nonpositive_integer(x.real()))
    throw PoleError("gamma_fn: pole at non-positive integer");
  if (x.real() < 0.5) {
    // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)).
    return M_PI / (std::sin(M_PI * x) * lanczos_gamma(1.0 - x));
  }
  return lanczos_gamma(x);
}

double gamma_fn(double x) {
  if (is_nonpositive_integer(x))
    throw PoleError("gamma_fn: pole at non-positive integer");
  return gamma_fn(Cplx(x, 0.0)).real();
}

double beta_fn(double u, double v) {
  return gamma_fn(u) * gamma_fn(v) / gamma_fn(u + v);
}

Cplx gauss_2f1(double a, double b, double c, Cplx x) {
  if (is_nonpositive_integer(c))
    throw PoleError("gauss_2f1: c is a non-positive integer");
  if (std::abs(x) >= 0.95)
    throw DomainError("gauss_2f1: |x| >= 0.95 outside the declared validity domain");
  Cplx sum = 1.0;
  Cplx term = 1.0;
  constexpr int kMaxTerms = 10000;
  for (int n = 0; n < kMaxTerms; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x;
    sum += term;
    if (std::abs(term) <= 1e-12 * std::abs(sum) && n >= 2) return sum;
  }
  throw NonConvergence("gauss_2f1: series did not converge in 10^4 terms", sum,
                       std::abs(term), kMaxTerms);
}

}  // namespace gst
