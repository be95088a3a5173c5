#pragma once

#include "gst/branchfn.hpp"
#include "gst/quadrature.hpp"

namespace gst {

struct KernelParams {
  double rho = 1.5;        // kernel index, > 0
  QuadConfig quad{};
  int series_terms = 60;   // truncation order for the I2 series, >= 10
  double laplace_cutoff = 40.0;
};

// chi_rho(x, t) = (rho / 2 pi i) int_C (1 + w)^{rho-1} (x + t w)^{-rho-1} dw
// on the unit circle.  Vanishes off the diagonal; the diagonal itself is
// distributional and rejected (|x - t| < 0.05 max(x, t) is a DomainError).
Cplx chi_contour(double rho, double x, double t, const QuadConfig& cfg = {});

// |chi(x, t) - chi(t, x)|; both terms are near zero off the diagonal.
double chi_symmetry_residual(double rho, double x, double t,
                             const QuadConfig& cfg = {});

// I2(u) = sum c_n u^n with (n + 1 - rho) c_{n+1} = c_n, c_0 = 1/rho.
// Entire; rho must be non-integer.
Cplx i2_eval(Cplx u, double rho, const KernelParams& kp = {});
Cplx i2_deriv(Cplx u, double rho, const KernelParams& kp = {});

// I(u) = int_0^inf e^{-s} (u + s)^{-rho-1} ds by direct quadrature.
// Test oracle; u must avoid the closed negative real axis.
Cplx i_defining(Cplx u, double rho, const QuadConfig& cfg = {});

// Laplace transform of chi against e^{-t y}:
//   lhs = int_0^inf chi_rho(x, t) e^{-t y} dt   (t-integral done analytically)
//   rhs = x^{-rho} e^{-x y}
// Non-integer rho uses the I2 series split; integer rho evaluates I(u) by
// quadrature inside the contour integral.
struct LaplaceCheck {
  double lhs;
  double rhs;
};
LaplaceCheck chi_laplace_check(double rho, double x, double y,
                               const KernelParams& kp = {});

// (1 / 2 pi i) int_C (1 + w)^{rho-1} w^{n-rho} dw  vs  (-1)^n / (rho c_n n!).
struct BetaIdentity {
  Cplx lhs;
  double rhs;
};
BetaIdentity contour_beta_identity(int n, double rho, const QuadConfig& cfg = {});

// Weak-form sifting: the inverse transform of G = (t + z)^{-rho} integrated
// against e^{-y}; equals e^{-t} when the delta-kernel identity holds.
double point_mass_sifting(double t, double rho, const QuadConfig& cfg = {});

}  // namespace gst
