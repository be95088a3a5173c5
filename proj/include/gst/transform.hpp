#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "gst/branchfn.hpp"
#include "gst/quadrature.hpp"

namespace gst {

struct TransformParams {
  double rho = 1.0;            // transform index, must be > 0
  QuadConfig quad{};
  double derivative_step = 1e-5;  // relative complex-difference step for G'
  double disc_offset = 1e-7;      // relative epsilon for the cut discontinuity
};

enum class SourceFamily { PowerLaw, PowerHyper, PointMass, Tabulated, Custom };

struct PointMassTerm {
  double location;  // t > 0
  double weight;
};

// The input F: a density on y > 0 plus optional point masses.
struct SourceFunction {
  std::function<double(double)> density;       // may be empty
  std::function<Cplx(Cplx)> density_complex;   // analytic continuation, optional
  std::function<double(double)> density_deriv; // optional
  std::vector<PointMassTerm> point_masses;
  // Non-empty for piecewise sources: the density is integrated segment by
  // segment between consecutive breakpoints and is zero outside them.
  std::vector<double> breakpoints;
  double alpha = 0.5;  // admissibility exponent, 0 < alpha < rho at transform time
  SourceFamily family = SourceFamily::Custom;

  bool has_density() const { return static_cast<bool>(density); }
};

// The output/input G: an evaluator on the cut plane |arg z| < pi.
struct CutPlaneFunction {
  std::function<Cplx(Cplx)> eval;
  std::function<Cplx(Cplx)> deriv;  // may be empty; complex differences then
  double beta = 1.0;                // declared decay exponent at infinity
};

struct DiscontinuityFn {
  std::function<double(double)> eval;  // t > 0 -> real
};

// Build a Tabulated source from a strictly increasing grid (piecewise linear,
// zero extension beyond the grid).  alpha is declared by the caller.
SourceFunction make_tabulated_source(const std::vector<double>& y,
                                     const std::vector<double>& f,
                                     double alpha);

// G(z) = int_0^inf (y + z)^-rho F(y) dy  plus point-mass terms.
Cplx forward_gst(const SourceFunction& F, const TransformParams& p, Cplx z,
                 double* err_out = nullptr);

// F(y) = -(1 / 2 pi i) y^rho int_C (1 + w)^{rho-1} G'(y w) dw, unit circle.
double inverse_gst(const CutPlaneFunction& G, const TransformParams& p, double y,
                   double* err_out = nullptr);

// Same inverse on the z-plane contour of radius y:
// F(y) = -(1 / 2 pi i) int_{C_y} (y + z)^{rho-1} G'(z) dz.
double inverse_gst_zplane(const CutPlaneFunction& G, const TransformParams& p,
                          double y, double* err_out = nullptr);

// Integration-by-parts form, valid for rho > 1 only:
// F(y) = (rho - 1) / (2 pi i) int_{C_y} (y + z)^{rho-2} G(z) dz.
double inverse_gst_ibp(const CutPlaneFunction& G, const TransformParams& p,
                       double y, double* err_out = nullptr);

// Delta(t) = (1 / 2 pi i) (G(-t - i eps) - G(-t + i eps)), eps -> 0+,
// with one Richardson step in eps.
double discontinuity(const CutPlaneFunction& G, const TransformParams& p,
                     double t, double* err_out = nullptr);

// rho = 1 inverse: F(y) = Delta(y).
double stieltjes_disc_inverse(const CutPlaneFunction& G, const TransformParams& p,
                              double y, double* err_out = nullptr);

// F(y) = (rho - 1) int_0^y (y - t)^{rho-2} Delta(t) dt, rho > 1.
double abel_inverse_from_delta(const DiscontinuityFn& delta,
                               const TransformParams& p, double y);

// F(y) = int_0^y (y - t)^{rho-1} Delta'(t) dt.
double abel_inverse_from_delta_prime(const std::function<double(double)>& delta_prime,
                                     const TransformParams& p, double y);

// Inverse Abel transform: Delta(t) from F, valid for rho < 2 with F(0) = 0;
// returns F(t) directly at rho = 1.
double delta_from_f(const SourceFunction& F, const TransformParams& p, double t);

// The rho = 3/2 radial form: f(mu) from g on the imaginary segment
// (realized on the right semicircle |zeta| = mu, equivalent by Cauchy's
// theorem under the declared analyticity).
double radial_inverse(const std::function<Cplx(Cplx)>& g, double mu,
                      const QuadConfig& cfg = {});

// Laplace transform of F at x > 0.
double laplace(const SourceFunction& F, double x, const QuadConfig& cfg = {});

// G(z) as a Laplace transform of a Laplace transform (z real > 0):
// (1 / Gamma(rho)) int_0^inf x^{rho-1} e^{-x z} L_x[F] dx.
double iterated_laplace_forward(const SourceFunction& F, const TransformParams& p,
                                double z);

}  // namespace gst
