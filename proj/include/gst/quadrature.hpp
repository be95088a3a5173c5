#pragma once

#include <complex>
#include <functional>

#include "gst/errors.hpp"

namespace gst {

using Cplx = std::complex<double>;

struct QuadConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_level = 10;   // tanh-sinh refinement depth
  long max_evals = 4000000;
};

struct QuadResult {
  std::complex<double> value{0.0, 0.0};
  double err_estimate = 0.0;  // |last level - previous level| plus a roundoff floor
  long evals = 0;
};

// Circle contour starting and ending at w = -radius, encircling the origin
// counterclockwise.  Endpoints are open: the parametrization never evaluates
// at theta = +-pi exactly.
struct ContourSpec {
  double radius = 1.0;
};

// Integrand over an open interval.  The second form additionally receives the
// distances to the two endpoints, computed without cancellation; use it
// whenever the integrand is singular at a nonzero endpoint, since the plain
// abscissa rounds onto the endpoint once the distance drops below machine
// epsilon relative to it.
using Integrand = std::function<std::complex<double>(double)>;
using EndpointIntegrand =
    std::function<std::complex<double>(double x, double from_a, double from_b)>;

// Contour integrand.  Receives w = radius * e^{i theta} together with
// u = 1 + e^{i theta} evaluated stably near theta = +-pi, so kernels with a
// branch point at the contour endpoint keep full accuracy.
using ContourIntegrand =
    std::function<std::complex<double>(std::complex<double> w,
                                       std::complex<double> u)>;

// tanh-sinh quadrature over (a, b); tolerates algebraic endpoint
// singularities of exponent > -1.
QuadResult integrate_finite(const Integrand& f, double a, double b,
                            const QuadConfig& cfg);
QuadResult integrate_finite(const EndpointIntegrand& f, double a, double b,
                            const QuadConfig& cfg);

// Quadrature over (0, inf): tanh-sinh on (0, split) plus a 1/y-mapped tail.
// The integrand must decay at least algebraically faster than 1/y.
QuadResult integrate_semi_infinite(const Integrand& f, const QuadConfig& cfg,
                                   double split = 1.0);

// Integral of g over the circle contour: int g(w(theta)) w'(theta) dtheta,
// theta in (-pi, pi), by tanh-sinh in theta.
QuadResult integrate_contour(const ContourIntegrand& g, const ContourSpec& contour,
                             const QuadConfig& cfg);

}  // namespace gst
