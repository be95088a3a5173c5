#pragma once

#include <complex>

#include "gst/errors.hpp"

namespace gst {

using Cplx = std::complex<double>;

// z^a with the principal branch, arg z in (-pi, pi).  Points on the closed
// negative real axis are rejected; z = 0 is allowed only for a > 0.
Cplx principal_pow(Cplx z, double a);

// Euler gamma function (Lanczos, g = 7).  Throws PoleError at non-positive
// integers.
Cplx gamma_fn(Cplx x);
double gamma_fn(double x);

// Euler beta function B(u, v) = Gamma(u) Gamma(v) / Gamma(u + v).
// Negative non-integer arguments are handled through the Gamma ratio.
double beta_fn(double u, double v);

// Gauss hypergeometric series 2F1(a, b; c; x), direct summation.
// Valid for |x| < 0.95 only; no connection formulas.
Cplx gauss_2f1(double a, double b, double c, Cplx x);

}  // namespace gst
