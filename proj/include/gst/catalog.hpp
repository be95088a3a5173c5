#pragma once

#include <string>

#include "gst/transform.hpp"

namespace gst {

// A closed-form transform pair used as an oracle by tests and the CLI.
struct TransformPair {
  std::string name;
  double rho = 1.0;
  SourceFunction F;
  CutPlaneFunction G;
  DiscontinuityFn delta;  // closed form where available; empty otherwise
};

// F = y^{nu-1},  G = B(nu, rho-nu) z^{nu-rho},  0 < nu < rho.
TransformPair pair_power(double nu, double rho);

// F = delta(y - t),  G = (t + z)^{-rho},  t > 0.
TransformPair pair_point_mass(double t, double rho);

// F = y^{nu-1} (1+y)^{-lambda},
// G = B(nu, rho+lambda-nu) z^{nu-rho} 2F1(nu, lambda; rho+lambda; 1-z),
// 0 < nu < rho + lambda.  The hypergeometric closed form is used on
// |1 - z| < 0.95; elsewhere G falls back to the defining integral evaluated
// on a rotated ray (the density continues analytically).
TransformPair pair_power_hyper(double nu, double lambda, double rho);

// Power pair with B(nu, rho - nu) continued through the Gamma ratio; the
// defining integral diverges for nu >= rho, but the closed-form G and its
// cut discontinuity remain the analytic continuation in rho.  Used by the
// inverse-Abel consistency checks.
TransformPair pair_power_continued(double nu, double rho);

}  // namespace gst
