#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace gst {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Argument outside the operation's domain (point on the branch cut,
// parameter constraint violated, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

// Evaluation at a pole of a special function.
class PoleError : public DomainError {
public:
  using DomainError::DomainError;
};

// Integrand produced NaN/Inf, or diverged at a contour endpoint.
class EvaluationError : public Error {
public:
  using Error::Error;
};

// Tolerance not reached within the refinement / term budget.  Carries the
// best value obtained so far; callers decide whether to accept it.
class NonConvergence : public Error {
public:
  NonConvergence(const std::string& msg, std::complex<double> best,
                 double estimate, long evaluations)
      : Error(msg), best_value(best), err_estimate(estimate),
        evals(evaluations) {}
  std::complex<double> best_value;
  double err_estimate;
  long evals;
};

// Power series failed to reach its tolerance within the term budget.
class SeriesTruncationError : public Error {
public:
  using Error::Error;
};

// An inverse transform produced an imaginary residue above the gate;
// usually signals a violated analyticity contract in G.
class ResidualImaginaryError : public Error {
public:
  ResidualImaginaryError(const std::string& msg, double re, double im)
      : Error(msg), real_part(re), imag_part(im) {}
  double real_part;
  double imag_part;
};

}  // namespace gst
