#include "gst/quadrature.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace gst {

namespace {

using Cplx = std::complex<double>;

// tanh-sinh node at parameter t >= 0:
//   abscissa x = tanh((pi/2) sinh t) = 1 - delta,
//   delta    = 2 / (1 + e^{2 s}),   s = (pi/2) sinh t   (stable for x -> 1)
//   weight   = (pi/2) cosh t / cosh^2 s
// The node at -t is the mirror image (x -> -x).
struct Node {
  double delta;
  double weight;
};

constexpr double kTMax = 5.2;
constexpr int kMaxTables = 16;

Node make_node(double t) {
  double s = 0.5 * M_PI * std::sinh(t);
  double e = std::exp(-2.0 * s);
  Node n;
  n.delta = 2.0 * e / (1.0 + e);
  double sech = 2.0 * std::exp(-s) / (1.0 + e);
  n.weight = 0.5 * M_PI * std::cosh(t) * sech * sech;
  return n;
}

// Levels of nodes with t > 0; level 0 also implies the t = 0 node (handled
// separately).  Level L holds the new nodes of step h = 2^-L.
const std::vector<std::vector<Node>>& node_tables() {
  static const std::vector<std::vector<Node>> tables = [] {
    std::vector<std::vector<Node>> tb(kMaxTables);
    for (double t = 1.0; t <= kTMax; t += 1.0) tb[0].push_back(make_node(t));
    for (int level = 1; level < kMaxTables; ++level) {
      double h = std::ldexp(1.0, -level);
      for (double t = h; t <= kTMax; t += 2.0 * h) tb[level].push_back(make_node(t));
    }
    return tb;
  }();
  return tables;
}

// side = +1: node near the upper endpoint (x = 1 - delta);
// side = -1: mirrored node.  delta = 1 is the midpoint.
template <class EvalFn>
QuadResult de_engine(EvalFn&& eval, double scale, const QuadConfig& cfg) {
  if (!(cfg.rel_tol > 0.0) || cfg.abs_tol < 0.0 || cfg.max_level < 3)
    throw DomainError("QuadConfig: rel_tol > 0, abs_tol >= 0, max_level >= 3 required");

  const auto& tables = node_tables();
  long evals = 0;
  Cplx sum = 0.0;
  double abs_sum = 0.0;

  auto sample = [&](const Node& n, int side) {
    if (evals >= cfg.max_evals)
      throw NonConvergence("quadrature: max_evals exceeded", scale * sum,
                           std::numeric_limits<double>::infinity(), evals);
    Cplx v = eval(n.delta, side);
    ++evals;
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw EvaluationError("quadrature: integrand produced NaN/Inf");
    sum += n.weight * v;
    abs_sum += n.weight * std::abs(v);
  };

  // Level 0: midpoint plus unit-spaced nodes.
  {
    Node mid{1.0, 0.5 * M_PI};
    sample(mid, +1);
    for (const Node& n : tables[0]) {
      sample(n, +1);
      sample(n, -1);
    }
  }

  Cplx prev = scale * sum;
  double prev_err = std::numeric_limits<double>::infinity();
  int levels_used = std::min(cfg.max_level, kMaxTables - 1);
  for (int level = 1; level <= levels_used; ++level) {
    double h = std::ldexp(1.0, -level);
    for (const Node& n : tables[level]) {
      sample(n, +1);
      sample(n, -1);
    }
    Cplx value = scale * h * sum;
    double est = std::abs(value - prev);
    double floor = 16.0 * std::numeric_limits<double>::epsilon() *
                   std::abs(scale) * h * abs_sum;
    prev = value;
    prev_err = est + floor;
    if (level >= 3 && est <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value)))
      return QuadResult{value, prev_err, evals};
  }
  throw NonConvergence("quadrature: tolerance not reached at max_level", prev,
                       prev_err, evals);
}

QuadResult add_results(QuadResult a, const QuadResult& b) {
  a.value += b.value;
  a.err_estimate += b.err_estimate;
  a.evals += b.evals;
  return a;
}

}  // namespace

QuadResult integrate_finite(const EndpointIntegrand& f, double a, double b,
                            const QuadConfig& cfg) {
  if (!(a < b)) throw DomainError("integrate_finite: requires a < b");
  const double half = 0.5 * (b - a);
  auto eval = [&](double delta, int side) -> Cplx {
    double near = half * delta;  // distance to the nearest endpoint
    double far = (b - a) - near;
    if (side > 0) return f(b - near, far, near);
    return f(a + near, near, far);
  };
  return de_engine(eval, half, cfg);
}

QuadResult integrate_finite(const Integrand& f, double a, double b,
                            const QuadConfig& cfg) {
  return integrate_finite(
      EndpointIntegrand([&](double x, double, double) { return f(x); }), a, b,
      cfg);
}

QuadResult integrate_semi_infinite(const Integrand& f, const QuadConfig& cfg,
                                   double split) {
  if (!(split > 0.0)) throw DomainError("integrate_semi_infinite: split must be > 0");
  // Head: (0, split) directly.
  bool head_failed = false;
  QuadResult head;
  try {
    head = integrate_finite(f, 0.0, split, cfg);
  } catch (const NonConvergence& nc) {
    head = QuadResult{nc.best_value, nc.err_estimate, nc.evals};
    head_failed = true;
  }
  // Tail: y = split / u maps (split, inf) onto u in (0, 1).
  auto tail_integrand = [&](double u, double, double) -> Cplx {
    double y = split / u;
    Cplx fv = f(y);
    if (fv == Cplx(0.0, 0.0)) return fv;
    return fv * (split / u) / u;
  };
  bool tail_failed = false;
  QuadResult tail;
  try {
    tail = integrate_finite(EndpointIntegrand(tail_integrand), 0.0, 1.0, cfg);
  } catch (const NonConvergence& nc) {
    tail = QuadResult{nc.best_value, nc.err_estimate, nc.evals};
    tail_failed = true;
  }
  QuadResult total = add_results(head, tail);
  if (head_failed || tail_failed)
    throw NonConvergence("integrate_semi_infinite: tolerance not reached",
                         total.value, total.err_estimate, total.evals);
  return total;
}

QuadResult integrate_contour(const ContourIntegrand& g, const ContourSpec& contour,
                             const QuadConfig& cfg) {
  const double r = contour.radius;
  if (!(r > 0.0)) throw DomainError("integrate_contour: radius must be > 0");
  auto eval = [&](double delta, int side) -> Cplx {
    // theta = side * (pi - pi*delta); e^{i theta} built from delta so the
    // distance to the endpoint stays exact far below machine epsilon.
    double c = std::cos(M_PI * delta);
    double s = std::sin(M_PI * delta);
    Cplx unit(-c, side > 0 ? s : -s);
    double half_s = std::sin(0.5 * M_PI * delta);
    Cplx u(2.0 * half_s * half_s, side > 0 ? s : -s);
    Cplx w = r * unit;
    return g(w, u) * Cplx(0.0, 1.0) * w;  // w'(theta) = i w
  };
  return de_engine(eval, M_PI, cfg);
}

}  // namespace gst
