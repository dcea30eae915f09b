#pragma once

#include <functional>

namespace drillfill {

struct QuadratureOptions {
  int max_panels = 100000;  // total accepted panels before giving up
  int max_depth = 50;       // bisection depth cap per panel
};

// Adaptive 1-d integration of f over [r0, r1].
//
// Fixed-order symmetric Gauss-Kronrod 7/15 rule per panel, bisection where
// the local error estimate exceeds the panel's share of the budget. The
// effective absolute tolerance is tol * max(1, |estimate|). Subdivision
// order is fixed (leftmost-deepest first), so results are reproducible and
// independent of any threading in the caller. All nodes are interior:
// integrands only need a continuous extension at the endpoints.
//
// Throws std::invalid_argument on a bad interval and QuadratureError (with
// the partial estimate and an error bound) on budget exhaustion.
double quadrature_1d(const std::function<double(double)>& f, double r0, double r1,
                     double tol, const QuadratureOptions& opts = {});

}  // namespace drillfill
