#pragma once

#include <vector>

#include "drillfill/profile.hpp"
#include "drillfill/warped.hpp"

namespace drillfill {

// Tube-to-cusp interpolation at tube radius R in (0, 1].
//
// a and b agree with sinh(r), cosh(r) on [2R/3, inf) and with
// sinh(R)e^r, cosh(R)e^r on (-inf, R/3]; in between they are exp(phi),
// exp(psi) for the log-linear blend phi = (1-chi) log(sinh(R)e^r) +
// chi log(sinh r) (and the cosh analogue), chi(r) = eta(r/R).
struct DrillProfilePair {
  double R = 0.0;
  BumpFunction eta;
  SmoothProfile chi;
  SmoothProfile phi;
  SmoothProfile psi;
  SmoothProfile a;
  SmoothProfile b;

  double cusp_end() const noexcept { return R / 3.0; }
  double tube_start() const noexcept { return 2.0 * R / 3.0; }

  // One-sided closed forms, used to measure gluing jumps at the junction
  // radii. Each piece is a global formula, so it can be evaluated exactly at
  // (and slightly past) its nominal region.
  enum class Piece { Cusp, Transition, Tube };
  ProfileValue eval_a(Piece piece, double r) const;
  ProfileValue eval_b(Piece piece, double r) const;
};

// Requires 0 < R <= 1 and eta transitioning on [1/3, 2/3]; throws
// std::invalid_argument otherwise.
DrillProfilePair build_drill_profiles(double R, const BumpFunction& eta);

// |a''/a + b''/b + a'b'/(ab)| on the transition interval [R/3, 2R/3],
// evaluated as |phi'^2 + psi'^2 + phi'psi' + phi'' + psi''|. The hyperbolic
// value of the (unsigned) sum is 3, so both interval endpoints return
// exactly 3. Outside the interval throws std::domain_error; use
// scalar_curvature there (the metric is exactly hyperbolic or cusp-form).
double drill_curvature_defect(const DrillProfilePair& p, double r);

struct DrillPropertyReport {
  double R = 0.0;
  double min_a = 0.0;
  double min_b = 0.0;
  double tube_branch_dev = 0.0;     // max |a - sinh|, |b - cosh| on [2R/3, R+1]
  double cusp_branch_dev = 0.0;     // max deviation from sinh(R)e^r, cosh(R)e^r
  double product_min_slack = 0.0;   // min of (sinh R cosh R e^{2r} - ab) / bound
  double max_glue_jump = 0.0;       // a, b and two derivatives at R/3 and 2R/3
  double max_hyperbolic_dev = 0.0;  // |S + 6| outside the transition
  int samples = 0;

  bool passes(double product_tol = 1e-12, double glue_tol = 1e-9,
              double hyperbolic_tol = 1e-9) const {
    return min_a > 0.0 && min_b > 0.0 && tube_branch_dev == 0.0 &&
           cusp_branch_dev == 0.0 && product_min_slack >= -product_tol &&
           max_glue_jump < glue_tol && max_hyperbolic_dev < hyperbolic_tol;
  }
};

// Sample the five construction properties over [-2, R+1] (plus the junction
// radii). Violations are reported, not thrown.
DrillPropertyReport verify_drill_properties(const DrillProfilePair& p,
                                            int samples = 4001);

struct DrillConstantRow {
  double R = 0.0;
  double sup_defect = 0.0;        // sup of |sum| over the transition
  double r2_defect = 0.0;         // R^2 * sup_defect
  double sup_centered = 0.0;      // sup of |sum - 3|
  double r2_centered = 0.0;
};

// Certified transition-curvature constants: the displayed inequality bounds
// |sum| by c/R^2, but the sum equals 3 on both pure branches, so the
// centered reading |sum - 3| is tracked alongside it. c_hat (plain reading)
// is what the shell integral bound consumes.
struct DrillConstantEstimate {
  std::vector<DrillConstantRow> rows;
  double c_hat = 0.0;
  double c_hat_centered = 0.0;
  double r2_ratio = 0.0;                // max/min of r2_defect across the grid
  double scaling_deviation_max = 0.0;   // max |r2_i - r2_max| / c_hat
  double safety = kDerivativeSafety;
};

// Requires a non-empty grid inside (0, 1] and samples >= 1000.
DrillConstantEstimate estimate_drill_constant(const BumpFunction& eta,
                                              const std::vector<double>& R_grid,
                                              int samples);

// dr^2 + 4 pi^2 a^2 dtheta^2 + ell^2 b^2 dy^2 on [r_lo, R], theta period 1,
// y extent 1: the shell metric around a drilled geodesic of length ell.
WarpedMetric drill_shell_metric(const DrillProfilePair& p, double ell, double r_lo);

// Integral of |S|^(3/2) dvol over the [eps, R]-shell. Requires
// 0 <= eps < R/3 and ell > 0.
double shell_scalar_integral(const DrillProfilePair& p, double ell, double eps,
                             double tol);

struct ShellBoundCheck {
  double integral = 0.0;
  double bound = 0.0;  // (2c)^{3/2} pi ell sinh(R)cosh(R)(e^{2R}-e^{2eps})/R^3
  double slack = 0.0;
  double c_hat = 0.0;
  bool ok = false;
};

// Compare the shell integral against its closed-form upper bound with the
// certified constant substituted.
ShellBoundCheck shell_integral_bound(const DrillProfilePair& p, double ell,
                                     double eps, double tol, double c_hat);

}  // namespace drillfill
