#pragma once

#include <vector>

#include "drillfill/profile.hpp"
#include "drillfill/warped.hpp"

namespace drillfill {

// Cusp-to-tube interpolation for meridian length ell1 > 2*pi and height
// scale ell2 > 0, with R = log(ell1/pi), kappa = 2*pi*ell2/ell1 and
// transition half-width delta = log(2)/4.
//
// a and b agree with 2*pi*sinh(r+R), kappa*cosh(r+R) on (-R, -2*delta] (a
// smooth solid-torus core at r = -R since a'(-R) = 2*pi) and with
// ell1*e^r, ell2*e^r on [-delta, 0] (a cusp collar whose r = 0 slice is the
// flat boundary torus).
struct FillProfilePair {
  double ell1 = 0.0;
  double ell2 = 0.0;
  double R = 0.0;
  double kappa = 0.0;
  double delta = 0.0;
  BumpFunction eta;
  SmoothProfile chi;
  SmoothProfile phi;
  SmoothProfile psi;
  SmoothProfile a;
  SmoothProfile b;

  double tube_end() const noexcept { return -2.0 * delta; }
  double cusp_start() const noexcept { return -delta; }

  enum class Piece { Tube, Transition, Cusp };
  ProfileValue eval_a(Piece piece, double r) const;
  ProfileValue eval_b(Piece piece, double r) const;
};

// Requires ell1 > 2*pi, ell2 > 0 and eta transitioning on
// [-log(2)/2, -log(2)/4]; throws std::invalid_argument otherwise.
FillProfilePair build_fill_profiles(double ell1, double ell2, const BumpFunction& eta);

// |a''/a + b''/b + a'b'/(ab) - 3| for r in (-R, 0), organized around the
// deviations phi'-1, psi'-1 written in powers of E = e^{-2(r+R)} so the
// exact branches cancel to rounding noise instead of catastrophically.
// Identically 0 on both exact branches; r = -R is the core axis and throws
// std::domain_error.
double fill_curvature_defect(const FillProfilePair& p, double r);

struct FillConstantRow {
  double ell1 = 0.0;
  double sup_defect = 0.0;   // sup over the transition window
  double normalized = 0.0;   // (ell1^4 / pi^4) * sup_defect
};

struct FillConstantEstimate {
  std::vector<FillConstantRow> rows;
  double c_hat = 0.0;  // (1 + safety) * max normalized defect
  double slope = 0.0;  // least-squares slope of log(sup) vs log(ell1); -4 law
  double safety = kDerivativeSafety;
};

// Requires >= 4 grid values, all > 2*pi, spanning at least a factor 4
// (needed for a meaningful log-log fit). The defect does not depend on
// ell2, so profiles are built with ell2 = 1.
FillConstantEstimate estimate_fill_constant(const BumpFunction& eta,
                                            const std::vector<double>& ell_grid,
                                            int samples = 20001);

struct FillPropertyReport {
  double ell1 = 0.0;
  double ell2 = 0.0;
  double min_a = 0.0;             // over (-R, 0], away from the core
  double min_b = 0.0;
  double tube_branch_dev = 0.0;   // vs 2*pi*sinh(r+R), kappa*cosh(r+R)
  double cusp_branch_dev = 0.0;   // vs ell1*e^r, ell2*e^r
  double product_min_slack = 0.0; // min of (l1 l2 e^{2r} - ab) / (l1 l2 e^{2r})
  double max_glue_jump = 0.0;
  double core_value = 0.0;        // a(-R), should vanish
  double core_derivative_residual = 0.0;  // |a'(-R) - 2*pi|
  double max_branch_defect = 0.0; // defect sampled on the exact branches
  int samples = 0;

  bool passes(double product_tol = 1e-12, double glue_tol = 1e-9,
              double core_tol = 1e-10, double branch_tol = 1e-12) const {
    return min_a > 0.0 && min_b > 0.0 && tube_branch_dev == 0.0 &&
           cusp_branch_dev == 0.0 && product_min_slack >= -product_tol &&
           max_glue_jump < glue_tol && core_value == 0.0 &&
           core_derivative_residual < core_tol && max_branch_defect < branch_tol;
  }
};

// Sample the construction properties over (-R, 0]. The branch-defect check
// keeps r + R >= 0.05: closer to the core the identity cancellation in the
// raw formulas is dominated by rounding.
FillPropertyReport verify_fill_properties(const FillProfilePair& p,
                                          int samples = 4001);

// Flat metric data on the boundary torus of a solid torus: area, flat length
// of the meridian slope, and the twist of the deck translation
// (theta, y) -> (theta + twist, y + height). The twist enters no integrand
// (all integrands are theta- and y-independent); it is carried for
// reporting only.
struct FlatTorusData {
  double area = 0.0;
  double ell = 0.0;
  double twist = 0.0;

  double height() const { return area / ell; }  // s = A / ell
};

struct SolidTorusMetric {
  WarpedMetric metric;             // on [-R, 0], theta period 1, y extent A/ell
  FlatTorusData torus;
  FillProfilePair profiles;
  double smoothness_residual = 0.0;  // |a'(-R) - 2*pi|
};

// Negatively-bent solid torus realizing the prescribed flat boundary data.
// Throws HypothesisError when ell <= 2*pi.
SolidTorusMetric solid_torus_from_flat_torus(const FlatTorusData& t,
                                             const BumpFunction& eta);

struct TubeIntegralReport {
  double area = 0.0;
  double ell = 0.0;
  double c_hat = 0.0;
  double volume = 0.0;              // V
  double integral = 0.0;            // I = int (|S|/6)^{3/2} dvol
  double volume_bound = 0.0;        // (A/2)(1 - pi^2/ell^2)
  double volume_slack = 0.0;        // volume_bound - V
  double deviation_bound = 0.0;     // (3/2) c_hat (pi^4/ell^4) V
  double deviation_slack = 0.0;     // deviation_bound - |I - V|
  double integral_bound = 0.0;      // volume_bound * (1 + (3/2) c_hat pi^4/ell^4)
  double integral_slack = 0.0;      // integral_bound - I
  double pointwise_max_dev = 0.0;   // max |(|S|/6)^{3/2} - 1| over samples
  bool pointwise_step_ok = false;   // pointwise_max_dev <= (3/2) c_hat pi^4/ell^4
  bool linearization_ok = false;    // max (1+defect)^{3/2}-1 <= (3/2) c_hat pi^4/l^4

  bool chain_ok(double tol = 1e-9) const {
    return volume_slack >= -tol && deviation_slack >= -tol && integral_slack >= -tol;
  }
};

// The scalar-power integral bound chain for the solid torus, each inequality
// evaluated by quadrature and its slack recorded. The linearization step
// |(1+x)^{3/2} - 1| <= (3/2)x fails for large x, so it is measured rather
// than assumed; chain_ok does not depend on it.
TubeIntegralReport tube_scalar_integral_bound(const SolidTorusMetric& st,
                                              double c_hat, double tol);

}  // namespace drillfill
