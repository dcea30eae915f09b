#pragma once

#include "drillfill/profile.hpp"

namespace drillfill {

// Sectional curvatures of the coordinate planes and the scalar curvature of
// a warped-product metric at one radius. S == 2*(K_rtheta + K_ry + K_thetay)
// by construction (same arithmetic path).
struct CurvatureSample {
  double r = 0.0;
  double K_rtheta = 0.0;
  double K_ry = 0.0;
  double K_thetay = 0.0;
  double S = 0.0;
};

// The metric dr^2 + a(r)^2 dtheta^2 + b(r)^2 dy^2 on
// [r0, r1] x (R/theta_period Z) x [0, y_extent].
//
// All constant angular factors live inside a and b; theta_period is the bare
// coordinate period (1 for R/Z). a and b must be positive on the open
// interval; a vanishing endpoint (a tube core) is allowed.
class WarpedMetric {
 public:
  WarpedMetric(double r0, double r1, SmoothProfile a, SmoothProfile b,
               double theta_period, double y_extent);

  double r0() const noexcept { return r0_; }
  double r1() const noexcept { return r1_; }
  const SmoothProfile& a() const noexcept { return a_; }
  const SmoothProfile& b() const noexcept { return b_; }
  double theta_period() const noexcept { return theta_period_; }
  double y_extent() const noexcept { return y_extent_; }

 private:
  double r0_;
  double r1_;
  SmoothProfile a_;
  SmoothProfile b_;
  double theta_period_;
  double y_extent_;
};

// Curvatures of the coordinate 2-planes:
//   K(dr, dtheta) = -a''/a,  K(dr, dy) = -b''/b,  K(dtheta, dy) = -a'b'/(ab),
// and S = 2 * (sum of the three). Requires r in the open interval and
// a(r), b(r) != 0; throws std::domain_error otherwise (the exact core radius
// is a coordinate singularity).
CurvatureSample sectional_curvatures(const WarpedMetric& g, double r);
double scalar_curvature(const WarpedMetric& g, double r);

// theta_period * y_extent * integral of a*b dr, by adaptive quadrature.
// The integrand extends continuously to the endpoints (a*b -> 0 allowed).
double volume(const WarpedMetric& g, double tol);

// Integral of (|S|/6)^(3/2) dvol. The integrand depends on r only, so the
// theta and y factors integrate to their periods; where a*b vanishes the
// integrand is extended by its limit 0.
double scalar_power_integral(const WarpedMetric& g, double tol);

// Integral of S dvol (same endpoint convention as scalar_power_integral).
double total_scalar_integral(const WarpedMetric& g, double tol);

// Fermi-coordinate tube around a closed geodesic of length ell:
//   dr^2 + 4 pi^2 sinh(r)^2 dtheta^2 + ell^2 cosh(r)^2 dy^2,  r in [0, R].
WarpedMetric hyperbolic_tube(double ell, double R);

// Cusp neighborhood over a flat cylinder: dr^2 + (l1 e^r)^2 dtheta^2 +
// (l2 e^r)^2 dy^2 on [r_lo, r_hi].
WarpedMetric hyperbolic_cusp(double l1, double l2, double r_lo, double r_hi);

}  // namespace drillfill
