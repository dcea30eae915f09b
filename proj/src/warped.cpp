#include "drillfill/warped.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "drillfill/quadrature.hpp"

namespace drillfill {

WarpedMetric::WarpedMetric(double r0, double r1, SmoothProfile a, SmoothProfile b,
                           double theta_period, double y_extent)
    : r0_(r0), r1_(r1), a_(std::move(a)), b_(std::move(b)),
      theta_period_(theta_period), y_extent_(y_extent) {
  if (!(r0 < r1)) throw std::invalid_argument("WarpedMetric: require r0 < r1");
  if (!(theta_period > 0.0) || !(y_extent > 0.0)) {
    throw std::invalid_argument("WarpedMetric: require positive periods");
  }
  // Positivity of the warp factors on the interior, sampled. Endpoints are
  // excluded: a tube core has a(r0) == 0.
  const int n = 257;
  for (int i = 0; i < n; ++i) {
    const double r = r0 + (r1 - r0) * (i + 0.5) / n;
    const double av = a_.value(r);
    const double bv = b_.value(r);
    if (!(av > 0.0) || !(bv > 0.0) || !std::isfinite(av) || !std::isfinite(bv)) {
      throw std::invalid_argument("WarpedMetric: warp factor not positive at r=" +
                                  std::to_string(r));
    }
  }
}

CurvatureSample sectional_curvatures(const WarpedMetric& g, double r) {
  if (!(r > g.r0() && r < g.r1())) {
    throw std::domain_error("sectional_curvatures: r outside open interval");
  }
  const ProfileValue a = g.a()(r);
  const ProfileValue b = g.b()(r);
  if (a.value == 0.0 || b.value == 0.0) {
    throw std::domain_error("sectional_curvatures: singular axis (warp factor 0)");
  }
  CurvatureSample out;
  out.r = r;
  out.K_rtheta = -a.d2 / a.value;
  out.K_ry = -b.d2 / b.value;
  out.K_thetay = -(a.d1 * b.d1) / (a.value * b.value);
  out.S = 2.0 * (out.K_rtheta + out.K_ry + out.K_thetay);
  return out;
}

double scalar_curvature(const WarpedMetric& g, double r) {
  return sectional_curvatures(g, r).S;
}

double volume(const WarpedMetric& g, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("volume: tol <= 0");
  const SmoothProfile& a = g.a();
  const SmoothProfile& b = g.b();
  const double line = quadrature_1d(
      [&](double r) { return a.value(r) * b.value(r); }, g.r0(), g.r1(), tol);
  return g.theta_period() * g.y_extent() * line;
}

namespace {

// (|S|/6)^(3/2) * a * b with the continuous extension by 0 where a*b
// vanishes (the curvature ratio stays bounded as the core is approached,
// while the volume element goes to 0).
double scalar_power_integrand(const WarpedMetric& g, double r) {
  const ProfileValue a = g.a()(r);
  const ProfileValue b = g.b()(r);
  const double ab = a.value * b.value;
  if (ab == 0.0) return 0.0;
  const double sum = a.d2 / a.value + b.d2 / b.value + (a.d1 * b.d1) / ab;
  return std::pow(std::fabs(-2.0 * sum) / 6.0, 1.5) * ab;
}

double scalar_integrand(const WarpedMetric& g, double r) {
  const ProfileValue a = g.a()(r);
  const ProfileValue b = g.b()(r);
  const double ab = a.value * b.value;
  if (ab == 0.0) return 0.0;
  const double sum = a.d2 / a.value + b.d2 / b.value + (a.d1 * b.d1) / ab;
  return -2.0 * sum * ab;
}

}  // namespace

double scalar_power_integral(const WarpedMetric& g, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("scalar_power_integral: tol <= 0");
  const double line = quadrature_1d(
      [&](double r) { return scalar_power_integrand(g, r); }, g.r0(), g.r1(), tol);
  return g.theta_period() * g.y_extent() * line;
}

double total_scalar_integral(const WarpedMetric& g, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("total_scalar_integral: tol <= 0");
  const double line = quadrature_1d(
      [&](double r) { return scalar_integrand(g, r); }, g.r0(), g.r1(), tol);
  return g.theta_period() * g.y_extent() * line;
}

WarpedMetric hyperbolic_tube(double ell, double R) {
  if (!(ell > 0.0) || !(R > 0.0)) {
    throw std::invalid_argument("hyperbolic_tube: require ell > 0 and R > 0");
  }
  const double two_pi = 2.0 * std::acos(-1.0);
  return WarpedMetric(0.0, R, SmoothProfile::sinh_scaled(two_pi, 0.0, 0.0, R),
                      SmoothProfile::cosh_scaled(ell, 0.0, 0.0, R), 1.0, 1.0);
}

WarpedMetric hyperbolic_cusp(double l1, double l2, double r_lo, double r_hi) {
  if (!(l1 > 0.0) || !(l2 > 0.0)) {
    throw std::invalid_argument("hyperbolic_cusp: require positive lengths");
  }
  return WarpedMetric(r_lo, r_hi, SmoothProfile::exp_scaled(l1, 1.0, r_lo, r_hi),
                      SmoothProfile::exp_scaled(l2, 1.0, r_lo, r_hi), 1.0, 1.0);
}

}  // namespace drillfill
