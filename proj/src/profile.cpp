#include "drillfill/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace drillfill {

namespace {

constexpr double kEdgeEps = 1e-12;

// Canonical mollifier step on [0,1] in the normalized coordinate t:
//   g(t) = u/(u+v),  u = exp(-1/t),  v = exp(-1/(1-t)).
// With u' = u/t^2 and v' = -v/(1-t)^2 the quotient rule gives
//   g'  = u v w / (u+v)^2,                        w  = 1/t^2 + 1/(1-t)^2,
//   g'' = u v [(1/t^2 - 1/s^2) w + w'] / (u+v)^2
//         - 2 u v w (u/t^2 - v/s^2) / (u+v)^3,    w' = -2/t^3 + 2/s^3.
// exp(-1/t) underflows to an exact 0 long before 1/t^2 overflows, so the
// formulas stay finite on [kEdgeEps, 1-kEdgeEps].
ProfileValue mollifier(double t) {
  if (t <= kEdgeEps) return {0.0, 0.0, 0.0};
  if (t >= 1.0 - kEdgeEps) return {1.0, 0.0, 0.0};
  const double s = 1.0 - t;
  const double u = std::exp(-1.0 / t);
  const double v = std::exp(-1.0 / s);
  const double d = u + v;
  const double it2 = 1.0 / (t * t);
  const double is2 = 1.0 / (s * s);
  const double w = it2 + is2;
  const double wp = -2.0 / (t * t * t) + 2.0 / (s * s * s);
  const double g = u / d;
  const double g1 = u * v * w / (d * d);
  const double g2 = u * v * ((it2 - is2) * w + wp) / (d * d) -
                    2.0 * u * v * w * (u * it2 - v * is2) / (d * d * d);
  return {g, g1, g2};
}

// Deterministic golden-section maximization of |f| on [lo, hi].
template <typename F>
double maximize_abs(F&& f, double lo, double hi, int iters = 80) {
  const double phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double f1 = std::fabs(f(x1));
  double f2 = std::fabs(f(x2));
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = std::fabs(f(x2));
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = std::fabs(f(x1));
    }
  }
  return std::max(f1, f2);
}

// Sampled sups of |g'| and |g''| in the normalized coordinate. Shared by
// make_bump and bump_derivative_bounds so affine rescalings of the same
// transition certify exactly proportional constants.
DerivativeBounds normalized_derivative_sups(int samples) {
  double sup1 = 0.0, sup2 = 0.0;
  double arg1 = 0.5, arg2 = 0.5;
  const int n = samples;
  for (int i = 0; i <= n; ++i) {
    const double t = static_cast<double>(i) / n;
    const ProfileValue pv = mollifier(t);
    const double a1 = std::fabs(pv.d1);
    const double a2 = std::fabs(pv.d2);
    if (!std::isfinite(a1) || !std::isfinite(a2)) {
      throw std::overflow_error(
          "bump derivative sample is non-finite (mollifier evaluated too close "
          "to its essential singularity)");
    }
    if (a1 > sup1) {
      sup1 = a1;
      arg1 = t;
    }
    if (a2 > sup2) {
      sup2 = a2;
      arg2 = t;
    }
  }
  const double h = 1.0 / n;
  sup1 = std::max(sup1, maximize_abs([](double t) { return mollifier(t).d1; },
                                     std::max(0.0, arg1 - h), std::min(1.0, arg1 + h)));
  sup2 = std::max(sup2, maximize_abs([](double t) { return mollifier(t).d2; },
                                     std::max(0.0, arg2 - h), std::min(1.0, arg2 + h)));
  return {sup1, sup2};
}

}  // namespace

SmoothProfile::SmoothProfile(double lo, double hi, Eval eval)
    : lo_(lo), hi_(hi), eval_(std::move(eval)) {
  if (!(lo < hi)) throw std::invalid_argument("SmoothProfile: empty domain");
}

SmoothProfile SmoothProfile::constant(double c, double lo, double hi) {
  return SmoothProfile(lo, hi, [c](double) { return ProfileValue{c, 0.0, 0.0}; });
}

SmoothProfile SmoothProfile::linear(double c0, double c1, double lo, double hi) {
  return SmoothProfile(lo, hi, [c0, c1](double r) {
    return ProfileValue{c0 + c1 * r, c1, 0.0};
  });
}

SmoothProfile SmoothProfile::sinh_scaled(double c, double shift, double lo, double hi) {
  return SmoothProfile(lo, hi, [c, shift](double r) {
    const double x = r + shift;
    return ProfileValue{c * std::sinh(x), c * std::cosh(x), c * std::sinh(x)};
  });
}

SmoothProfile SmoothProfile::cosh_scaled(double c, double shift, double lo, double hi) {
  return SmoothProfile(lo, hi, [c, shift](double r) {
    const double x = r + shift;
    return ProfileValue{c * std::cosh(x), c * std::sinh(x), c * std::cosh(x)};
  });
}

SmoothProfile SmoothProfile::exp_scaled(double c, double rate, double lo, double hi) {
  return SmoothProfile(lo, hi, [c, rate](double r) {
    const double v = c * std::exp(rate * r);
    return ProfileValue{v, rate * v, rate * rate * v};
  });
}

BumpFunction::BumpFunction(double x0, double x1, SmoothProfile profile, double c1,
                           double c2)
    : x0_(x0), x1_(x1), profile_(std::move(profile)), c1_(c1), c2_(c2) {}

BumpFunction make_bump(double x0, double x1) {
  if (!(x0 < x1)) {
    throw std::invalid_argument("make_bump: invalid interval, require x0 < x1");
  }
  const double w = x1 - x0;
  SmoothProfile profile(x0, x1, [x0, w](double x) {
    const ProfileValue g = mollifier((x - x0) / w);
    return ProfileValue{g.value, g.d1 / w, g.d2 / (w * w)};
  });
  const DerivativeBounds sups = normalized_derivative_sups(100000);
  const double c1 = (1.0 + kDerivativeSafety) * sups.c1 / w;
  const double c2 = (1.0 + kDerivativeSafety) * sups.c2 / (w * w);
  return BumpFunction(x0, x1, std::move(profile), c1, c2);
}

DerivativeBounds bump_derivative_bounds(const BumpFunction& eta, int samples) {
  if (samples < 1000) {
    throw std::invalid_argument("bump_derivative_bounds: require samples >= 1000");
  }
  const DerivativeBounds sups = normalized_derivative_sups(samples);
  const double w = eta.width();
  return {(1.0 + kDerivativeSafety) * sups.c1 / w,
          (1.0 + kDerivativeSafety) * sups.c2 / (w * w)};
}

SmoothProfile rescale_bump(const BumpFunction& eta, double R) {
  if (!(R > 0.0)) {
    throw std::invalid_argument("rescale_bump: require R > 0");
  }
  return SmoothProfile(eta.x0() * R, eta.x1() * R, [eta, R](double r) {
    const ProfileValue pv = eta(r / R);
    return ProfileValue{pv.value, pv.d1 / R, pv.d2 / (R * R)};
  });
}

DerivativeCheck check_derivatives(const SmoothProfile& p, double step, double tol,
                                  int samples) {
  if (!(step > 0.0)) throw std::invalid_argument("check_derivatives: step <= 0");
  if (!(tol > 0.0)) throw std::invalid_argument("check_derivatives: tol <= 0");
  const double lo = p.lo(), hi = p.hi();
  if (step >= (hi - lo) / 4.0) {
    throw std::invalid_argument("check_derivatives: step too large for domain");
  }

  // Rounding floor of a central difference is ~eps*scale/step; if that
  // already exceeds tol the comparison is meaningless at this precision.
  double scale = 1.0;
  for (int i = 0; i <= 16; ++i) {
    const double r = lo + (hi - lo) * i / 16.0;
    const ProfileValue pv = p(r);
    scale = std::max({scale, std::fabs(pv.value), std::fabs(pv.d1)});
  }
  const double eps = std::numeric_limits<double>::epsilon();
  if (4.0 * eps * scale / step > tol) {
    throw std::invalid_argument(
        "check_derivatives: ill-conditioned step (rounding floor " +
        std::to_string(4.0 * eps * scale / step) + " exceeds tol)");
  }

  DerivativeCheck out;
  for (int i = 0; i < samples; ++i) {
    const double u = (i + 0.5) / samples;
    const double r = (lo + step) + u * ((hi - step) - (lo + step));
    const ProfileValue at = p(r);
    const ProfileValue fwd = p(r + step);
    const ProfileValue bwd = p(r - step);
    const double d1_fd = (fwd.value - bwd.value) / (2.0 * step);
    const double d2_fd = (fwd.d1 - bwd.d1) / (2.0 * step);
    const double e1 = std::fabs(d1_fd - at.d1);
    const double e2 = std::fabs(d2_fd - at.d2);
    if (e1 > out.max_d1_error) {
      out.max_d1_error = e1;
      out.worst_r_d1 = r;
    }
    if (e2 > out.max_d2_error) {
      out.max_d2_error = e2;
      out.worst_r_d2 = r;
    }
    if (e1 > tol || e2 > tol) ++out.flagged;
  }
  out.pass = out.flagged == 0;
  return out;
}

BumpFunction drill_bump() { return make_bump(1.0 / 3.0, 2.0 / 3.0); }

BumpFunction fill_bump() {
  const double ln2 = std::log(2.0);
  return make_bump(-ln2 / 2.0, -ln2 / 4.0);
}

}  // namespace drillfill
