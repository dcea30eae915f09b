#pragma once

#include <functional>
#include <vector>

namespace drillfill {

// Value of a C^2 function together with its first two derivatives.
struct ProfileValue {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

// A scalar C^2 function r -> (value, d1, d2) with closed-form derivatives.
// [lo, hi] is the certified interval; evaluating outside it just extends the
// defining formula. Profiles are immutable and evaluation is pure, so they
// can be shared freely across threads.
class SmoothProfile {
 public:
  using Eval = std::function<ProfileValue(double)>;

  SmoothProfile() = default;
  SmoothProfile(double lo, double hi, Eval eval);

  ProfileValue operator()(double r) const { return eval_(r); }
  double value(double r) const { return eval_(r).value; }
  double d1(double r) const { return eval_(r).d1; }
  double d2(double r) const { return eval_(r).d2; }

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

  static SmoothProfile constant(double c, double lo, double hi);
  // c0 + c1*r
  static SmoothProfile linear(double c0, double c1, double lo, double hi);
  // c * sinh(r + shift)
  static SmoothProfile sinh_scaled(double c, double shift, double lo, double hi);
  // c * cosh(r + shift)
  static SmoothProfile cosh_scaled(double c, double shift, double lo, double hi);
  // c * exp(rate * r)
  static SmoothProfile exp_scaled(double c, double rate, double lo, double hi);

 private:
  double lo_ = 0.0;
  double hi_ = 1.0;
  Eval eval_ = [](double) { return ProfileValue{}; };
};

// Monotone smooth step: identically 0 on (-inf, x0], identically 1 on
// [x1, inf), strictly increasing in between, flat to all orders at both
// endpoints. c1 and c2 are certified sups of |eta'| and |eta''| (dense
// sampling with a safety margin, see kDerivativeSafety).
class BumpFunction {
 public:
  BumpFunction() = default;
  BumpFunction(double x0, double x1, SmoothProfile profile, double c1, double c2);

  ProfileValue operator()(double r) const { return profile_(r); }
  double value(double r) const { return profile_.value(r); }

  const SmoothProfile& profile() const noexcept { return profile_; }
  double x0() const noexcept { return x0_; }
  double x1() const noexcept { return x1_; }
  double width() const noexcept { return x1_ - x0_; }
  double c1() const noexcept { return c1_; }
  double c2() const noexcept { return c2_; }

 private:
  double x0_ = 0.0;
  double x1_ = 1.0;
  SmoothProfile profile_;
  double c1_ = 0.0;
  double c2_ = 0.0;
};

struct DerivativeBounds {
  double c1 = 0.0;
  double c2 = 0.0;
};

// Relative margin applied on top of sampled derivative sups.
inline constexpr double kDerivativeSafety = 0.01;

// Build the standard mollifier transition on [x0, x1]:
//   eta(x) = f(t) / (f(t) + f(1-t)),  t = (x-x0)/(x1-x0),  f(t) = exp(-1/t).
// Closed-form first and second derivatives; within 1e-12 of t in {0,1} the
// exact limit (0 or 1, zero derivatives) is returned since the function is
// flat there to infinite order. Throws std::invalid_argument if x0 >= x1.
BumpFunction make_bump(double x0, double x1);

// Certify sups of |eta'| and |eta''| by dense sampling (uniform grid in the
// normalized transition coordinate plus golden-section refinement around the
// grid maximum), inflated by kDerivativeSafety. samples must be >= 1000.
// Throws std::overflow_error if a derivative sample is non-finite.
DerivativeBounds bump_derivative_bounds(const BumpFunction& eta, int samples);

// chi(r) = eta(r/R): transition moves to [x0*R, x1*R], derivatives pick up
// 1/R and 1/R^2. Throws std::invalid_argument if R <= 0.
SmoothProfile rescale_bump(const BumpFunction& eta, double R);

// Consistency report for closed-form derivatives vs central differences.
struct DerivativeCheck {
  double max_d1_error = 0.0;
  double max_d2_error = 0.0;
  double worst_r_d1 = 0.0;
  double worst_r_d2 = 0.0;
  int flagged = 0;  // sample points where either error exceeds tol
  bool pass = true;
};

// Compare d1 against the central difference of the value and d2 against the
// central difference of d1, at interior sample points. Differencing d1 keeps
// the rounding floor of the d2 check at eps/step instead of eps/step^2.
// Throws std::invalid_argument if the step is non-positive, too large for
// the domain, or too small for the working precision at this tolerance.
DerivativeCheck check_derivatives(const SmoothProfile& p, double step, double tol,
                                  int samples = 512);

// Canonical bumps used by the drill and fill constructions.
BumpFunction drill_bump();  // transition on [1/3, 2/3]
BumpFunction fill_bump();   // transition on [-log(2)/2, -log(2)/4]

}  // namespace drillfill
