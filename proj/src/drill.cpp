#include "drillfill/drill.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace drillfill {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct PhiPsi {
  double phi, phi1, phi2;
  double psi, psi1, psi2;
};

// Transition formulas, valid for any r > 0. With chi = eta(r/R):
//   phi  = log(sinh(R)) + r + chi * L,      L = log(sinh r) - log(sinh R) - r,
//   phi' = chi' L + chi (coth r - 1) + 1,
//   phi''= chi'' L + 2 chi' (coth r - 1) - chi / sinh(r)^2,
// and the cosh analogues for psi with M = log(cosh r) - log(cosh R) - r.
PhiPsi transition_terms(const BumpFunction& eta, double R, double r) {
  const ProfileValue c = eta(r / R);
  const double chi = c.value;
  const double chi1 = c.d1 / R;
  const double chi2 = c.d2 / (R * R);
  const double sh = std::sinh(r);
  const double ch = std::cosh(r);
  const double L = std::log(sh) - std::log(std::sinh(R)) - r;
  const double M = std::log(ch) - std::log(std::cosh(R)) - r;
  const double cothm1 = ch / sh - 1.0;
  const double tanhm1 = sh / ch - 1.0;
  PhiPsi t;
  t.phi = std::log(std::sinh(R)) + r + chi * L;
  t.phi1 = chi1 * L + chi * cothm1 + 1.0;
  t.phi2 = chi2 * L + 2.0 * chi1 * cothm1 - chi / (sh * sh);
  t.psi = std::log(std::cosh(R)) + r + chi * M;
  t.psi1 = chi1 * M + chi * tanhm1 + 1.0;
  t.psi2 = chi2 * M + 2.0 * chi1 * tanhm1 + chi / (ch * ch);
  return t;
}

ProfileValue cusp_a(double R, double r) {
  const double v = std::sinh(R) * std::exp(r);
  return {v, v, v};
}

ProfileValue cusp_b(double R, double r) {
  const double v = std::cosh(R) * std::exp(r);
  return {v, v, v};
}

ProfileValue tube_a(double r) {
  const double sh = std::sinh(r);
  return {sh, std::cosh(r), sh};
}

ProfileValue tube_b(double r) {
  const double ch = std::cosh(r);
  return {ch, std::sinh(r), ch};
}

ProfileValue transition_a(const BumpFunction& eta, double R, double r) {
  const PhiPsi t = transition_terms(eta, R, r);
  const double v = std::exp(t.phi);
  return {v, t.phi1 * v, (t.phi1 * t.phi1 + t.phi2) * v};
}

ProfileValue transition_b(const BumpFunction& eta, double R, double r) {
  const PhiPsi t = transition_terms(eta, R, r);
  const double v = std::exp(t.psi);
  return {v, t.psi1 * v, (t.psi1 * t.psi1 + t.psi2) * v};
}

void require_drill_bump(const BumpFunction& eta) {
  if (std::fabs(eta.x0() - 1.0 / 3.0) > 1e-12 ||
      std::fabs(eta.x1() - 2.0 / 3.0) > 1e-12) {
    throw std::invalid_argument(
        "build_drill_profiles: eta must transition on [1/3, 2/3]");
  }
}

}  // namespace

ProfileValue DrillProfilePair::eval_a(Piece piece, double r) const {
  switch (piece) {
    case Piece::Cusp:
      return cusp_a(R, r);
    case Piece::Tube:
      return tube_a(r);
    default:
      return transition_a(eta, R, r);
  }
}

ProfileValue DrillProfilePair::eval_b(Piece piece, double r) const {
  switch (piece) {
    case Piece::Cusp:
      return cusp_b(R, r);
    case Piece::Tube:
      return tube_b(r);
    default:
      return transition_b(eta, R, r);
  }
}

DrillProfilePair build_drill_profiles(double R, const BumpFunction& eta) {
  if (!(R > 0.0 && R <= 1.0)) {
    throw std::invalid_argument("build_drill_profiles: require R in (0, 1]");
  }
  require_drill_bump(eta);

  DrillProfilePair p;
  p.R = R;
  p.eta = eta;
  p.chi = rescale_bump(eta, R);

  const double lo = -2.0, hi = R + 1.0;
  const double cusp_end = R / 3.0;
  const double tube_start = 2.0 * R / 3.0;

  p.phi = SmoothProfile(lo, hi, [eta, R, cusp_end, tube_start](double r) {
    if (r <= cusp_end) {
      return ProfileValue{std::log(std::sinh(R)) + r, 1.0, 0.0};
    }
    if (r >= tube_start) {
      const double sh = std::sinh(r);
      const double coth = std::cosh(r) / sh;
      return ProfileValue{std::log(sh), coth, -1.0 / (sh * sh)};
    }
    const PhiPsi t = transition_terms(eta, R, r);
    return ProfileValue{t.phi, t.phi1, t.phi2};
  });
  p.psi = SmoothProfile(lo, hi, [eta, R, cusp_end, tube_start](double r) {
    if (r <= cusp_end) {
      return ProfileValue{std::log(std::cosh(R)) + r, 1.0, 0.0};
    }
    if (r >= tube_start) {
      const double ch = std::cosh(r);
      const double tanh = std::sinh(r) / ch;
      return ProfileValue{std::log(ch), tanh, 1.0 / (ch * ch)};
    }
    const PhiPsi t = transition_terms(eta, R, r);
    return ProfileValue{t.psi, t.psi1, t.psi2};
  });
  p.a = SmoothProfile(lo, hi, [eta, R, cusp_end, tube_start](double r) {
    if (r <= cusp_end) return cusp_a(R, r);
    if (r >= tube_start) return tube_a(r);
    return transition_a(eta, R, r);
  });
  p.b = SmoothProfile(lo, hi, [eta, R, cusp_end, tube_start](double r) {
    if (r <= cusp_end) return cusp_b(R, r);
    if (r >= tube_start) return tube_b(r);
    return transition_b(eta, R, r);
  });
  return p;
}

double drill_curvature_defect(const DrillProfilePair& p, double r) {
  if (!(r >= p.cusp_end() && r <= p.tube_start())) {
    throw std::domain_error(
        "drill_curvature_defect: r outside the transition interval [R/3, 2R/3]");
  }
  const PhiPsi t = transition_terms(p.eta, p.R, r);
  const double sum =
      t.phi1 * t.phi1 + t.psi1 * t.psi1 + t.phi1 * t.psi1 + t.phi2 + t.psi2;
  return std::fabs(sum);
}

DrillPropertyReport verify_drill_properties(const DrillProfilePair& p, int samples) {
  if (samples < 1000) {
    throw std::invalid_argument("verify_drill_properties: require samples >= 1000");
  }
  const double R = p.R;
  const double lo = -2.0, hi = R + 1.0;

  DrillPropertyReport rep;
  rep.R = R;
  rep.samples = samples;
  rep.min_a = rep.min_b = std::numeric_limits<double>::infinity();
  rep.product_min_slack = std::numeric_limits<double>::infinity();

  std::vector<double> grid;
  grid.reserve(samples + 2);
  for (int i = 0; i < samples; ++i) {
    grid.push_back(lo + (hi - lo) * i / (samples - 1));
  }
  grid.push_back(p.cusp_end());
  grid.push_back(p.tube_start());

  const double shch = std::sinh(R) * std::cosh(R);
  for (const double r : grid) {
    const ProfileValue a = p.a(r);
    const ProfileValue b = p.b(r);
    rep.min_a = std::min(rep.min_a, a.value);
    rep.min_b = std::min(rep.min_b, b.value);

    if (r >= p.tube_start()) {
      rep.tube_branch_dev = std::max(
          {rep.tube_branch_dev, std::fabs(a.value - std::sinh(r)),
           std::fabs(b.value - std::cosh(r))});
    }
    if (r <= p.cusp_end()) {
      rep.cusp_branch_dev = std::max(
          {rep.cusp_branch_dev, std::fabs(a.value - std::sinh(R) * std::exp(r)),
           std::fabs(b.value - std::cosh(R) * std::exp(r))});
    }

    const double product_bound = shch * std::exp(2.0 * r);
    rep.product_min_slack =
        std::min(rep.product_min_slack,
                 (product_bound - a.value * b.value) / product_bound);

    if (r < p.cusp_end() || r > p.tube_start()) {
      const double sum = a.d2 / a.value + b.d2 / b.value +
                         (a.d1 * b.d1) / (a.value * b.value);
      rep.max_hyperbolic_dev =
          std::max(rep.max_hyperbolic_dev, std::fabs(-2.0 * sum + 6.0));
    }
  }

  // Gluing jumps: each junction compares the two adjacent closed forms at
  // the junction radius itself (their one-sided limits).
  using Piece = DrillProfilePair::Piece;
  const struct {
    double r;
    Piece left, right;
  } junctions[2] = {{p.cusp_end(), Piece::Cusp, Piece::Transition},
                    {p.tube_start(), Piece::Transition, Piece::Tube}};
  for (const auto& j : junctions) {
    const ProfileValue la = p.eval_a(j.left, j.r), ra = p.eval_a(j.right, j.r);
    const ProfileValue lb = p.eval_b(j.left, j.r), rb = p.eval_b(j.right, j.r);
    rep.max_glue_jump = std::max(
        {rep.max_glue_jump, std::fabs(la.value - ra.value),
         std::fabs(la.d1 - ra.d1), std::fabs(la.d2 - ra.d2),
         std::fabs(lb.value - rb.value), std::fabs(lb.d1 - rb.d1),
         std::fabs(lb.d2 - rb.d2)});
  }
  return rep;
}

namespace {

// Deterministic golden-section maximization used to sharpen grid suprema.
template <typename F>
double refine_max(F&& f, double lo, double hi, double seed_value) {
  const double phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < 60; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    }
  }
  return std::max({seed_value, f1, f2});
}

}  // namespace

DrillConstantEstimate estimate_drill_constant(const BumpFunction& eta,
                                              const std::vector<double>& R_grid,
                                              int samples) {
  if (R_grid.empty()) {
    throw std::invalid_argument("estimate_drill_constant: empty R grid");
  }
  if (samples < 1000) {
    throw std::invalid_argument("estimate_drill_constant: require samples >= 1000");
  }
  for (const double R : R_grid) {
    if (!(R > 0.0 && R <= 1.0)) {
      throw std::invalid_argument("estimate_drill_constant: R outside (0, 1]");
    }
  }
  require_drill_bump(eta);

  DrillConstantEstimate est;
  est.rows.reserve(R_grid.size());
  for (const double R : R_grid) {
    const double lo = R / 3.0, hi = 2.0 * R / 3.0;
    const auto sum_at = [&](double r) {
      const PhiPsi t = transition_terms(eta, R, r);
      return t.phi1 * t.phi1 + t.psi1 * t.psi1 + t.phi1 * t.psi1 + t.phi2 + t.psi2;
    };
    double sup_plain = 0.0, sup_centered = 0.0;
    double arg_plain = lo, arg_centered = lo;
    for (int i = 0; i < samples; ++i) {
      const double r = lo + (hi - lo) * i / (samples - 1);
      const double s = sum_at(r);
      if (std::fabs(s) > sup_plain) {
        sup_plain = std::fabs(s);
        arg_plain = r;
      }
      if (std::fabs(s - 3.0) > sup_centered) {
        sup_centered = std::fabs(s - 3.0);
        arg_centered = r;
      }
    }
    const double h = (hi - lo) / (samples - 1);
    sup_plain = refine_max([&](double r) { return std::fabs(sum_at(r)); },
                           std::max(lo, arg_plain - h), std::min(hi, arg_plain + h),
                           sup_plain);
    sup_centered = refine_max(
        [&](double r) { return std::fabs(sum_at(r) - 3.0); },
        std::max(lo, arg_centered - h), std::min(hi, arg_centered + h),
        sup_centered);

    DrillConstantRow row;
    row.R = R;
    row.sup_defect = sup_plain;
    row.r2_defect = R * R * sup_plain;
    row.sup_centered = sup_centered;
    row.r2_centered = R * R * sup_centered;
    est.rows.push_back(row);
  }

  double r2_max = 0.0, r2_min = std::numeric_limits<double>::infinity();
  double r2c_max = 0.0;
  for (const auto& row : est.rows) {
    r2_max = std::max(r2_max, row.r2_defect);
    r2_min = std::min(r2_min, row.r2_defect);
    r2c_max = std::max(r2c_max, row.r2_centered);
  }
  est.c_hat = (1.0 + est.safety) * r2_max;
  est.c_hat_centered = (1.0 + est.safety) * r2c_max;
  est.r2_ratio = r2_max / r2_min;
  double dev = 0.0;
  for (const auto& row : est.rows) {
    dev = std::max(dev, std::fabs(row.r2_defect - r2_max) / est.c_hat);
  }
  est.scaling_deviation_max = dev;
  return est;
}

WarpedMetric drill_shell_metric(const DrillProfilePair& p, double ell, double r_lo) {
  if (!(ell > 0.0)) throw std::invalid_argument("drill_shell_metric: ell <= 0");
  if (!(r_lo < p.R)) throw std::invalid_argument("drill_shell_metric: r_lo >= R");
  const SmoothProfile a = p.a;
  const SmoothProfile b = p.b;
  const double two_pi = 2.0 * kPi;
  SmoothProfile a_eff(r_lo, p.R, [a, two_pi](double r) {
    ProfileValue v = a(r);
    return ProfileValue{two_pi * v.value, two_pi * v.d1, two_pi * v.d2};
  });
  SmoothProfile b_eff(r_lo, p.R, [b, ell](double r) {
    ProfileValue v = b(r);
    return ProfileValue{ell * v.value, ell * v.d1, ell * v.d2};
  });
  return WarpedMetric(r_lo, p.R, std::move(a_eff), std::move(b_eff), 1.0, 1.0);
}

double shell_scalar_integral(const DrillProfilePair& p, double ell, double eps,
                             double tol) {
  if (!(eps >= 0.0 && eps < p.cusp_end())) {
    throw std::invalid_argument("shell_scalar_integral: require 0 <= eps < R/3");
  }
  const WarpedMetric shell = drill_shell_metric(p, ell, eps);
  return std::pow(6.0, 1.5) * scalar_power_integral(shell, tol);
}

ShellBoundCheck shell_integral_bound(const DrillProfilePair& p, double ell,
                                     double eps, double tol, double c_hat) {
  ShellBoundCheck out;
  out.c_hat = c_hat;
  out.integral = shell_scalar_integral(p, ell, eps, tol);
  const double R = p.R;
  out.bound = std::pow(2.0 * c_hat, 1.5) * kPi * ell * std::sinh(R) *
              std::cosh(R) * (std::exp(2.0 * R) - std::exp(2.0 * eps)) /
              (R * R * R);
  out.slack = out.bound - out.integral;
  out.ok = out.slack >= 0.0;
  return out;
}

}  // namespace drillfill
