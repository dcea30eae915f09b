#include "drillfill/fill.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "drillfill/errors.hpp"

namespace drillfill {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct FillTerms {
  double phi, psi;
  double A, B;          // phi' - 1, psi' - 1
  double phi2, psi2;    // second derivatives
};

// Transition formulas in the stable variable E = e^{-2(r+R)} < 1/2:
//   phi' - 1 = -chi' log(1-E) + (1-chi) 2E/(1-E)
//   psi' - 1 = -chi' log(1+E) - (1-chi) 2E/(1+E)
//   phi''    = -chi'' log(1-E) - 4 chi' E/(1-E) - (1-chi) 4E/(1-E)^2
//   psi''    = -chi'' log(1+E) + 4 chi' E/(1+E) + (1-chi) 4E/(1+E)^2
// using 2*pi*sinh(r+R)/(ell1 e^r) = 1-E and kappa*cosh(r+R)/(ell2 e^r) = 1+E.
FillTerms transition_terms(const BumpFunction& eta, double ell1, double ell2,
                           double R, double kappa, double r) {
  const ProfileValue c = eta(r);
  const double chi = c.value, chi1 = c.d1, chi2 = c.d2;
  const double E = std::exp(-2.0 * (r + R));
  const double lm = std::log1p(-E);
  const double lp = std::log1p(E);
  const double om = 1.0 - chi;
  FillTerms t;
  t.A = -chi1 * lm + om * 2.0 * E / (1.0 - E);
  t.B = -chi1 * lp - om * 2.0 * E / (1.0 + E);
  t.phi2 = -chi2 * lm - 4.0 * chi1 * E / (1.0 - E) -
           om * 4.0 * E / ((1.0 - E) * (1.0 - E));
  t.psi2 = -chi2 * lp + 4.0 * chi1 * E / (1.0 + E) +
           om * 4.0 * E / ((1.0 + E) * (1.0 + E));
  t.phi = om * std::log(2.0 * kPi * std::sinh(r + R)) + chi * (std::log(ell1) + r);
  t.psi = om * std::log(kappa * std::cosh(r + R)) + chi * (std::log(ell2) + r);
  return t;
}

ProfileValue tube_a(double R, double r) {
  const double x = r + R;
  const double v = 2.0 * kPi * std::sinh(x);
  return {v, 2.0 * kPi * std::cosh(x), v};
}

ProfileValue tube_b(double kappa, double R, double r) {
  const double x = r + R;
  const double v = kappa * std::cosh(x);
  return {v, kappa * std::sinh(x), v};
}

ProfileValue cusp_a(double ell1, double r) {
  const double v = ell1 * std::exp(r);
  return {v, v, v};
}

ProfileValue cusp_b(double ell2, double r) {
  const double v = ell2 * std::exp(r);
  return {v, v, v};
}

ProfileValue transition_a(const BumpFunction& eta, double ell1, double ell2,
                          double R, double kappa, double r) {
  const FillTerms t = transition_terms(eta, ell1, ell2, R, kappa, r);
  const double v = std::exp(t.phi);
  const double d1 = 1.0 + t.A;
  return {v, d1 * v, (d1 * d1 + t.phi2) * v};
}

ProfileValue transition_b(const BumpFunction& eta, double ell1, double ell2,
                          double R, double kappa, double r) {
  const FillTerms t = transition_terms(eta, ell1, ell2, R, kappa, r);
  const double v = std::exp(t.psi);
  const double d1 = 1.0 + t.B;
  return {v, d1 * v, (d1 * d1 + t.psi2) * v};
}

void require_fill_bump(const BumpFunction& eta) {
  const double ln2 = std::log(2.0);
  if (std::fabs(eta.x0() + ln2 / 2.0) > 1e-12 ||
      std::fabs(eta.x1() + ln2 / 4.0) > 1e-12) {
    throw std::invalid_argument(
        "build_fill_profiles: eta must transition on [-log(2)/2, -log(2)/4]");
  }
}

}  // namespace

ProfileValue FillProfilePair::eval_a(Piece piece, double r) const {
  switch (piece) {
    case Piece::Tube:
      return tube_a(R, r);
    case Piece::Cusp:
      return cusp_a(ell1, r);
    default:
      return transition_a(eta, ell1, ell2, R, kappa, r);
  }
}

ProfileValue FillProfilePair::eval_b(Piece piece, double r) const {
  switch (piece) {
    case Piece::Tube:
      return tube_b(kappa, R, r);
    case Piece::Cusp:
      return cusp_b(ell2, r);
    default:
      return transition_b(eta, ell1, ell2, R, kappa, r);
  }
}

FillProfilePair build_fill_profiles(double ell1, double ell2,
                                    const BumpFunction& eta) {
  if (!(ell1 > 2.0 * kPi)) {
    throw std::invalid_argument("build_fill_profiles: require ell1 > 2*pi");
  }
  if (!(ell2 > 0.0)) {
    throw std::invalid_argument("build_fill_profiles: require ell2 > 0");
  }
  require_fill_bump(eta);

  FillProfilePair p;
  p.ell1 = ell1;
  p.ell2 = ell2;
  p.R = std::log(ell1 / kPi);
  p.kappa = 2.0 * kPi * ell2 / ell1;
  p.delta = std::log(2.0) / 4.0;
  p.eta = eta;
  p.chi = eta.profile();

  const double R = p.R, kappa = p.kappa;
  const double tube_end = p.tube_end(), cusp_start = p.cusp_start();
  const double lo = -R, hi = 0.0;

  p.phi = SmoothProfile(lo, hi, [eta, ell1, ell2, R, kappa, tube_end,
                                 cusp_start](double r) {
    if (r <= tube_end) {
      const double x = r + R;
      const double coth = std::cosh(x) / std::sinh(x);
      return ProfileValue{std::log(2.0 * kPi * std::sinh(x)), coth,
                          -1.0 / (std::sinh(x) * std::sinh(x))};
    }
    if (r >= cusp_start) {
      return ProfileValue{std::log(ell1) + r, 1.0, 0.0};
    }
    const FillTerms t = transition_terms(eta, ell1, ell2, R, kappa, r);
    return ProfileValue{t.phi, 1.0 + t.A, t.phi2};
  });
  p.psi = SmoothProfile(lo, hi, [eta, ell1, ell2, R, kappa, tube_end,
                                 cusp_start](double r) {
    if (r <= tube_end) {
      const double x = r + R;
      const double tanh = std::sinh(x) / std::cosh(x);
      return ProfileValue{std::log(kappa * std::cosh(x)), tanh,
                          1.0 / (std::cosh(x) * std::cosh(x))};
    }
    if (r >= cusp_start) {
      return ProfileValue{std::log(ell2) + r, 1.0, 0.0};
    }
    const FillTerms t = transition_terms(eta, ell1, ell2, R, kappa, r);
    return ProfileValue{t.psi, 1.0 + t.B, t.psi2};
  });
  p.a = SmoothProfile(lo, hi, [eta, ell1, ell2, R, kappa, tube_end,
                               cusp_start](double r) {
    if (r <= tube_end) return tube_a(R, r);
    if (r >= cusp_start) return cusp_a(ell1, r);
    return transition_a(eta, ell1, ell2, R, kappa, r);
  });
  p.b = SmoothProfile(lo, hi, [eta, ell1, ell2, R, kappa, tube_end,
                               cusp_start](double r) {
    if (r <= tube_end) return tube_b(kappa, R, r);
    if (r >= cusp_start) return cusp_b(ell2, r);
    return transition_b(eta, ell1, ell2, R, kappa, r);
  });
  return p;
}

double fill_curvature_defect(const FillProfilePair& p, double r) {
  if (r == -p.R) {
    throw std::domain_error("fill_curvature_defect: r = -R is the core axis");
  }
  if (!(r > -p.R && r < 0.0)) {
    throw std::domain_error("fill_curvature_defect: r outside (-R, 0)");
  }
  const FillTerms t = transition_terms(p.eta, p.ell1, p.ell2, p.R, p.kappa, r);
  // sum - 3 regrouped around the cusp values phi' = psi' = 1: every term is
  // O(E) or smaller, which keeps the exact branches at rounding level.
  const double d =
      3.0 * (t.A + t.B) + t.A * t.A + t.B * t.B + t.A * t.B + t.phi2 + t.psi2;
  return std::fabs(d);
}

FillConstantEstimate estimate_fill_constant(const BumpFunction& eta,
                                            const std::vector<double>& ell_grid,
                                            int samples) {
  if (ell_grid.size() < 4) {
    throw std::invalid_argument("estimate_fill_constant: need >= 4 grid values");
  }
  if (samples < 1000) {
    throw std::invalid_argument("estimate_fill_constant: require samples >= 1000");
  }
  double gmin = std::numeric_limits<double>::infinity(), gmax = 0.0;
  for (const double l : ell_grid) {
    if (!(l > 2.0 * kPi)) {
      throw std::invalid_argument("estimate_fill_constant: ell1 <= 2*pi in grid");
    }
    gmin = std::min(gmin, l);
    gmax = std::max(gmax, l);
  }
  if (gmax / gmin < 4.0) {
    throw std::invalid_argument(
        "estimate_fill_constant: grid must span at least a factor 4");
  }
  require_fill_bump(eta);

  const double pi4 = kPi * kPi * kPi * kPi;
  FillConstantEstimate est;
  est.rows.reserve(ell_grid.size());
  for (const double ell1 : ell_grid) {
    const FillProfilePair p = build_fill_profiles(ell1, 1.0, eta);
    const double lo = p.tube_end(), hi = p.cusp_start();
    double sup = 0.0, arg = lo;
    for (int i = 0; i < samples; ++i) {
      const double r = lo + (hi - lo) * i / (samples - 1);
      const double d = fill_curvature_defect(p, r);
      if (d > sup) {
        sup = d;
        arg = r;
      }
    }
    // golden-section sharpening around the grid maximum
    const double phi = 0.6180339887498949;
    double a = std::max(lo, arg - (hi - lo) / (samples - 1));
    double b = std::min(hi, arg + (hi - lo) / (samples - 1));
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = fill_curvature_defect(p, x1), f2 = fill_curvature_defect(p, x2);
    for (int i = 0; i < 60; ++i) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + phi * (b - a);
        f2 = fill_curvature_defect(p, x2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - phi * (b - a);
        f1 = fill_curvature_defect(p, x1);
      }
    }
    sup = std::max({sup, f1, f2});

    FillConstantRow row;
    row.ell1 = ell1;
    row.sup_defect = sup;
    row.normalized = ell1 * ell1 * ell1 * ell1 / pi4 * sup;
    est.rows.push_back(row);
  }

  double nmax = 0.0;
  for (const auto& row : est.rows) nmax = std::max(nmax, row.normalized);
  est.c_hat = (1.0 + est.safety) * nmax;

  // least-squares slope of log(sup_defect) against log(ell1)
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(est.rows.size());
  for (const auto& row : est.rows) {
    const double x = std::log(row.ell1);
    const double y = std::log(row.sup_defect);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  est.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return est;
}

FillPropertyReport verify_fill_properties(const FillProfilePair& p, int samples) {
  if (samples < 1000) {
    throw std::invalid_argument("verify_fill_properties: require samples >= 1000");
  }
  FillPropertyReport rep;
  rep.ell1 = p.ell1;
  rep.ell2 = p.ell2;
  rep.samples = samples;
  rep.min_a = rep.min_b = std::numeric_limits<double>::infinity();
  rep.product_min_slack = std::numeric_limits<double>::infinity();

  const double R = p.R;
  std::vector<double> grid;
  grid.reserve(samples + 2);
  for (int i = 1; i <= samples; ++i) {
    grid.push_back(-R + R * i / samples);  // (-R, 0]
  }
  grid.push_back(p.tube_end());
  grid.push_back(p.cusp_start());

  const double lb = p.ell1 * p.ell2;
  for (const double r : grid) {
    const ProfileValue a = p.a(r);
    const ProfileValue b = p.b(r);
    rep.min_a = std::min(rep.min_a, a.value);
    rep.min_b = std::min(rep.min_b, b.value);

    if (r <= p.tube_end()) {
      const double x = r + R;
      rep.tube_branch_dev = std::max(
          {rep.tube_branch_dev,
           std::fabs(a.value - 2.0 * kPi * std::sinh(x)),
           std::fabs(b.value - p.kappa * std::cosh(x))});
    }
    if (r >= p.cusp_start()) {
      rep.cusp_branch_dev = std::max(
          {rep.cusp_branch_dev, std::fabs(a.value - p.ell1 * std::exp(r)),
           std::fabs(b.value - p.ell2 * std::exp(r))});
    }

    const double bound = lb * std::exp(2.0 * r);
    rep.product_min_slack =
        std::min(rep.product_min_slack, (bound - a.value * b.value) / bound);

    const bool on_branch = r <= p.tube_end() || r >= p.cusp_start();
    if (on_branch && r + R >= 0.05 && r < 0.0) {
      rep.max_branch_defect =
          std::max(rep.max_branch_defect, fill_curvature_defect(p, r));
    }
  }

  const ProfileValue core = p.a(-R);
  rep.core_value = std::fabs(core.value);
  rep.core_derivative_residual = std::fabs(core.d1 - 2.0 * kPi);

  using Piece = FillProfilePair::Piece;
  const struct {
    double r;
    Piece left, right;
  } junctions[2] = {{p.tube_end(), Piece::Tube, Piece::Transition},
                    {p.cusp_start(), Piece::Transition, Piece::Cusp}};
  for (const auto& j : junctions) {
    const ProfileValue la = p.eval_a(j.left, j.r), ra = p.eval_a(j.right, j.r);
    const ProfileValue lb2 = p.eval_b(j.left, j.r), rb = p.eval_b(j.right, j.r);
    rep.max_glue_jump = std::max(
        {rep.max_glue_jump, std::fabs(la.value - ra.value),
         std::fabs(la.d1 - ra.d1), std::fabs(la.d2 - ra.d2),
         std::fabs(lb2.value - rb.value), std::fabs(lb2.d1 - rb.d1),
         std::fabs(lb2.d2 - rb.d2)});
  }
  return rep;
}

SolidTorusMetric solid_torus_from_flat_torus(const FlatTorusData& t,
                                             const BumpFunction& eta) {
  if (!(t.area > 0.0)) {
    throw std::invalid_argument("solid_torus_from_flat_torus: area <= 0");
  }
  if (!(t.twist >= 0.0 && t.twist < 1.0)) {
    throw std::invalid_argument("solid_torus_from_flat_torus: twist outside [0,1)");
  }
  if (!(t.ell > 2.0 * kPi)) {
    throw HypothesisError("ell > 2*pi",
                          "solid_torus_from_flat_torus: meridian length " +
                              std::to_string(t.ell) +
                              " violates the 2*pi-theorem hypothesis");
  }
  FillProfilePair p = build_fill_profiles(t.ell, 1.0, eta);
  const double s = t.height();
  WarpedMetric metric(-p.R, 0.0, p.a, p.b, 1.0, s);
  const double residual = std::fabs(p.a(-p.R).d1 - 2.0 * kPi);
  return SolidTorusMetric{std::move(metric), t, std::move(p), residual};
}

TubeIntegralReport tube_scalar_integral_bound(const SolidTorusMetric& st,
                                              double c_hat, double tol) {
  if (!(c_hat > 0.0)) {
    throw std::invalid_argument("tube_scalar_integral_bound: c_hat <= 0");
  }
  TubeIntegralReport rep;
  rep.area = st.torus.area;
  rep.ell = st.torus.ell;
  rep.c_hat = c_hat;
  rep.volume = volume(st.metric, tol);
  rep.integral = scalar_power_integral(st.metric, tol);

  const double l2 = rep.ell * rep.ell;
  const double x = c_hat * kPi * kPi * kPi * kPi / (l2 * l2);
  rep.volume_bound = 0.5 * rep.area * (1.0 - kPi * kPi / l2);
  rep.volume_slack = rep.volume_bound - rep.volume;
  rep.deviation_bound = 1.5 * x * rep.volume;
  rep.deviation_slack = rep.deviation_bound - std::fabs(rep.integral - rep.volume);
  rep.integral_bound = rep.volume_bound * (1.0 + 1.5 * x);
  rep.integral_slack = rep.integral_bound - rep.integral;

  // Pointwise form of the deviation step, measured on a fixed sample grid.
  // max_dev uses the actual scalar-curvature deviation |S|/6 in [1-d/3, 1+d/3];
  // lin_max follows the cruder route through (1+d)^{3/2}-1, which overshoots
  // (3/2)x once the defect is large. Both are recorded, neither gates chain_ok.
  const FillProfilePair& p = st.profiles;
  double max_dev = 0.0;
  double lin_max = 0.0;
  const int n = 4001;
  for (int i = 1; i < n; ++i) {
    const double r = -p.R + p.R * i / n;
    const double d = fill_curvature_defect(p, r);
    const double hi = std::pow(1.0 + d / 3.0, 1.5) - 1.0;
    const double lo = 1.0 - std::pow(std::max(0.0, 1.0 - d / 3.0), 1.5);
    max_dev = std::max({max_dev, hi, lo});
    lin_max = std::max(lin_max, std::pow(1.0 + d, 1.5) - 1.0);
  }
  rep.pointwise_max_dev = max_dev;
  rep.pointwise_step_ok = max_dev <= 1.5 * x;
  rep.linearization_ok = lin_max <= 1.5 * x;
  return rep;
}

}  // namespace drillfill
