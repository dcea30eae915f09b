#include "drillfill/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "drillfill/errors.hpp"

namespace drillfill {

namespace {

// 15-point Kronrod extension of 7-point Gauss (positive abscissae; the rule
// is symmetric). Odd-indexed abscissae are the Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
  double kronrod;
  double error;  // |K15 - G7|
};

PanelResult gauss_kronrod_15(const std::function<double(double)>& f, double lo,
                             double hi) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  const double fc = f(c);
  double kron = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double fsum = f(c - x) + f(c + x);
    kron += kWgk[j] * fsum;
    if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
  }
  return {kron * h, std::fabs((kron - gauss) * h)};
}

struct Panel {
  double lo;
  double hi;
  int depth;
};

}  // namespace

double quadrature_1d(const std::function<double(double)>& f, double r0, double r1,
                     double tol, const QuadratureOptions& opts) {
  if (!(std::isfinite(r0) && std::isfinite(r1)) || r1 < r0) {
    throw std::invalid_argument("quadrature_1d: bad interval");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("quadrature_1d: tol <= 0");
  if (r1 == r0) return 0.0;

  const double length = r1 - r0;
  const PanelResult first = gauss_kronrod_15(f, r0, r1);
  const double abs_tol = tol * std::max(1.0, std::fabs(first.kronrod));

  double total = 0.0;
  double err_total = 0.0;
  int accepted = 0;
  std::vector<Panel> stack;
  stack.push_back({r0, r1, 0});
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const PanelResult res = gauss_kronrod_15(f, p.lo, p.hi);
    const double share = abs_tol * (p.hi - p.lo) / length;
    if (res.error <= share || p.depth >= opts.max_depth) {
      total += res.kronrod;
      err_total += res.error;
      if (++accepted > opts.max_panels) {
        throw QuadratureError("quadrature_1d: panel budget exhausted", total,
                              err_total);
      }
      continue;
    }
    const double mid = 0.5 * (p.lo + p.hi);
    stack.push_back({mid, p.hi, p.depth + 1});
    stack.push_back({p.lo, mid, p.depth + 1});
  }
  if (err_total > abs_tol) {
    throw QuadratureError("quadrature_1d: requested tolerance not met", total,
                          err_total);
  }
  return total;
}

}  // namespace drillfill
