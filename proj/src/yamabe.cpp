#include "drillfill/yamabe.hpp"

#include <cmath>
#include <stdexcept>

#include "drillfill/quadrature.hpp"

namespace drillfill {

namespace {

// S(r) * a * b extended by 0 where the volume element vanishes.
double scalar_times_element(const WarpedMetric& g, double r) {
  const ProfileValue a = g.a()(r);
  const ProfileValue b = g.b()(r);
  const double ab = a.value * b.value;
  if (ab == 0.0) return 0.0;
  const double sum = a.d2 / a.value + b.d2 / b.value + (a.d1 * b.d1) / ab;
  return -2.0 * sum * ab;
}

double abs_scalar_pow32_times_element(const WarpedMetric& g, double r) {
  const ProfileValue a = g.a()(r);
  const ProfileValue b = g.b()(r);
  const double ab = a.value * b.value;
  if (ab == 0.0) return 0.0;
  const double sum = a.d2 / a.value + b.d2 / b.value + (a.d1 * b.d1) / ab;
  return std::pow(std::fabs(2.0 * sum), 1.5) * ab;
}

}  // namespace

EinsteinHilbertValue einstein_hilbert(const WarpedMetric& g, double tol) {
  EinsteinHilbertValue out;
  out.total_scalar = total_scalar_integral(g, tol);
  out.vol = volume(g, tol);
  if (!(out.vol > 0.0)) {
    throw std::domain_error("einstein_hilbert: degenerate region (volume 0)");
  }
  out.E = out.total_scalar / std::cbrt(out.vol);
  return out;
}

double conformal_scalar(const WarpedMetric& g, const ConformalFactor& u, double r) {
  if (!(r > g.r0() && r < g.r1())) {
    throw std::domain_error("conformal_scalar: r outside open interval");
  }
  const ProfileValue uv = u.u(r);
  if (!(uv.value > 0.0)) {
    throw std::invalid_argument("conformal_scalar: conformal factor not positive");
  }
  const ProfileValue a = g.a()(r);
  const ProfileValue b = g.b()(r);
  if (a.value == 0.0 || b.value == 0.0) {
    throw std::domain_error("conformal_scalar: singular axis");
  }
  const double S =
      -2.0 * (a.d2 / a.value + b.d2 / b.value + (a.d1 * b.d1) / (a.value * b.value));
  const double lap = uv.d2 + (a.d1 / a.value + b.d1 / b.value) * uv.d1;
  return std::pow(uv.value, -5.0) * (-8.0 * lap + S * uv.value);
}

HolderCheck holder_lower_bound_check(const WarpedMetric& g, const ConformalFactor& u,
                                     double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("holder_lower_bound_check: tol <= 0");
  const double period = g.theta_period() * g.y_extent();
  const SmoothProfile& uu = u.u;
  const double lhs =
      period * quadrature_1d(
                   [&](double r) {
                     const double uv = uu.value(r);
                     return scalar_times_element(g, r) * uv * uv;
                   },
                   g.r0(), g.r1(), tol);
  const double s32 =
      period * quadrature_1d(
                   [&](double r) { return abs_scalar_pow32_times_element(g, r); },
                   g.r0(), g.r1(), tol);
  const double u6 =
      period * quadrature_1d(
                   [&](double r) {
                     const double uv = uu.value(r);
                     const double u2 = uv * uv;
                     return u2 * u2 * u2 * g.a().value(r) * g.b().value(r);
                   },
                   g.r0(), g.r1(), tol);
  HolderCheck out;
  out.lhs = lhs;
  out.rhs_floor = -std::pow(s32, 2.0 / 3.0) * std::cbrt(u6);
  out.slack = out.lhs - out.rhs_floor;
  out.scale = std::fabs(out.rhs_floor);
  return out;
}

YamabeQuotientValue yamabe_quotient(const WarpedMetric& g, const ConformalFactor& u,
                                    double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("yamabe_quotient: tol <= 0");
  const double period = g.theta_period() * g.y_extent();
  const SmoothProfile& uu = u.u;
  const double grad =
      period * quadrature_1d(
                   [&](double r) {
                     const ProfileValue uv = uu(r);
                     return 8.0 * uv.d1 * uv.d1 * g.a().value(r) * g.b().value(r);
                   },
                   g.r0(), g.r1(), tol);
  const double su2 =
      period * quadrature_1d(
                   [&](double r) {
                     const double uv = uu.value(r);
                     return scalar_times_element(g, r) * uv * uv;
                   },
                   g.r0(), g.r1(), tol);
  const double u6 =
      period * quadrature_1d(
                   [&](double r) {
                     const double uv = uu.value(r);
                     const double u2 = uv * uv;
                     return u2 * u2 * u2 * g.a().value(r) * g.b().value(r);
                   },
                   g.r0(), g.r1(), tol);
  const double s32 =
      period * quadrature_1d(
                   [&](double r) { return abs_scalar_pow32_times_element(g, r); },
                   g.r0(), g.r1(), tol);
  YamabeQuotientValue out;
  out.gradient_energy = grad;
  out.numerator = grad + su2;
  out.u6_integral = u6;
  out.quotient = out.numerator / std::cbrt(u6);
  out.holder_floor = -std::pow(s32, 2.0 / 3.0);
  out.slack = out.quotient - out.holder_floor;
  return out;
}

double sigma_hyperbolic(double vol) {
  if (!(vol > 0.0)) throw std::invalid_argument("sigma_hyperbolic: vol <= 0");
  return -6.0 * std::pow(vol, 2.0 / 3.0);
}

std::vector<ConformalFactor> conformal_test_corpus(double r_lo, double r_hi,
                                                   int count, std::uint64_t seed) {
  if (!(r_lo < r_hi)) throw std::invalid_argument("conformal_test_corpus: bad domain");
  if (count <= 0) throw std::invalid_argument("conformal_test_corpus: count <= 0");

  // splitmix64: fixed bit-level generator so the corpus is identical across
  // platforms and standard-library implementations.
  std::uint64_t state = seed;
  const auto next_unit = [&state]() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return static_cast<double>(z >> 11) * 0x1.0p-53;
  };

  std::vector<ConformalFactor> out;
  out.reserve(count);
  const double width = r_hi - r_lo;
  for (int i = 0; i < count; ++i) {
    double c[4];
    for (double& ck : c) ck = 0.3 * next_unit();
    SmoothProfile u(r_lo, r_hi, [r_lo, width, c0 = c[0], c1 = c[1], c2 = c[2],
                                 c3 = c[3]](double r) {
      const double t = (r - r_lo) / width;
      const double v = 1.0 + t * (c0 + t * (c1 + t * (c2 + t * c3)));
      const double dt = c0 + t * (2.0 * c1 + t * (3.0 * c2 + t * 4.0 * c3));
      const double dtt = 2.0 * c1 + t * (6.0 * c2 + t * 12.0 * c3);
      return ProfileValue{v, dt / width, dtt / (width * width)};
    });
    out.push_back(ConformalFactor{std::move(u)});
  }
  return out;
}

}  // namespace drillfill
