#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "drillfill/profile.hpp"
#include "drillfill/warped.hpp"

namespace drillfill {

// A positive radial conformal factor u; the conformally-changed metric is
// u^4 g with volume element u^6 dvol_g.
struct ConformalFactor {
  SmoothProfile u;
};

struct EinsteinHilbertValue {
  double total_scalar = 0.0;  // int S dvol
  double vol = 0.0;
  double E = 0.0;             // total_scalar / vol^{1/3}
};

// Total scalar curvature, volume, and their normalized quotient for a
// warped region. Throws std::domain_error if the region volume is zero.
EinsteinHilbertValue einstein_hilbert(const WarpedMetric& g, double tol);

// Scalar curvature of u^4 g at radius r:
//   S' = u^{-5} (-8 Lap_g u + S_g u),
// with the radial Laplacian Lap_g u = u'' + (a'/a + b'/b) u'. Requires
// u(r) > 0 (std::invalid_argument) and r interior (std::domain_error).
double conformal_scalar(const WarpedMetric& g, const ConformalFactor& u, double r);

// Two-sided data for int S u^2 dvol >= -(int |S|^{3/2})^{2/3} (int u^6)^{1/3}.
struct HolderCheck {
  double lhs = 0.0;        // int S u^2 dvol
  double rhs_floor = 0.0;  // the negative product of norms
  double slack = 0.0;      // lhs - rhs_floor, >= 0 up to quadrature error
  double scale = 0.0;      // |rhs_floor|, for relative comparisons

  bool ok(double tol) const { return slack >= -tol * (scale > 1.0 ? scale : 1.0); }
};

HolderCheck holder_lower_bound_check(const WarpedMetric& g, const ConformalFactor& u,
                                     double tol);

struct YamabeQuotientValue {
  double quotient = 0.0;         // int(8 u'^2 + S u^2) dvol / (int u^6 dvol)^{1/3}
  double numerator = 0.0;
  double gradient_energy = 0.0;  // int 8 u'^2 dvol, non-negative
  double u6_integral = 0.0;
  double holder_floor = 0.0;     // -(int |S|^{3/2} dvol)^{2/3}
  double slack = 0.0;            // quotient - holder_floor

  bool ok(double tol) const {
    return slack >= -tol * (std::abs(holder_floor) > 1.0 ? std::abs(holder_floor) : 1.0);
  }
};

// The conformal test quotient for a radial u (|grad u|^2 = u'^2). Both
// inequalities asserted here are pointwise/Hoelder-based and need no
// integration by parts, so they are valid on regions with boundary.
YamabeQuotientValue yamabe_quotient(const WarpedMetric& g, const ConformalFactor& u,
                                    double tol);

// sigma(M) = -6 vol^{2/3} for a closed hyperbolic 3-manifold of volume vol,
// consumed as an external fact. Throws std::invalid_argument if vol <= 0.
double sigma_hyperbolic(double vol);

// Deterministic corpus of positive radial factors 1 + sum_k c_k t^k,
// k <= 4, c_k in [0, 0.3], t the domain coordinate normalized to [0, 1]
// (normalization keeps the factors positive on domains with negative r).
std::vector<ConformalFactor> conformal_test_corpus(double r_lo, double r_hi,
                                                   int count, std::uint64_t seed);

}  // namespace drillfill
