#pragma once

#include <string>
#include <utility>
#include <vector>

namespace drillfill {

enum class Provenance { PaperAsserted, DerivedByOracle, UserSupplied };

const char* provenance_label(Provenance p);

struct NamedConstant {
  std::string name;
  double value = 0.0;
  Provenance provenance = Provenance::UserSupplied;
};

struct ValidityFlag {
  std::string condition;
  bool ok = false;
  std::string note;
};

// Assembled theorem-level bound: inputs, every constant with its origin, the
// bound itself, and the hypothesis checks that gate it.
struct BoundReport {
  std::string kind;  // "drill" | "fill" | "fill-theorem" | "shortest-geodesic"
  std::vector<std::pair<std::string, double>> inputs;
  std::vector<NamedConstant> constants;
  double bound_value = 0.0;
  // drill: bound_value - vol_M (volume may grow by at most this);
  // fill: vol_M - bound_value (volume must drop by at least this).
  double volume_change = 0.0;
  // drill only: vol_M + C * ell / R with C frozen at the geometry suprema.
  double simplified_bound = 0.0;
  double simplified_constant = 0.0;
  std::vector<ValidityFlag> flags;

  bool hypotheses_ok() const {
    for (const auto& f : flags) {
      if (!f.ok) return false;
    }
    return true;
  }
};

// The two increasing radius factors of the drill bound on (0, 1]:
//   shell_curvature_factor(R) = sinh(R) cosh(R) (e^{2R} - 1) / R^2
//   tube_area_factor(R)       = sinh(R) cosh(R) / R
double shell_curvature_factor(double R);
double tube_area_factor(double R);

struct GeometryConstants {
  double c1_geom = 0.0;  // sup of shell_curvature_factor, ~11.586
  double c2_geom = 0.0;  // sup of tube_area_factor, ~1.8134
  bool monotone_ok = false;  // both factors non-decreasing on the sample grid
};

// Suprema over (0, 1] by dense sampling with refinement near the right
// endpoint. Monotonicity is verified on the grid, not assumed.
GeometryConstants drill_geometry_constants();

// vol(M - gamma) <= vol(M) + pi (ell/R) [ (2c)^{3/2}/6^{3/2} *
// shell_curvature_factor(R) + tube_area_factor(R) ], evaluated verbatim,
// plus the simplified linear form vol(M) + C ell / R with the factors frozen
// at their suprema. Requires R in (0, 1) (HypothesisError otherwise).
BoundReport drill_volume_bound(double vol_M, double ell, double R, double c_hat,
                               Provenance c_hat_origin = Provenance::UserSupplied);

// Shortest-geodesic corollary: ell = 2 inj, tube radius at least ell/4 but
// never below the user-supplied floor, clamped below 1 (a smaller tube sits
// inside a bigger one, so the bound stays valid).
BoundReport shortest_geodesic_bound(double vol_M, double inj, double R_floor,
                                    double c_hat,
                                    Provenance c_hat_origin = Provenance::UserSupplied);

// vol(M_mu) <= vol(M) - (A/2)(pi^2/ell^2 - c pi^4/ell^4 + c pi^6/ell^6).
// Requires ell > 2*pi.
BoundReport fill_volume_bound(double vol_M, double A, double ell, double c_hat,
                              Provenance c_hat_origin = Provenance::UserSupplied);

// Weaker always-valid form: deficit (A/2)(pi^2/ell^2)(1 - c pi^2/ell^2),
// requires ell > sqrt(c) pi. Also records that the sharper form dominates it
// (their difference is (A/2) c pi^6/ell^6 >= 0).
BoundReport fill_bound_theorem_form(double vol_M, double A, double ell, double c,
                                    Provenance c_origin = Provenance::UserSupplied);

}  // namespace drillfill
