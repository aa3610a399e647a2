#ifndef DIGIT_DIRICHLET_POLE_CATALOG_HPP
#define DIGIT_DIRICHLET_POLE_CATALOG_HPP

#include <cstdint>
#include <vector>

#include "digit_dirichlet/integer_base_series.hpp"

#include "json.hpp"

namespace digit_dirichlet {

/// One pole of Z_b, F_b or G_b with its closed-form Laurent data.
///
/// Locations fit the half-lattice sigma0 - k + 2 pi i m / log b (sigma0 = 1
/// for Fb, 2 for Gb, 0 for Zb with k = 0 only); G_b additionally has the
/// isolated simple pole at s = 1, carried here with k = 1, m = 0.
struct PoleDescriptor {
  SeriesTag tag = SeriesTag::Zb;
  std::int64_t base = 2;
  int lattice_k = 0;
  int lattice_m = 0;
  int order = 1;  // 2 only at the top corner (k, m) = (0, 0) of Fb/Gb
  Complex location{};
  Complex residue{};          // a_{-1}
  Complex laurent_minus2{};   // a_{-2}, meaningful iff order == 2
  bool zero_residue_flag = false;  // formula residue vanished: surfaced, not dropped
};

/// All poles with |location| < radius, sorted by |location|, then m, then k.
std::vector<PoleDescriptor> enumerate_poles(SeriesTag tag, std::int64_t b,
                                            double radius);

/// Number of poles in |s| < radius (a double pole counts once).
long count_poles(SeriesTag tag, std::int64_t b, double radius);

/// Closed-form residue vs. contour extraction around the pole.
struct ResidueReport {
  PoleDescriptor pole;
  Complex formula_value{};
  Complex contour_value{};
  double abs_diff = 0.0;
  bool passed = false;
};

/// Certifies one descriptor by running the trapezoid contour rule on the
/// matching evaluator. The contour radius defaults to 0.4x the distance to
/// the nearest other pole in the catalog.
ResidueReport residue_check(const PoleDescriptor& pole, double tol);

/// Contour radius used by residue_check (exposed for the Laurent tests).
double certification_radius(const PoleDescriptor& pole);

void to_json(nlohmann::json& j, const PoleDescriptor& pole);

}  // namespace digit_dirichlet

#endif
