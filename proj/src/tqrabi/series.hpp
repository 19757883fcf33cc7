// series.hpp: Extended-coherent-state expansions of the parity-sector
// wavefunctions around the special points alpha in {0, g', g}.
//
// In the Bargmann representation each component is
//   phi_j(z) = exp(alpha z) * sum_n c_{j,n} (z - alpha)^n,   j = 1..4,
// where phi_3(z) = phi_1(-z), phi_4(z) = phi_2(-z) and the c_{j,n} obey the
// four coupled recurrences of the XYZ model (J = 0 gives the plain model).
// Components are indexed 0..3 in code.

#pragma once

#include <array>
#include <vector>

#include "tqrabi/model.hpp"

namespace tqr {

enum class Center { origin, gprime, g };

const char* to_string(Center c) noexcept;

/// Position alpha of the expansion center (units of sqrt(omega)).
double center_position(const UnitModel& m, Center c);

/// Distance to the nearest singular point of the coupled ODEs other than the
/// center itself: R_0 = g' (g for g' = 0), R_g' = min(2g', g - g'), R_g = g - g'
/// (g for g' = 0).
double convergence_radius(const UnitModel& m, Center c);

/// Component indices whose c_{j,0} are free for this center. The remaining
/// c_{j,0} follow from the reflection symmetry (origin) or from a recurrence
/// row whose leading factor vanishes (the regular singular points).
std::vector<int> free_slots(const UnitModel& m, Center c);

struct SeriesOptions {
  int n_max{160};                 // initial truncation order
  int n_cap{512};                 // hard cap for adaptive growth
  double tail_tolerance{1e-14};   // last terms relative to the partial sums
  double pole_tolerance{1e-12};   // smallest admissible division factor
};

/// Coefficient table of one expansion. Coefficients are stored multiplied by
/// scale^n (scale = convergence radius) so that the table stays O(1) even when
/// the raw c_{j,n} grow like R^-n.
struct ExpansionBlock {
  UnitModel model;
  Parity parity{Parity::plus};
  double energy{0.0};  // units of omega
  Center kind{Center::origin};
  double center{0.0};
  double radius{0.0};
  double scale{1.0};
  int basis_tag{-1};  // free slot with unit initial value, -1 for a custom init
  std::array<double, 4> init{};
  int n_max{0};
  std::vector<std::array<double, 4>> scaled;  // scaled[n][j] = c_{j,n} * scale^n

  /// Raw coefficient c_{j,n} (may overflow for large n on small disks).
  double coeff(int j, int n) const;
};

/// Runs the recurrences from the given initial values. Entries of `init` that
/// are not free for `kind` are overwritten by their dependent values. Throws
/// pole_at_baseline when a division factor is below `pole_tolerance`.
ExpansionBlock recur(const UnitModel& m, Parity parity, double energy, Center kind,
                     const std::array<double, 4>& init, int n_max, double pole_tolerance = 1e-12);

/// Block generated by a unit value in free slot `slot` (zero in the others).
ExpansionBlock recur_basis(const UnitModel& m, Parity parity, double energy, Center kind, int slot,
                           int n_max, double pole_tolerance = 1e-12);

struct SeriesPoint {
  double z{0.0};
  std::array<double, 4> values{};
  int terms{0};
};

/// Sums the four series at z with compensated summation, doubling n_max up to
/// the cap until the tail is negligible. Throws outside_disk if
/// |z - alpha| >= R and no_convergence if the cap is hit.
SeriesPoint evaluate(const ExpansionBlock& block, double z, const SeriesOptions& options = {});

}  // namespace tqr
