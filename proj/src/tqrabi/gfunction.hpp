// gfunction.hpp: Analyticity matching between the expansions around 0, g'
// and g. G(E) is the determinant of the matching system; its zeros between
// baselines are the regular eigenvalues of a parity sector.

#pragma once

#include <optional>
#include <vector>

#include "tqrabi/model.hpp"
#include "tqrabi/series.hpp"
#include "tqrabi/spectrum.hpp"

namespace tqr {

enum class Topology {
  full8,     // g' >= g/2: match 0<->g' at z0' and g'<->g at z0
  reduced6,  // 0 < g' < g/2: z0' = 0, the origin block reduces to phi_3(0)=phi_1(0), phi_4(0)=phi_2(0)
  reduced4,  // g' = 0: match 0<->g at z0
};

const char* to_string(Topology t) noexcept;

/// Matching points in the Bargmann variable (units of the reduced model).
struct MatchingScheme {
  Topology topology{Topology::full8};
  double z0{0.0};
  double z0prime{0.0};  // only used by full8
};

/// Topology dictated by g'. Default points: z0 balances the two disks it joins
/// ((g'+g)/2 whenever R_g' = g - g'); full8 uses z0' = g'^2/g, reduced6 z0' = 0,
/// reduced4 z0 = g/2.
MatchingScheme default_scheme(const UnitModel& m);

/// Throws scheme_mismatch if the topology does not fit g', outside_disk if a
/// matching point is not strictly inside both disks it connects.
void validate_scheme(const UnitModel& m, const MatchingScheme& scheme);

inline constexpr double kPoleMargin = 1e-6;

struct GOptions {
  SeriesOptions series{};
  double pole_margin{kPoleMargin};  // units of omega
  std::optional<MatchingScheme> scheme;  // default_scheme when empty
};

/// G(E) for the reduced model, E in units of omega. Columns of the matching
/// matrix are scaled to unit max-norm before taking the determinant, which
/// keeps the sign and the zeros but removes the pole growth.
double gvalue(const UnitModel& m, Parity parity, double energy, const MatchingScheme& scheme,
              const SeriesOptions& series = {}, double pole_margin = kPoleMargin);

/// G(E) for physical parameters, E in energy units.
double gvalue(const ModelParams& params, Parity parity, double energy, const GOptions& options = {});

struct RootOptions {
  double step{0.01};         // scan step in units of omega
  double tolerance{1e-10};   // bisection width in units of omega
  GOptions g{};
};

/// Regular eigenvalues of one sector in [e_min, e_max]: the window is split at
/// the baselines, each open interval is scanned on a uniform grid, sign changes
/// are bisected and sign-preserving dips of G are checked for close pairs.
SpectrumResult find_roots(const ModelParams& params, Parity parity, double e_min, double e_max,
                          const RootOptions& options = {});

struct GTrace {
  Parity parity{Parity::plus};
  std::vector<double> energies;  // grid points outside the pole margins
  std::vector<double> values;
  std::vector<Baseline> poles;   // baselines inside the window
};

/// G on the grid e_min + k*step (energy units), skipping points within the
/// pole margin of a baseline.
GTrace trace(const ModelParams& params, Parity parity, double e_min, double e_max, double step,
             const GOptions& options = {});

}  // namespace tqr
