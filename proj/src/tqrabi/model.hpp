// model.hpp: Model parameters, parity labels and baseline enumeration.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tqr {

/// Couplings and splittings of the two-qubit Rabi Hamiltonian with an optional
/// XYZ Heisenberg exchange,
///   H = w a^+a + (g1 s1x + g2 s2x)(a + a^+) + D1 s1z + D2 s2z + sum_i Ji s1i s2i.
/// All quantities are energies (hbar = 1).
struct ModelParams {
  double omega{1.0};
  double delta1{0.0};
  double delta2{0.0};
  double g1{0.0};
  double g2{0.0};
  double jx{0.0};
  double jy{0.0};
  double jz{0.0};

  double g() const noexcept { return g1 + g2; }
  double gprime() const noexcept { return g1 - g2; }
  bool has_exchange() const noexcept { return jx != 0.0 || jy != 0.0 || jz != 0.0; }

  /// omega > 0, couplings non-negative, everything finite.
  void validate() const;
  /// validate() plus g1 > 0 and g2 > 0, i.e. g > 0 and |g'| < g.
  void validate_for_analytic() const;

  bool operator==(const ModelParams&) const = default;
};

/// Parameters in units of omega with qubit labels ordered so that g' >= 0.
/// This is what the analytic solvers work with.
struct UnitModel {
  double delta1{0.0};
  double delta2{0.0};
  double g{0.0};
  double gprime{0.0};
  double jx{0.0};
  double jy{0.0};
  double jz{0.0};
  double omega{1.0};      // energy unit the inputs were divided by
  bool swapped{false};    // qubit labels exchanged to make g' >= 0

  bool equal_couplings() const noexcept { return gprime == 0.0; }
};

/// Relative size below which |g1 - g2| is treated as exactly zero.
inline constexpr double kEqualCouplingTolerance = 1e-12;

/// Rescales by omega and swaps (g1, D1) <-> (g2, D2) when g1 < g2. Throws
/// requires_valid_couplings when the analytic solver cannot be used.
UnitModel to_unit_model(const ModelParams& params);

/// Same rescaling without the analytic-solver checks (g = 0 allowed).
UnitModel to_unit_model_unchecked(const ModelParams& params);

/// Sector of the Z2 symmetry P = exp(i pi a^+a) s1z s2z.
enum class Parity : int { plus = 1, minus = -1 };

inline int sign(Parity p) noexcept { return static_cast<int>(p); }
inline Parity flip(Parity p) noexcept { return p == Parity::plus ? Parity::minus : Parity::plus; }
const char* to_string(Parity p) noexcept;
Parity parse_parity(std::string_view text);

inline constexpr Parity kBothParities[] = {Parity::plus, Parity::minus};

enum class BaselineKind { first, second, exchange };
const char* to_string(BaselineKind kind) noexcept;

/// Energy at which a division factor of the coefficient recurrences vanishes.
struct Baseline {
  BaselineKind kind{BaselineKind::first};
  int index{0};
  double energy{0.0};
};

/// Baselines with energy in [e_min, e_max], sorted ascending. Coincident
/// energies of the same kind (within 1e-12) are reported once.
///   first:    n w - g^2/w + Jx
///   second:   n w - g'^2/w - Jx          (omitted when g' = 0 and Jy+Jz != 0)
///   exchange: n w - Jx -/+ (Jy + Jz)     (only when g' = 0 and Jy+Jz != 0)
std::vector<Baseline> baselines(const ModelParams& params, double e_min, double e_max);

/// Same enumeration in units of omega for an already reduced model.
std::vector<Baseline> baselines(const UnitModel& model, double e_min, double e_max);

/// Parses the `key = value` config format (keys omega, delta1, delta2, g1, g2,
/// jx, jy, jz; '#' starts a comment; J keys default to 0).
ModelParams parse_config(std::string_view text);
ModelParams load_config(const std::string& path);

std::string describe(const ModelParams& params);

}  // namespace tqr
