// exceptional.hpp: Finite-photon eigenstates sitting on the baselines of the
// equal-coupling model (g1 = g2), with or without the XYZ exchange.
//
// For g' = 0 the expansion around z = 0 can terminate at order N. This pins
//   E = N - Jx + s (-1)^N (Jy + Jz)      (s = parity sign, units of omega)
// and leaves one condition: the downward recurrence for c_{1,n}, started from
// c_{1,N} = 0, c_{2,N} = 1, must land on c_{1,-1} = 0.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tqrabi/fock.hpp"
#include "tqrabi/model.hpp"

namespace tqr {

inline constexpr double kConditionTolerance = 1e-10;

struct ExceptionalCandidate {
  int n_index{0};
  Parity parity{Parity::plus};
  double energy{0.0};
  double condition_value{0.0};
  bool g_independent{false};
};

struct ExceptionalState {
  int n_index{0};
  double energy{0.0};
  Parity parity{Parity::plus};
  double condition_value{0.0};
  std::vector<Amplitude> coeffs;  // unit 2-norm, zero amplitudes omitted
  // 2-norm of the same state rescaled so its largest photon-number-N amplitude is 1.
  double norm_constant{1.0};

  int max_photon() const;
  /// Dense vector over photon numbers 0..truncation.
  std::vector<double> dense(int truncation) const;
};

/// Baseline energy of the candidate (energy units).
double exceptional_energy(const ModelParams& params, Parity parity, int n_index);

/// c_{1,-1} for the terminating recurrence, with c_{2,N} = 1. Throws
/// requires_equal_couplings for g1 != g2 and degenerate_denominator when a
/// division factor of the downward recurrence vanishes.
double condition(const ModelParams& params, Parity parity, int n_index);

/// Condition at the given g and at two further couplings (same ratio).
ExceptionalCandidate make_candidate(const ModelParams& params, Parity parity, int n_index);

/// The finite-support eigenstate. Throws condition_not_met if
/// |condition| >= kConditionTolerance.
ExceptionalState build_state(const ModelParams& params, Parity parity, int n_index);

/// Max |<n,q|(H - E)|psi>| over photon numbers 0..N+1, i.e. how far the
/// support of the state is from being closed under H.
double fock_subspace_check(const ModelParams& params, const ExceptionalState& state);

/// Exceptional eigenvalues of the equal-coupling model in [e_min, e_max].
std::vector<ExceptionalCandidate> exceptional_in_window(const ModelParams& params, double e_min, double e_max);

enum class ScanAxis { delta1, delta2, jx, jy, jz };
const char* to_string(ScanAxis axis) noexcept;
ScanAxis parse_scan_axis(std::string_view text);

struct ScanSpec {
  ScanAxis axis{ScanAxis::delta2};
  double start{0.0};
  double stop{1.0};
  int points{201};           // grid points along the axis, endpoints included
  int n_max{3};              // candidates N = 0..n_max
  double g_first{0.0};       // 0: use the g of the template
  double g_second{0.0};      // 0: 1.7 g + 0.3
};

struct FlatLine {
  ScanAxis axis{ScanAxis::delta2};
  double value{0.0};         // root along the axis
  ModelParams params;        // template with the axis set to the root
  ExceptionalCandidate candidate;
  std::string label;         // known manifold, or "<axis>=<value>"
};

/// Roots of the condition along one axis, bracketed on the grid and bisected,
/// at two couplings. A root shared by both couplings is g-independent.
std::vector<FlatLine> scan_flat_lines(const ModelParams& templ, const ScanSpec& spec);

/// Name of the known manifold the parameters sit on, if any.
std::optional<std::string> manifold_label(const ModelParams& params, Parity parity, int n_index);

}  // namespace tqr
