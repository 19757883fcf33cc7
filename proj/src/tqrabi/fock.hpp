// fock.hpp: The product basis |n> (x) |s1> (x) |s2> and the action of H on it.

#pragma once

#include <string_view>
#include <vector>

#include "tqrabi/model.hpp"

namespace tqr {

/// Qubit pair, first letter qubit 1; e is the sigma_z = +1 state.
enum class QubitPair : int { ee = 0, eg = 1, ge = 2, gg = 3 };

const char* to_string(QubitPair q) noexcept;
QubitPair parse_qubit_pair(std::string_view text);

/// Index of |n, q> in the photon-major ordering.
inline int basis_index(int n, QubitPair q) noexcept { return 4 * n + static_cast<int>(q); }
inline int basis_index(int n, int q) noexcept { return 4 * n + q; }

/// sigma_z eigenvalue (+1 / -1) of qubit 1 or 2 in pair q.
inline int z1(int q) noexcept { return (q & 2) ? -1 : 1; }
inline int z2(int q) noexcept { return (q & 1) ? -1 : 1; }

/// Eigenvalue of P = (-1)^n s1z s2z on |n, q>.
inline int parity_of(int n, int q) noexcept { return ((n & 1) ? -1 : 1) * z1(q) * z2(q); }

struct Amplitude {
  int n{0};
  QubitPair pair{QubitPair::ee};
  double value{0.0};
};

/// Dense vector over photon numbers 0..truncation from a sparse amplitude list.
std::vector<double> to_dense(const std::vector<Amplitude>& amps, int truncation);

/// H|v> for a vector over photon numbers 0..truncation; the result lives on the
/// same truncated space (amplitudes pushed beyond it are dropped).
std::vector<double> apply_hamiltonian(const ModelParams& params, int truncation, const std::vector<double>& v);

/// (sum_i J_i s1i s2i)|v>, photon number untouched.
std::vector<double> apply_exchange(const ModelParams& params, const std::vector<double>& v);

}  // namespace tqr
