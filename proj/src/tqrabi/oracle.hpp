// oracle.hpp: Truncated Fock-space exact diagonalization.
//
// Basis |n> (x) |s1> (x) |s2>, n = 0..truncation, photon-major, qubit pairs in
// the order ee, eg, ge, gg (index 4n + q). Parity P = (-1)^n s1z s2z.

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "tqrabi/exceptional.hpp"
#include "tqrabi/model.hpp"
#include "tqrabi/spectrum.hpp"

namespace tqr {

struct FockHamiltonian {
  int truncation{0};
  int dimension{0};
  Eigen::MatrixXd matrix;
};

FockHamiltonian build_hamiltonian(const ModelParams& params, int truncation);

/// Diagonal of P in the same basis (entries +1 / -1).
Eigen::VectorXd parity_diagonal(int truncation);

/// Basis indices of one parity sector, ascending.
std::vector<int> sector_indices(int truncation, Parity parity);

struct Eigenpairs {
  std::vector<double> values;   // ascending
  Eigen::MatrixXd vectors;      // one column per value; empty unless requested
};

/// Lowest k eigenpairs of a symmetric matrix (LAPACK dsyevr on an index range).
Eigenpairs lowest_eigenpairs(const Eigen::MatrixXd& symmetric, int k, bool with_vectors);

struct OracleOptions {
  double drift_tolerance{1e-8};
  int drift_step{50};
  int truncation_cap{1200};
  double parity_threshold{0.999};
};

struct OracleReport {
  SpectrumResult spectrum;   // residual = per-level drift, label = index within the sector
  int truncation{0};         // truncation the spectrum was taken at
  double drift{0.0};         // max level drift against truncation + drift_step
  bool sector_fallback{false};
};

/// Lowest k_levels eigenvalues with parities. The truncation is raised in
/// steps of drift_step until the levels move by less than drift_tolerance
/// when it grows by one more step; not_converged past the cap.
OracleReport diagonalize_report(const ModelParams& params, int truncation, int k_levels,
                                const OracleOptions& options = {});

SpectrumResult diagonalize(const ModelParams& params, int truncation, int k_levels, const OracleOptions& options = {});

/// Eigenvalues of one parity sector at a fixed truncation (no drift check).
std::vector<double> diagonalize_sector(const ModelParams& params, int truncation, Parity parity, int k_levels);

/// ||H psi - E psi|| / ||psi|| on photon numbers 0..truncation. Throws
/// support_overflow if the state reaches beyond the truncation.
double residual(const ModelParams& params, int truncation, const std::vector<double>& state, double energy);
double residual(const ModelParams& params, int truncation, const ExceptionalState& state);

}  // namespace tqr
