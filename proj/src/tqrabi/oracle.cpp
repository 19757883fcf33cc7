#include "tqrabi/oracle.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "tqrabi/csv.hpp"
#include "tqrabi/error.hpp"
#include "tqrabi/fock.hpp"

namespace tqr {

FockHamiltonian build_hamiltonian(const ModelParams& p, int truncation) {
  p.validate();
  if (truncation < 0) fail(ErrorCode::invalid_argument, "truncation must be non-negative");
  FockHamiltonian h;
  h.truncation = truncation;
  h.dimension = 4 * (truncation + 1);
  h.matrix = Eigen::MatrixXd::Zero(h.dimension, h.dimension);
  auto& M = h.matrix;
  for (int n = 0; n <= truncation; ++n) {
    const int b = 4 * n;
    for (int q = 0; q < 4; ++q) {
      M(b + q, b + q) = p.omega * n + p.delta1 * z1(q) + p.delta2 * z2(q) + p.jz * z1(q) * z2(q);
    }
    // sigma_1x sigma_2x and sigma_1y sigma_2y
    M(b + 0, b + 3) = M(b + 3, b + 0) = p.jx - p.jy;
    M(b + 1, b + 2) = M(b + 2, b + 1) = p.jx + p.jy;
    if (n < truncation) {
      const double r = std::sqrt(static_cast<double>(n + 1));
      for (int q = 0; q < 4; ++q) {
        M(b + q, b + 4 + (q ^ 2)) = M(b + 4 + (q ^ 2), b + q) = r * p.g1;
        M(b + q, b + 4 + (q ^ 1)) = M(b + 4 + (q ^ 1), b + q) = r * p.g2;
      }
    }
  }
  return h;
}

Eigen::VectorXd parity_diagonal(int truncation) {
  Eigen::VectorXd d(4 * (truncation + 1));
  for (int n = 0; n <= truncation; ++n) {
    for (int q = 0; q < 4; ++q) d(basis_index(n, q)) = parity_of(n, q);
  }
  return d;
}

std::vector<int> sector_indices(int truncation, Parity parity) {
  std::vector<int> out;
  for (int n = 0; n <= truncation; ++n) {
    for (int q = 0; q < 4; ++q) {
      if (parity_of(n, q) == sign(parity)) out.push_back(basis_index(n, q));
    }
  }
  return out;
}

Eigenpairs lowest_eigenpairs(const Eigen::MatrixXd& symmetric, int k, bool with_vectors) {
  const auto n = static_cast<lapack_int>(symmetric.rows());
  if (symmetric.cols() != symmetric.rows()) fail(ErrorCode::invalid_argument, "matrix must be square");
  k = std::min<int>(k, static_cast<int>(n));
  Eigenpairs out;
  if (k <= 0) return out;
  Eigen::MatrixXd a = symmetric;  // overwritten by LAPACK
  std::vector<double> w(static_cast<std::size_t>(n));
  Eigen::MatrixXd z;
  if (with_vectors) z.resize(n, k);
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(k));
  lapack_int found = 0;
  const lapack_int info =
      LAPACKE_dsyevr(LAPACK_COL_MAJOR, with_vectors ? 'V' : 'N', 'I', 'U', n, a.data(), n, 0.0, 0.0, 1, k, 0.0,
                     &found, w.data(), with_vectors ? z.data() : nullptr, with_vectors ? n : 1, support.data());
  if (info != 0) fail(ErrorCode::not_converged, "dsyevr failed with info=" + std::to_string(info));
  out.values.assign(w.begin(), w.begin() + found);
  if (with_vectors) out.vectors = z.leftCols(found);
  return out;
}

namespace {

Eigen::MatrixXd submatrix(const Eigen::MatrixXd& m, const std::vector<int>& idx) {
  const auto n = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd s(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) s(i, j) = m(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
  }
  return s;
}

struct Level {
  double energy;
  Parity parity;
};

// Lowest k levels, parity-labelled; sets `fallback` when classification by
// <P> was ambiguous and the sectors had to be diagonalized separately.
std::vector<Level> lowest_levels(const ModelParams& params, int truncation, int k, double threshold,
                                 bool& fallback) {
  const FockHamiltonian h = build_hamiltonian(params, truncation);
  const Eigenpairs full = lowest_eigenpairs(h.matrix, k, true);
  const Eigen::VectorXd P = parity_diagonal(truncation);
  std::vector<Level> levels;
  fallback = false;
  for (std::size_t i = 0; i < full.values.size(); ++i) {
    const auto v = full.vectors.col(static_cast<Eigen::Index>(i));
    const double p = v.dot(P.cwiseProduct(v));
    if (std::abs(p) < threshold) {
      fallback = true;
      break;
    }
    levels.push_back({full.values[i], p > 0.0 ? Parity::plus : Parity::minus});
  }
  if (!fallback) return levels;

  levels.clear();
  for (Parity parity : kBothParities) {
    const auto idx = sector_indices(truncation, parity);
    for (double e : lowest_eigenpairs(submatrix(h.matrix, idx), k, false).values) levels.push_back({e, parity});
  }
  std::stable_sort(levels.begin(), levels.end(), [](const Level& a, const Level& b) { return a.energy < b.energy; });
  if (levels.size() > static_cast<std::size_t>(k)) levels.resize(static_cast<std::size_t>(k));
  return levels;
}

}  // namespace

OracleReport diagonalize_report(const ModelParams& params, int truncation, int k_levels, const OracleOptions& options) {
  params.validate();
  if (k_levels < 1) fail(ErrorCode::invalid_argument, "k_levels must be positive");
  if (truncation < k_levels / 2 + 10) {
    fail(ErrorCode::invalid_argument, "truncation " + std::to_string(truncation) + " is below k_levels/2 + 10 = " +
                                          std::to_string(k_levels / 2 + 10));
  }
  if (options.drift_step < 1) fail(ErrorCode::invalid_argument, "drift_step must be positive");

  OracleReport report;
  bool fallback = false;
  bool unused = false;
  std::vector<Level> levels = lowest_levels(params, truncation, k_levels, options.parity_threshold, fallback);
  for (int t = truncation;; t += options.drift_step) {
    const int next_t = t + options.drift_step;
    if (next_t > options.truncation_cap) {
      fail(ErrorCode::not_converged, "levels still drift by more than " + format_number(options.drift_tolerance) +
                                         " at truncation cap " + std::to_string(options.truncation_cap));
    }
    std::vector<Level> next = lowest_levels(params, next_t, k_levels, options.parity_threshold, unused);
    double drift = 0.0;
    std::vector<double> per_level(levels.size());
    for (std::size_t i = 0; i < levels.size() && i < next.size(); ++i) {
      per_level[i] = std::abs(levels[i].energy - next[i].energy);
      drift = std::max(drift, per_level[i]);
    }
    if (drift < options.drift_tolerance) {
      report.truncation = t;
      report.drift = drift;
      report.sector_fallback = fallback;
      int plus = 0, minus = 0;
      for (std::size_t i = 0; i < levels.size(); ++i) {
        SpectrumRecord r;
        r.energy = levels[i].energy;
        r.parity = levels[i].parity;
        r.method = Method::oracle;
        r.residual = per_level[i];
        r.label = r.parity == Parity::plus ? plus++ : minus++;
        report.spectrum.records.push_back(r);
      }
      return report;
    }
    levels = std::move(next);
    fallback = unused;
  }
}

SpectrumResult diagonalize(const ModelParams& params, int truncation, int k_levels, const OracleOptions& options) {
  return diagonalize_report(params, truncation, k_levels, options).spectrum;
}

std::vector<double> diagonalize_sector(const ModelParams& params, int truncation, Parity parity, int k_levels) {
  const FockHamiltonian h = build_hamiltonian(params, truncation);
  return lowest_eigenpairs(submatrix(h.matrix, sector_indices(truncation, parity)), k_levels, false).values;
}

double residual(const ModelParams& params, int truncation, const std::vector<double>& state, double energy) {
  params.validate();
  const std::size_t dim = 4 * static_cast<std::size_t>(truncation + 1);
  if (state.size() > dim) {
    for (std::size_t i = dim; i < state.size(); ++i) {
      if (state[i] != 0.0) {
        fail(ErrorCode::support_overflow, "state has support beyond truncation " + std::to_string(truncation));
      }
    }
  }
  std::vector<double> v(state.begin(), state.begin() + static_cast<std::ptrdiff_t>(std::min(dim, state.size())));
  v.resize(dim, 0.0);
  const auto hv = apply_hamiltonian(params, truncation, v);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    const double r = hv[i] - energy * v[i];
    num += r * r;
    den += v[i] * v[i];
  }
  if (!(den > 0.0)) fail(ErrorCode::invalid_argument, "residual of the zero vector");
  return std::sqrt(num / den);
}

double residual(const ModelParams& params, int truncation, const ExceptionalState& state) {
  if (state.max_photon() > truncation) {
    fail(ErrorCode::support_overflow, "state reaches photon number " + std::to_string(state.max_photon()) +
                                          " beyond truncation " + std::to_string(truncation));
  }
  return residual(params, truncation, state.dense(truncation), state.energy);
}

}  // namespace tqr
