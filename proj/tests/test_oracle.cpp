#include <gtest/gtest.h>

#include <random>

#include "params.hpp"
#include "tqrabi/closed_forms.hpp"
#include "tqrabi/error.hpp"
#include "tqrabi/oracle.hpp"

using namespace tqr;
using namespace tqr::testing;

TEST(Oracle, HamiltonianIsSymmetric) {
  const auto h = build_hamiltonian(fig4c(1.3), 40);
  EXPECT_EQ(h.dimension, 4 * 41);
  EXPECT_EQ((h.matrix - h.matrix.transpose()).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Oracle, ParityBlocksAreExact) {
  for (const auto& p : {fig2(), fig4b(2.0), fig4c(0.7)}) {
    const auto h = build_hamiltonian(p, 30);
    const auto parity = parity_diagonal(30);
    for (int i = 0; i < h.dimension; ++i)
      for (int j = 0; j < h.dimension; ++j)
        if (parity(i) != parity(j)) ASSERT_EQ(h.matrix(i, j), 0.0) << i << "," << j;
  }
}

TEST(Oracle, SectorIndicesPartitionBasis) {
  const auto plus = sector_indices(10, Parity::plus);
  const auto minus = sector_indices(10, Parity::minus);
  EXPECT_EQ(plus.size() + minus.size(), 44u);
  EXPECT_EQ(plus.front(), 0);  // |0,e,e>
  EXPECT_EQ(minus.front(), 1);
}

TEST(Oracle, DecoupledLimit) {
  ModelParams p;
  p.delta1 = 0.6;
  p.delta2 = 0.2;
  const auto s = diagonalize(p, 20, 12);
  ASSERT_EQ(s.records.size(), 12u);
  EXPECT_NEAR(s.records.front().energy, -0.8, 1e-14);
  for (const auto& r : s.records) {
    bool found = false;
    for (int n = 0; n < 5; ++n)
      for (double a : {-1.0, 1.0})
        for (double b : {-1.0, 1.0}) found |= std::abs(r.energy - (n + 0.6 * a + 0.2 * b)) < 1e-12;
    EXPECT_TRUE(found) << r.energy;
  }
}

TEST(Oracle, IntegerLevelsWithSingletAtDegenerateSplittings) {
  const auto p = fig3c(1.5);
  const auto levels = diagonalize(p, 300, 16).energies(Parity::plus);
  const auto odd = diagonalize(p, 300, 16).energies(Parity::minus);
  for (int n = 0; n <= 2; ++n) {
    const auto& sector = (n % 2 == 0) ? odd : levels;
    EXPECT_LT(nearest(sector, n), 1e-11) << "E=" << n;
    EXPECT_LT(residual(p, 300, closed_form::dark(p, n)), 1e-14);
  }
}

TEST(Oracle, FlatLevelsOfEqualExchange) {
  const auto p = fig4d(2.0);
  for (int t : {300, 350}) {
    const auto even = diagonalize_sector(p, t, Parity::plus, 12);
    EXPECT_LT(nearest(even, -0.5), 1e-11) << t;
    EXPECT_LT(nearest(even, 1.5), 1e-11) << t;
  }
}

TEST(Oracle, ResidualOfExactStates) {
  ModelParams p = fig3c(0.9);
  EXPECT_LT(residual(p, 50, closed_form::dark(p, 3)), 1e-14);
  ModelParams q = fig3d(0.7);
  EXPECT_LT(residual(q, 50, closed_form::psi_e(q)), 1e-13);
}

TEST(Oracle, ResidualOfRandomVectorIsLarge) {
  const auto p = fig2();
  std::mt19937 rng(7);
  std::normal_distribution<double> dist;
  std::vector<double> v(4 * 21);
  double norm = 0.0;
  for (auto& x : v) norm += (x = dist(rng)) * x;
  for (auto& x : v) x /= std::sqrt(norm);
  EXPECT_GT(residual(p, 20, v, 0.5), 0.1);
}

TEST(Oracle, ResidualRejectsSupportBeyondTruncation) {
  const auto p = fig3c(1.0);
  try {
    residual(p, 2, closed_form::dark(p, 4));
    FAIL() << "expected SupportOverflow";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::support_overflow);
  }
}

TEST(Oracle, GroundEnergyNonIncreasingInTruncation) {
  const auto p = fig3a(2.0);
  double last = INFINITY;
  for (int t : {10, 20, 40, 80, 160}) {
    const double e0 = diagonalize_sector(p, t, Parity::plus, 1).front();
    EXPECT_LE(e0, last + 1e-13) << t;
    last = e0;
  }
}

TEST(Oracle, QubitRelabelingInvariance) {
  const auto p = fig4a(1.1);
  ModelParams q = p;
  std::swap(q.g1, q.g2);
  std::swap(q.delta1, q.delta2);
  const auto a = diagonalize(p, 200, 10).records;
  const auto b = diagonalize(q, 200, 10).records;
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_NEAR(a[i].energy, b[i].energy, 1e-10);
    EXPECT_EQ(a[i].parity, b[i].parity);
  }
}

TEST(Oracle, LevelsCarryDriftAndSectorLabels) {
  const auto r = diagonalize_report(fig2(), 300, 10);
  EXPECT_EQ(r.truncation, 300);
  EXPECT_LT(r.drift, 1e-8);
  int plus = 0;
  for (const auto& rec : r.spectrum.records) {
    EXPECT_EQ(rec.method, Method::oracle);
    if (rec.parity == Parity::plus) EXPECT_EQ(rec.label.value(), plus++);
  }
}

TEST(Oracle, NotConvergedAtCap) {
  OracleOptions o;
  o.truncation_cap = 30;
  try {
    diagonalize(fig3a(2.5), 20, 6, o);
    FAIL() << "expected NotConverged";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_converged);
  }
}

TEST(Oracle, TruncationMustCoverLevels) {
  EXPECT_THROW(diagonalize(fig2(), 12, 10), Error);
}
