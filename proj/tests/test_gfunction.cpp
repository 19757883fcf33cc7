#include <gtest/gtest.h>

#include "params.hpp"
#include "tqrabi/error.hpp"
#include "tqrabi/gfunction.hpp"
#include "tqrabi/oracle.hpp"
#include "tqrabi/sweep.hpp"

using namespace tqr;
using namespace tqr::testing;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}

// Sign changes between neighbouring grid points with no baseline in between.
int sign_changes(const GTrace& t) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < t.values.size(); ++i) {
    bool pole = false;
    for (const auto& b : t.poles) pole |= b.energy > t.energies[i] && b.energy < t.energies[i + 1];
    if (!pole && (t.values[i] > 0) != (t.values[i + 1] > 0)) ++count;
  }
  return count;
}

std::vector<double> in_window(std::vector<double> v, double lo, double hi) {
  std::erase_if(v, [&](double e) { return e < lo || e > hi; });
  return v;
}

}  // namespace

TEST(Scheme, TopologyByCouplingRatio) {
  EXPECT_EQ(default_scheme(to_unit_model(fig2())).topology, Topology::full8);
  EXPECT_EQ(default_scheme(to_unit_model(fig3b(1.0))).topology, Topology::reduced6);
  EXPECT_EQ(default_scheme(to_unit_model(fig3c(1.0))).topology, Topology::reduced4);
  // g1 = 3 g2 puts g' exactly at g/2.
  EXPECT_EQ(default_scheme(to_unit_model(family(0.6, 0.2, 1.0, 3.0))).topology, Topology::full8);
}

TEST(Scheme, DefaultMatchingPoints) {
  const auto s = default_scheme(to_unit_model(fig2()));
  EXPECT_NEAR(s.z0prime, 0.18 * 0.18 / 0.3, 1e-15);
  EXPECT_GT(s.z0, 0.18);
  EXPECT_LT(s.z0, 0.3);
  EXPECT_DOUBLE_EQ(default_scheme(to_unit_model(fig3c(1.4))).z0, 0.7);
}

TEST(Scheme, MismatchIsRejected) {
  const auto m = to_unit_model(fig3b(1.0));
  MatchingScheme s = default_scheme(m);
  s.topology = Topology::full8;
  EXPECT_EQ(code_of([&] { validate_scheme(m, s); }), ErrorCode::scheme_mismatch);
  MatchingScheme far = default_scheme(m);
  far.z0 = 5.0;
  EXPECT_NE(code_of([&] { validate_scheme(m, far); }), ErrorCode{});
}

TEST(GFunction, SignChangesMatchOracleCountsFig2) {
  const auto p = fig2();
  for (Parity par : kBothParities) {
    const auto t = trace(p, par, -1.0, 2.5, 0.001);
    const auto ed = in_window(diagonalize_sector(p, 300, par, 20), -1.0, 2.5);
    EXPECT_EQ(sign_changes(t), static_cast<int>(ed.size())) << to_string(par);
    for (double e : t.energies)
      for (const auto& b : t.poles) EXPECT_GE(std::abs(e - b.energy), kPoleMargin);
  }
}

TEST(GFunction, RootsMatchOracleFig2) {
  const auto p = fig2();
  for (Parity par : kBothParities) {
    const auto roots = find_roots(p, par, -1.0, 2.5).energies(par);
    const auto ed = in_window(diagonalize_sector(p, 300, par, 20), -1.0, 2.5);
    ASSERT_EQ(roots.size(), ed.size());
    for (std::size_t i = 0; i < ed.size(); ++i) EXPECT_NEAR(roots[i], ed[i], 1e-6);
  }
}

TEST(GFunction, RootsMatchOracleFig3b) {
  const auto p = fig3b(0.5);
  for (Parity par : kBothParities) {
    const auto roots = find_roots(p, par, -2.0, 2.0).energies(par);
    const auto ed = in_window(diagonalize_sector(p, 300, par, 20), -2.0, 2.0);
    ASSERT_EQ(roots.size(), ed.size()) << to_string(par);
    for (std::size_t i = 0; i < ed.size(); ++i) EXPECT_NEAR(roots[i], ed[i], 1e-6);
  }
}

TEST(GFunction, DecoupledLimit) {
  const auto p = family(0.6, 0.2, 1e-3, 4.0);
  auto plus = find_roots(p, Parity::plus, -1.0, 1.0);
  plus.append(find_roots(p, Parity::minus, -1.0, 1.0));
  plus.sort();
  const std::vector<double> expect{-0.8, -0.4, 0.2, 0.4, 0.6, 0.8};
  ASSERT_GE(plus.records.size(), expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) EXPECT_NEAR(plus.records[i].energy, expect[i], 1e-5);
}

TEST(GFunction, ZeroSetIndependentOfMatchingPoints) {
  for (const auto& p : {fig2(), fig3b(0.9), fig3d(1.1), fig4a(0.8)}) {
    const auto m = to_unit_model(p);
    MatchingScheme alt = default_scheme(m);
    if (alt.topology == Topology::full8) {
      alt.z0 = m.gprime + 0.3 * (m.g - m.gprime);
      alt.z0prime = 0.6 * m.gprime;
    } else if (alt.topology == Topology::reduced6) {
      alt.z0 = m.g - 0.75 * (m.g - m.gprime);
    } else {
      alt.z0 = 0.35 * m.g;
    }
    GOptions opts;
    RootOptions a, b;
    b.g.scheme = alt;
    for (Parity par : kBothParities) {
      const auto x = find_roots(p, par, -2.0, 1.5, a).energies(par);
      const auto y = find_roots(p, par, -2.0, 1.5, b).energies(par);
      ASSERT_EQ(x.size(), y.size());
      for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(x[i], y[i], 1e-9);
    }
  }
}

TEST(GFunction, PoleAtBaseline) {
  const auto p = fig3c(1.0);
  EXPECT_EQ(code_of([&] { gvalue(p, Parity::plus, 1.0); }), ErrorCode::pole_at_baseline);
  EXPECT_EQ(code_of([&] { gvalue(p, Parity::minus, 2.0 - 1.0 + 1e-8); }), ErrorCode::pole_at_baseline);
}

TEST(GFunction, IntervalWithOnlyBaselines) {
  const auto p = fig2();
  for (Parity par : kBothParities) EXPECT_TRUE(find_roots(p, par, -0.1, -0.02).records.empty());
}

TEST(GFunction, ConstantSignBetweenAdjacentRoots) {
  const auto t = trace(fig2(), Parity::plus, 0.45, 0.85, 0.005);
  ASSERT_TRUE(t.poles.empty());
  for (double v : t.values) EXPECT_EQ(v > 0, t.values.front() > 0);
}

TEST(GFunction, TraceRejectsBadStep) {
  EXPECT_EQ(code_of([] { trace(fig2(), Parity::plus, 0, 1, 0.0); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { trace(fig2(), Parity::plus, 0, 1, -0.1); }), ErrorCode::invalid_argument);
}

TEST(GFunction, RequiresBothCouplings) {
  auto p = fig2();
  p.g1 = 0.0;
  EXPECT_EQ(code_of([&] { find_roots(p, Parity::plus, 0, 1); }), ErrorCode::requires_valid_couplings);
}

TEST(GFunction, RecordsSortedAndTagged) {
  const auto r = find_roots(fig4a(1.0), Parity::minus, -2.0, 2.0);
  ASSERT_FALSE(r.records.empty());
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    EXPECT_EQ(r.records[i].method, Method::gfunction);
    EXPECT_EQ(r.records[i].parity, Parity::minus);
    if (i) EXPECT_LT(r.records[i - 1].energy, r.records[i].energy);
  }
}

// First six levels of each parity for every figure family at two couplings;
// at g1 = g2 the analytic set includes the exceptional levels.
class FamilyGrid : public ::testing::TestWithParam<std::tuple<int, double>> {};

TEST_P(FamilyGrid, FirstSixLevelsMatchOracle) {
  const auto [which, g] = GetParam();
  using Maker = ModelParams (*)(double);
  const Maker makers[] = {fig3a, fig3b, fig3c, fig3d, fig4a, fig4b, fig4c, fig4d};
  const auto p = makers[which](g);
  for (Parity par : kBothParities) {
    auto ed = diagonalize_sector(p, 300, par, 7);
    const double hi = 0.5 * (ed[5] + ed[6]);
    ed.pop_back();
    const auto found = analytic_spectrum(p, ed.front() - 0.05, hi).energies(par);
    ASSERT_EQ(found.size(), ed.size()) << to_string(par);
    for (std::size_t i = 0; i < ed.size(); ++i) EXPECT_NEAR(found[i], ed[i], 1e-6);
  }
}

INSTANTIATE_TEST_SUITE_P(Figures, FamilyGrid,
                         ::testing::Combine(::testing::Range(0, 8), ::testing::Values(0.5, 1.7)));
