#include <gtest/gtest.h>

#include "params.hpp"
#include "tqrabi/error.hpp"
#include "tqrabi/model.hpp"

using namespace tqr;
using namespace tqr::testing;

namespace {

std::vector<double> energies_of(const std::vector<Baseline>& b, BaselineKind kind) {
  std::vector<double> out;
  for (const auto& x : b)
    if (x.kind == kind) out.push_back(x.energy);
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}

}  // namespace

TEST(Baselines, AsymmetricCouplings) {
  const auto b = baselines(fig2(), -0.2, 1.0);
  const auto second = energies_of(b, BaselineKind::second);
  const auto first = energies_of(b, BaselineKind::first);
  ASSERT_EQ(second.size(), 2u);
  ASSERT_EQ(first.size(), 2u);
  EXPECT_NEAR(second[0], -0.0324, 1e-15);
  EXPECT_NEAR(second[1], 0.9676, 1e-15);
  EXPECT_NEAR(first[0], -0.09, 1e-15);
  EXPECT_NEAR(first[1], 0.91, 1e-15);
  EXPECT_TRUE(std::is_sorted(b.begin(), b.end(), [](auto& x, auto& y) { return x.energy < y.energy; }));
}

TEST(Baselines, EqualCouplings) {
  const auto b = baselines(family(0.3, 0.2, 1.0, 1.0), -1.5, 0.5);
  const auto first = energies_of(b, BaselineKind::first);
  const auto second = energies_of(b, BaselineKind::second);
  ASSERT_EQ(first.size(), 2u);
  EXPECT_DOUBLE_EQ(first[0], -1.0);
  EXPECT_DOUBLE_EQ(first[1], 0.0);
  ASSERT_EQ(second.size(), 1u);
  EXPECT_DOUBLE_EQ(second[0], 0.0);
}

TEST(Baselines, ExchangeShiftsBothKinds) {
  const auto p = family(0.6, 0.2, 0.5, 4.0, 0.2);
  for (const auto& b : baselines(p, -2.0, 3.0)) {
    const double expect = b.kind == BaselineKind::first ? b.index - 0.25 + 0.2 : b.index - 0.09 - 0.2;
    EXPECT_NEAR(b.energy, expect, 1e-14);
  }
}

TEST(Baselines, RejectEmptyRange) {
  EXPECT_EQ(code_of([] { baselines(fig2(), 1.0, 1.0); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { baselines(fig2(), 2.0, 1.0); }), ErrorCode::invalid_argument);
}

TEST(Baselines, InvariantUnderQubitSwap) {
  auto p = fig4a(1.0);
  p.jy = p.jz = 0.15;
  auto q = p;
  std::swap(q.g1, q.g2);
  std::swap(q.delta1, q.delta2);
  const auto a = baselines(p, -3, 4);
  const auto b = baselines(q, -3, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_DOUBLE_EQ(a[i].energy, b[i].energy);
}

TEST(Baselines, ScaleWithOmega) {
  auto p = fig2();
  auto q = p;
  q.omega = 2.0;
  q.delta1 *= 2;
  q.delta2 *= 2;
  q.g1 *= 2;
  q.g2 *= 2;
  const auto a = baselines(p, -1, 2);
  const auto b = baselines(q, -2, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(2 * a[i].energy, b[i].energy, 1e-14);
}

TEST(UnitModel, SwapsToNonNegativeGprime) {
  ModelParams p;
  p.delta1 = 0.1;
  p.delta2 = 0.7;
  p.g1 = 0.2;
  p.g2 = 0.6;
  const auto m = to_unit_model(p);
  EXPECT_TRUE(m.swapped);
  EXPECT_DOUBLE_EQ(m.gprime, 0.4);
  EXPECT_DOUBLE_EQ(m.delta1, 0.7);
  EXPECT_DOUBLE_EQ(m.delta2, 0.1);
}

TEST(UnitModel, RescalesByOmega) {
  ModelParams p = fig2();
  p.omega = 4.0;
  const auto m = to_unit_model(p);
  EXPECT_DOUBLE_EQ(m.g, 0.075);
  EXPECT_DOUBLE_EQ(m.delta1, 0.15);
}

TEST(UnitModel, RequiresBothCouplings) {
  ModelParams p = fig2();
  p.g2 = 0.0;
  EXPECT_EQ(code_of([&] { to_unit_model(p); }), ErrorCode::requires_valid_couplings);
  p.g2 = -0.1;
  EXPECT_EQ(code_of([&] { p.validate(); }), ErrorCode::invalid_argument);
}

TEST(Config, ParsesKeysAndDefaultsExchange) {
  const auto p = parse_config("# comment\nomega = 1\ndelta1 = 0.6\ndelta2=0.2\n\ng1 = 0.24 # tail\ng2 : 0.06\n");
  EXPECT_EQ(p, fig2());
  const auto q = parse_config("omega=1\ndelta1=0.1\ndelta2=0.7\ng1=0.5\ng2=0.5\njx=0.7\njy=0.1\njz=0.3\n");
  EXPECT_DOUBLE_EQ(q.jz, 0.3);
}

TEST(Config, Errors) {
  EXPECT_EQ(code_of([] { parse_config("omega=1\ndelta1=0.6\ng1=0.1\ng2=0.1\n"); }), ErrorCode::config);
  EXPECT_EQ(code_of([] { parse_config("omega=1\ndelta1=0.6\ndelta2=0.2\ng1=0.1\ng2=0.1\nkappa=1\n"); }),
            ErrorCode::config);
  EXPECT_EQ(code_of([] { parse_config("omega=1\ndelta1=0.6\ndelta1=0.6\n"); }), ErrorCode::config);
  EXPECT_EQ(code_of([] { parse_config("omega=1\ndelta1=abc\ndelta2=0.2\ng1=0.1\ng2=0.1\n"); }), ErrorCode::config);
  EXPECT_EQ(code_of([] { parse_config("omega 1\n"); }), ErrorCode::config);
  EXPECT_EQ(code_of([] { load_config("/nonexistent/model.cfg"); }), ErrorCode::io);
}

TEST(Parity, Strings) {
  EXPECT_EQ(parse_parity("plus"), Parity::plus);
  EXPECT_EQ(parse_parity("minus"), Parity::minus);
  EXPECT_STREQ(to_string(Parity::minus), "minus");
  EXPECT_EQ(flip(Parity::plus), Parity::minus);
  EXPECT_THROW(parse_parity("sideways"), Error);
}
