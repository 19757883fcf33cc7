#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "params.hpp"
#include "tqrabi/error.hpp"
#include "tqrabi/gfunction.hpp"
#include "tqrabi/series.hpp"

using namespace tqr;
using namespace tqr::testing;

TEST(Series, Radii) {
  const auto m = to_unit_model(fig2());  // g = 0.3, g' = 0.18
  EXPECT_DOUBLE_EQ(convergence_radius(m, Center::origin), 0.18);
  EXPECT_NEAR(convergence_radius(m, Center::gprime), 0.12, 1e-15);
  EXPECT_NEAR(convergence_radius(m, Center::g), 0.12, 1e-15);
  const auto s = to_unit_model(fig3b(0.9));  // g' = 0.3
  EXPECT_NEAR(convergence_radius(s, Center::gprime), 0.6, 1e-15);
  const auto e = to_unit_model(fig3c(1.0));
  EXPECT_DOUBLE_EQ(convergence_radius(e, Center::g), 1.0);
}

TEST(Series, FreeSlots) {
  const auto m = to_unit_model(fig2());
  EXPECT_EQ(free_slots(m, Center::origin), (std::vector<int>{0, 1}));
  EXPECT_EQ(free_slots(m, Center::gprime), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(free_slots(m, Center::g), (std::vector<int>{0, 1, 3}));
  EXPECT_EQ(free_slots(to_unit_model(fig3c(1.0)), Center::origin), (std::vector<int>{0}));
}

TEST(Series, FirstStepAtOrigin) {
  const auto m = to_unit_model(fig2());
  const auto b = recur_basis(m, Parity::plus, 0.5, Center::origin, 0, 4);
  const double c40 = b.coeff(3, 0);
  EXPECT_NEAR(b.coeff(0, 1), (0.5 * b.coeff(0, 0) - 0.6 * c40 - 0.2 * b.coeff(1, 0)) / 0.3, 1e-13);
}

TEST(Series, ExplicitZeroExchangeMatchesBitwise) {
  const auto a = to_unit_model(parse_config("omega=1\ndelta1=0.6\ndelta2=0.2\ng1=0.24\ng2=0.06\n"));
  const auto b = to_unit_model(parse_config("omega=1\ndelta1=0.6\ndelta2=0.2\ng1=0.24\ng2=0.06\njx=0\njy=0\njz=0\n"));
  for (Center c : {Center::origin, Center::gprime, Center::g}) {
    const auto x = recur_basis(a, Parity::minus, 0.37, c, 0, 60);
    const auto y = recur_basis(b, Parity::minus, 0.37, c, 0, 60);
    EXPECT_EQ(x.scaled, y.scaled);
  }
}

TEST(Series, AlternatingSymmetryAtEqualCouplings) {
  for (const auto& p : {fig3d(1.3), fig4b(0.8)}) {
    const auto m = to_unit_model(p);
    for (Parity par : kBothParities) {
      const auto b = recur_basis(m, par, 0.4321, Center::origin, 0, 80);
      for (int n = 0; n <= 80; ++n) {
        const double sgn = (n % 2) ? -1.0 : 1.0;
        const double tol = 1e-13 * std::max(std::abs(b.coeff(0, n)), std::abs(b.coeff(1, n)));
        EXPECT_NEAR(b.coeff(0, n), sgn * b.coeff(2, n), tol) << n;
        EXPECT_NEAR(b.coeff(1, n), sgn * b.coeff(3, n), tol) << n;
      }
    }
  }
}

TEST(Series, LinearInInitialValues) {
  const auto m = to_unit_model(fig4a(1.2));
  const std::array<double, 4> a{1.0, 0.0, 0.3, 0.0};
  const std::array<double, 4> b{0.0, 1.0, -0.7, 0.0};
  const std::array<double, 4> ab{1.0, 1.0, -0.4, 0.0};
  const auto x = recur(m, Parity::plus, 0.3, Center::gprime, a, 50);
  const auto y = recur(m, Parity::plus, 0.3, Center::gprime, b, 50);
  const auto z = recur(m, Parity::plus, 0.3, Center::gprime, ab, 50);
  for (int n = 0; n <= 50; ++n)
    for (int j = 0; j < 4; ++j) {
      const double s = x.scaled[n][j] + y.scaled[n][j];
      EXPECT_NEAR(z.scaled[n][j], s, 1e-12 * std::max(1.0, std::abs(s)));
    }
}

TEST(Series, TailDecaysInsideDisk) {
  const auto m = to_unit_model(fig3a(1.5));
  const auto b = recur_basis(m, Parity::plus, 0.77, Center::g, 0, 400);
  double tail = 0.0;
  for (int n = 380; n <= 400; ++n)
    for (int j = 0; j < 4; ++j) tail = std::max(tail, std::abs(b.scaled[n][j]) * std::pow(0.9, n));
  EXPECT_LT(tail, 1e-14);
}

TEST(Series, EvaluateAtCenter) {
  const auto m = to_unit_model(fig2());
  const auto b = recur_basis(m, Parity::plus, 0.5, Center::g, 1, 40);
  const auto v = evaluate(b, b.center);
  for (int j = 0; j < 4; ++j) EXPECT_DOUBLE_EQ(v.values[j], b.coeff(j, 0) * std::exp(b.center * b.center));
}

TEST(Series, EvaluateOutsideDisk) {
  const auto m = to_unit_model(fig2());
  const auto b = recur_basis(m, Parity::plus, 0.5, Center::g, 0, 40);
  try {
    evaluate(b, b.center - b.radius);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::outside_disk);
  }
}

TEST(Series, PoleAtBaseline) {
  const auto m = to_unit_model(fig2());
  try {
    recur_basis(m, Parity::plus, 1.0 - 0.09, Center::g, 0, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::pole_at_baseline);
  }
}

// At an eigenvalue the blocks around g' and g describe the same solution.
TEST(Series, BlocksAgreeAtMatchingPointOnEigenvalue) {
  const auto p = fig2();
  const auto m = to_unit_model(p);
  const auto roots = find_roots(p, Parity::plus, -1.0, 2.5);
  ASSERT_GE(roots.records.size(), 2u);
  const double e = roots.records[1].energy;
  const auto scheme = default_scheme(m);
  ASSERT_EQ(scheme.topology, Topology::full8);

  // Columns: origin (2), g' (3), g (3). Rows: phi - psi at z0, Phi - phi at z0'.
  std::vector<ExpansionBlock> cols;
  for (Center c : {Center::origin, Center::gprime, Center::g})
    for (int s : free_slots(m, c)) cols.push_back(recur_basis(m, Parity::plus, e, c, s, 160));
  ASSERT_EQ(cols.size(), 8u);
  std::vector<std::array<double, 4>> at_z0(8), at_z0p(8);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(8, 8);
  Eigen::VectorXd colscale(8);
  for (int c = 0; c < 8; ++c) {
    if (c >= 2) at_z0[c] = evaluate(cols[c], scheme.z0).values;
    if (c < 5) at_z0p[c] = evaluate(cols[c], scheme.z0prime).values;
    for (int j = 0; j < 4; ++j) {
      if (c >= 2) a(j, c) = c < 5 ? at_z0[c][j] : -at_z0[c][j];
      if (c < 5) a(4 + j, c) = c < 2 ? at_z0p[c][j] : -at_z0p[c][j];
    }
    colscale(c) = a.col(c).cwiseAbs().maxCoeff();
    a.col(c) /= colscale(c);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  EXPECT_LT(svd.singularValues()(7) / svd.singularValues()(0), 1e-9);
  const Eigen::VectorXd coef = svd.matrixV().col(7).cwiseQuotient(colscale);

  std::array<double, 4> phi{}, psi{};
  for (int c = 2; c < 8; ++c)
    for (int j = 0; j < 4; ++j) (c < 5 ? phi : psi)[j] += coef(c) * at_z0[c][j];
  double scale = 0.0;
  for (int j = 0; j < 4; ++j) scale = std::max(scale, std::abs(phi[j]));
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(phi[j] / scale, psi[j] / scale, 1e-8) << j;
}
