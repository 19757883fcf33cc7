#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "tqrabi/tqrabi.h"

namespace {

tqr_params fig4d(double g) { return {1.0, 0.6, 0.4, g / 2, g / 2, 0.5, 0.5, 0.5}; }

struct ModelPtr {
  tqr_model* p{nullptr};
  ~ModelPtr() { tqr_model_free(p); }
};

}  // namespace

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STRNE(tqr_version(), "");
  EXPECT_STREQ(tqr_status_name(TQR_OK), "OK");
  EXPECT_STREQ(tqr_status_name(TQR_E_REQUIRES_VALID_COUPLINGS), "RequiresValidCouplings");
  tqr_string_free(nullptr);
  tqr_model_free(nullptr);
}

TEST(CApi, NullArgumentsAreRejected) {
  tqr_model* m = nullptr;
  EXPECT_EQ(tqr_model_create(nullptr, &m), TQR_E_INVALID_ARGUMENT);
  EXPECT_EQ(m, nullptr);
  EXPECT_NE(std::string(tqr_last_error()), "");
  tqr_params p = fig4d(1.0);
  EXPECT_EQ(tqr_model_create(&p, nullptr), TQR_E_INVALID_ARGUMENT);
}

TEST(CApi, ParseErrorsCarryMessages) {
  tqr_model* m = nullptr;
  EXPECT_EQ(tqr_model_parse("omega = 1\nfoo = 2\n", &m), TQR_E_CONFIG);
  EXPECT_NE(std::string(tqr_last_error()).find("foo"), std::string::npos);
  EXPECT_EQ(tqr_model_load("/nonexistent.cfg", &m), TQR_E_IO);
}

TEST(CApi, ModelRoundTrip) {
  ModelPtr m;
  ASSERT_EQ(tqr_model_parse("omega=1\ndelta1=0.6\ndelta2=0.2\ng1=0.24\ng2=0.06\n", &m.p), TQR_OK);
  tqr_params p{};
  ASSERT_EQ(tqr_model_params(m.p, &p), TQR_OK);
  EXPECT_DOUBLE_EQ(p.g1, 0.24);
  EXPECT_EQ(p.jz, 0.0);
  char* text = nullptr;
  ASSERT_EQ(tqr_model_describe(m.p, &text), TQR_OK);
  EXPECT_NE(std::strstr(text, "delta1=0.59999999999999998"), nullptr);
  tqr_string_free(text);
  ASSERT_EQ(tqr_model_baselines_csv(m.p, -0.2, 1.0, &text), TQR_OK);
  EXPECT_NE(std::strstr(text, "second,0,-0.032399999999999998"), nullptr);
  tqr_string_free(text);
}

TEST(CApi, SpectrumBothSolvers) {
  ModelPtr m;
  tqr_params p{1.0, 0.6, 0.2, 0.24, 0.06, 0, 0, 0};
  ASSERT_EQ(tqr_model_create(&p, &m.p), TQR_OK);
  tqr_options o;
  tqr_options_default(&o);
  tqr_spectrum* s = nullptr;
  ASSERT_EQ(tqr_spectrum_compute(m.p, TQR_SOLVER_BOTH, -1.0, 1.0, &o, &s), TQR_OK);
  EXPECT_EQ(tqr_spectrum_unmatched(s), 0u);
  std::size_t analytic = 0;
  for (std::size_t i = 0; i < tqr_spectrum_size(s); ++i) {
    tqr_record r;
    ASSERT_EQ(tqr_spectrum_get(s, i, &r), TQR_OK);
    if (r.method == TQR_METHOD_GFUNCTION) {
      ++analytic;
      EXPECT_EQ(r.status, TQR_VERIFIED);
    }
  }
  EXPECT_GT(analytic, 4u);
  tqr_record r;
  EXPECT_EQ(tqr_spectrum_get(s, 1000, &r), TQR_E_INVALID_ARGUMENT);
  tqr_spectrum_free(s);
}

TEST(CApi, AnalyticSolverNeedsBothCouplings) {
  ModelPtr m;
  tqr_params p{1.0, 0.6, 0.2, 0.0, 0.3, 0, 0, 0};
  ASSERT_EQ(tqr_model_create(&p, &m.p), TQR_OK);
  tqr_spectrum* s = nullptr;
  EXPECT_EQ(tqr_spectrum_compute(m.p, TQR_SOLVER_GFUNCTION, -1.0, 1.0, nullptr, &s), TQR_E_REQUIRES_VALID_COUPLINGS);
  EXPECT_EQ(s, nullptr);
  ASSERT_EQ(tqr_spectrum_compute(m.p, TQR_SOLVER_ORACLE, -1.0, 1.0, nullptr, &s), TQR_OK);
  EXPECT_GT(tqr_spectrum_size(s), 0u);
  tqr_spectrum_free(s);
}

TEST(CApi, GValueAndTrace) {
  ModelPtr m;
  tqr_params p{1.0, 0.6, 0.2, 0.24, 0.06, 0, 0, 0};
  ASSERT_EQ(tqr_model_create(&p, &m.p), TQR_OK);
  double v = 0.0;
  EXPECT_EQ(tqr_gvalue(m.p, TQR_PARITY_PLUS, 0.5, nullptr, &v), TQR_OK);
  EXPECT_TRUE(std::isfinite(v));
  EXPECT_EQ(tqr_gvalue(m.p, TQR_PARITY_PLUS, -0.09, nullptr, &v), TQR_E_POLE_AT_BASELINE);
  tqr_trace* t = nullptr;
  ASSERT_EQ(tqr_trace_compute(m.p, 0, -1.0, 2.5, 0.05, nullptr, &t), TQR_OK);
  EXPECT_EQ(tqr_trace_size(t, TQR_PARITY_PLUS), tqr_trace_size(t, TQR_PARITY_MINUS));
  double e = 0.0;
  ASSERT_EQ(tqr_trace_get(t, TQR_PARITY_MINUS, 0, &e, &v), TQR_OK);
  EXPECT_DOUBLE_EQ(e, -1.0);
  tqr_trace_free(t);
  EXPECT_EQ(tqr_trace_compute(m.p, 0, -1.0, 2.5, 0.0, nullptr, &t), TQR_E_INVALID_ARGUMENT);
}

TEST(CApi, ExceptionalStates) {
  ModelPtr m;
  tqr_params p = fig4d(2.0);
  ASSERT_EQ(tqr_model_create(&p, &m.p), TQR_OK);
  tqr_state* built = nullptr;
  tqr_state* closed = nullptr;
  ASSERT_EQ(tqr_exceptional_state(m.p, TQR_PARITY_PLUS, 3, &built), TQR_OK);
  ASSERT_EQ(tqr_closed_form_state(m.p, TQR_FORM_PSI_E3, 3, &closed), TQR_OK);
  tqr_state_info a, b;
  ASSERT_EQ(tqr_state_info_get(built, &a), TQR_OK);
  ASSERT_EQ(tqr_state_info_get(closed, &b), TQR_OK);
  EXPECT_EQ(a.energy, 1.5);
  ASSERT_EQ(a.size, b.size);
  double sign = 0.0;
  for (std::size_t i = 0; i < a.size; ++i) {
    tqr_amplitude x, y;
    ASSERT_EQ(tqr_state_amplitude(built, i, &x), TQR_OK);
    ASSERT_EQ(tqr_state_amplitude(closed, i, &y), TQR_OK);
    EXPECT_EQ(x.n, y.n);
    EXPECT_EQ(x.pair, y.pair);
    if (sign == 0.0) sign = x.value * y.value > 0 ? 1.0 : -1.0;
    EXPECT_NEAR(x.value, sign * y.value, 1e-12);
  }
  double res = 1.0;
  ASSERT_EQ(tqr_state_residual(m.p, built, 50, &res), TQR_OK);
  EXPECT_LT(res, 1e-12);
  EXPECT_EQ(tqr_state_residual(m.p, built, 2, &res), TQR_E_SUPPORT_OVERFLOW);
  ASSERT_EQ(tqr_state_subspace_check(m.p, built, &res), TQR_OK);
  EXPECT_LT(res, 1e-13);
  const tqr_state* both[] = {built, closed};
  char* csv = nullptr;
  ASSERT_EQ(tqr_states_csv(both, 2, nullptr, 0, &csv), TQR_OK);
  EXPECT_EQ(std::string(csv).rfind("n,s1s2,amplitude\n", 0), 0u);
  tqr_string_free(csv);
  tqr_state_free(built);
  tqr_state_free(closed);
  tqr_state* none = nullptr;
  tqr_params off = fig4d(2.0);
  off.jz = 0.45;
  ModelPtr m2;
  ASSERT_EQ(tqr_model_create(&off, &m2.p), TQR_OK);
  EXPECT_EQ(tqr_exceptional_state(m2.p, TQR_PARITY_PLUS, 3, &none), TQR_E_CONDITION_NOT_MET);
}

TEST(CApi, ScanCatalog) {
  ModelPtr m;
  tqr_params p = fig4d(1.0);
  ASSERT_EQ(tqr_model_create(&p, &m.p), TQR_OK);
  tqr_scan_spec spec{TQR_AXIS_JZ, 0.3, 0.7, 41, 3, 0.0, 0.0};
  tqr_catalog* c = nullptr;
  ASSERT_EQ(tqr_scan_flat_lines(m.p, &spec, &c), TQR_OK);
  int flat = 0;
  for (std::size_t i = 0; i < tqr_catalog_size(c); ++i) {
    tqr_candidate k;
    ASSERT_EQ(tqr_catalog_get(c, i, &k), TQR_OK);
    if (k.g_independent && std::abs(k.axis_value - 0.5) < 1e-9) ++flat;
    EXPECT_NE(tqr_catalog_label(c, i), nullptr);
  }
  EXPECT_EQ(flat, 2);
  EXPECT_EQ(tqr_catalog_label(c, 999), nullptr);
  tqr_catalog_free(c);
  spec.points = 1;
  EXPECT_EQ(tqr_scan_flat_lines(m.p, &spec, &c), TQR_E_INVALID_ARGUMENT);
}

TEST(CApi, Sweep) {
  ModelPtr m;
  tqr_params p = fig4d(1.0);
  ASSERT_EQ(tqr_model_create(&p, &m.p), TQR_OK);
  tqr_sweep_spec spec{TQR_VARY_G, 0.5, 1.5, 0.5, 12, TQR_SOLVER_GFUNCTION, 2.0};
  tqr_sweep* s = nullptr;
  ASSERT_EQ(tqr_sweep_run(m.p, &spec, nullptr, 2, &s), TQR_OK);
  EXPECT_EQ(tqr_sweep_failures(s), 0u);
  int flat = 0;
  for (std::size_t i = 0; i < tqr_sweep_size(s); ++i) {
    tqr_sweep_row r;
    ASSERT_EQ(tqr_sweep_get(s, i, &r), TQR_OK);
    if (r.has_energy && r.energy == 1.5) ++flat;
  }
  EXPECT_EQ(flat, 3);
  tqr_sweep_free(s);
  spec.step = 0.0;
  EXPECT_EQ(tqr_sweep_run(m.p, &spec, nullptr, 1, &s), TQR_E_INVALID_ARGUMENT);
}
