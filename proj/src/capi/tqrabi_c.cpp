#include "tqrabi/tqrabi.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "tqrabi/closed_forms.hpp"
#include "tqrabi/csv.hpp"
#include "tqrabi/error.hpp"
#include "tqrabi/exceptional.hpp"
#include "tqrabi/gfunction.hpp"
#include "tqrabi/oracle.hpp"
#include "tqrabi/sweep.hpp"

struct tqr_model {
  tqr::ModelParams params;
};

struct tqr_spectrum {
  tqr::SpectrumResult result;
  std::size_t unmatched{0};
};

struct tqr_trace {
  tqr::GTrace plus;
  tqr::GTrace minus;
};

struct tqr_state {
  tqr::ExceptionalState state;
};

struct tqr_catalog {
  std::vector<tqr::FlatLine> lines;
};

struct tqr_sweep {
  std::vector<tqr::SweepRow> rows;
  std::string variable;
};

namespace {

thread_local std::string last_error;

tqr_status status_of(tqr::ErrorCode code) { return static_cast<tqr_status>(static_cast<int>(code)); }

template <class F>
tqr_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return TQR_OK;
  } catch (const tqr::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TQR_E_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TQR_E_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return TQR_E_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) tqr::fail(tqr::ErrorCode::invalid_argument, std::string(what) + " must not be null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

tqr::Comments comments_of(const char* const* comments, std::size_t n) {
  tqr::Comments out;
  if (n > 0) need(comments, "comments");
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(comments[i] ? comments[i] : "");
  return out;
}

tqr::Parity parity_of(tqr_parity p) {
  if (p == TQR_PARITY_PLUS) return tqr::Parity::plus;
  if (p == TQR_PARITY_MINUS) return tqr::Parity::minus;
  tqr::fail(tqr::ErrorCode::invalid_argument, "parity must be TQR_PARITY_PLUS or TQR_PARITY_MINUS");
}

tqr_options defaults() {
  tqr_options o;
  o.root_step = 0.01;
  o.root_tolerance = 1e-10;
  o.pole_margin = tqr::kPoleMargin;
  o.series_n_max = 160;
  o.series_n_cap = 512;
  o.tail_tolerance = 1e-14;
  o.truncation = 300;
  o.truncation_cap = 1200;
  o.drift_tolerance = 1e-8;
  o.verify_tolerance = 1e-6;
  return o;
}

tqr::RootOptions root_options(const tqr_options& o) {
  if (!(o.root_step > 0.0) || !(o.root_tolerance > 0.0) || !(o.pole_margin > 0.0) || o.series_n_max < 1 ||
      o.series_n_cap < o.series_n_max || !(o.tail_tolerance > 0.0)) {
    tqr::fail(tqr::ErrorCode::invalid_argument, "invalid solver options");
  }
  tqr::RootOptions r;
  r.step = o.root_step;
  r.tolerance = o.root_tolerance;
  r.g.pole_margin = o.pole_margin;
  r.g.series.n_max = o.series_n_max;
  r.g.series.n_cap = o.series_n_cap;
  r.g.series.tail_tolerance = o.tail_tolerance;
  return r;
}

tqr::OracleOptions oracle_options(const tqr_options& o) {
  if (o.truncation < 1 || o.truncation_cap < o.truncation || !(o.drift_tolerance > 0.0)) {
    tqr::fail(tqr::ErrorCode::invalid_argument, "invalid oracle options");
  }
  tqr::OracleOptions r;
  r.truncation_cap = o.truncation_cap;
  r.drift_tolerance = o.drift_tolerance;
  return r;
}

const tqr_options& pick(const tqr_options* options, tqr_options& storage) {
  if (options != nullptr) return *options;
  storage = defaults();
  return storage;
}

// Every ED level in [e_min, e_max]: k doubles until the window is covered.
tqr::SpectrumResult oracle_window(const tqr::ModelParams& p, double e_min, double e_max, const tqr_options& o) {
  const tqr::OracleOptions oo = oracle_options(o);
  for (int k = 16;; k *= 2) {
    const int truncation = std::max(o.truncation, k / 2 + 10);
    tqr::SpectrumResult s = tqr::diagonalize(p, truncation, k, oo);
    const bool covered = !s.records.empty() && s.records.back().energy > e_max;
    if (covered || k >= 4 * (truncation + 1)) {
      std::erase_if(s.records, [&](const tqr::SpectrumRecord& r) { return r.energy < e_min || r.energy > e_max; });
      return s;
    }
  }
}

}  // namespace

extern "C" {

const char* tqr_version(void) { return "1.0.0"; }

const char* tqr_last_error(void) { return last_error.c_str(); }

const char* tqr_status_name(tqr_status status) {
  switch (status) {
    case TQR_OK: return "OK";
    case TQR_E_OUT_OF_MEMORY: return "OutOfMemory";
    case TQR_E_INTERNAL: return "InternalError";
    default:
      if (status >= TQR_E_INVALID_ARGUMENT && status <= TQR_E_IO) {
        return tqr::to_string(static_cast<tqr::ErrorCode>(static_cast<int>(status)));
      }
      return "UnknownStatus";
  }
}

void tqr_string_free(char* s) { std::free(s); }

void tqr_options_default(tqr_options* out) {
  if (out != nullptr) *out = defaults();
}

tqr_status tqr_model_create(const tqr_params* params, tqr_model** out) {
  return guard([&] {
    need(params, "params");
    need(out, "out");
    tqr::ModelParams p{params->omega, params->delta1, params->delta2, params->g1,
                       params->g2,    params->jx,     params->jy,     params->jz};
    p.validate();
    *out = new tqr_model{p};
  });
}

tqr_status tqr_model_parse(const char* text, tqr_model** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new tqr_model{tqr::parse_config(text)};
  });
}

tqr_status tqr_model_load(const char* path, tqr_model** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new tqr_model{tqr::load_config(path)};
  });
}

void tqr_model_free(tqr_model* model) { delete model; }

tqr_status tqr_model_params(const tqr_model* model, tqr_params* out) {
  return guard([&] {
    need(model, "model");
    need(out, "out");
    const auto& p = model->params;
    *out = tqr_params{p.omega, p.delta1, p.delta2, p.g1, p.g2, p.jx, p.jy, p.jz};
  });
}

tqr_status tqr_model_describe(const tqr_model* model, char** out) {
  return guard([&] {
    need(model, "model");
    need(out, "out");
    *out = dup(tqr::describe(model->params));
  });
}

tqr_status tqr_model_energy_floor(const tqr_model* model, double* out) {
  return guard([&] {
    need(model, "model");
    need(out, "out");
    *out = tqr::energy_floor(model->params);
  });
}

tqr_status tqr_model_baselines_csv(const tqr_model* model, double e_min, double e_max, char** out) {
  return guard([&] {
    need(model, "model");
    need(out, "out");
    std::string s = "kind,n,E\n";
    for (const auto& b : tqr::baselines(model->params, e_min, e_max)) {
      s += std::string(tqr::to_string(b.kind)) + ',' + std::to_string(b.index) + ',' + tqr::format_number(b.energy) +
           '\n';
    }
    *out = dup(s);
  });
}

tqr_status tqr_gvalue(const tqr_model* model, tqr_parity parity, double energy, const tqr_options* options,
                      double* out) {
  return guard([&] {
    need(model, "model");
    need(out, "out");
    tqr_options storage;
    *out = tqr::gvalue(model->params, parity_of(parity), energy, root_options(pick(options, storage)).g);
  });
}

tqr_status tqr_gvalue_scheme(const tqr_model* model, tqr_parity parity, double energy, double z0, double z0prime,
                             const tqr_options* options, double* out) {
  return guard([&] {
    need(model, "model");
    need(out, "out");
    tqr_options storage;
    tqr::GOptions g = root_options(pick(options, storage)).g;
    const tqr::UnitModel m = tqr::to_unit_model(model->params);
    tqr::MatchingScheme scheme = tqr::default_scheme(m);
    scheme.z0 = z0;
    if (scheme.topology == tqr::Topology::full8) scheme.z0prime = z0prime;
    g.scheme = scheme;
    *out = tqr::gvalue(model->params, parity_of(parity), energy, g);
  });
}

tqr_status tqr_spectrum_compute(const tqr_model* model, tqr_solver solver, double e_min, double e_max,
                                const tqr_options* options, tqr_spectrum** out) {
  return guard([&] {
    need(model, "model");
    need(out, "out");
    if (!(e_min < e_max)) tqr::fail(tqr::ErrorCode::invalid_argument, "need e_min < e_max");
    tqr_options storage;
    const tqr_options& o = pick(options, storage);
    auto result = std::make_unique<tqr_spectrum>();
    tqr::SpectrumResult analytic, oracle;
    if (solver == TQR_SOLVER_GFUNCTION || solver == TQR_SOLVER_BOTH) {
      analytic = tqr::analytic_spectrum(model->params, e_min, e_max, root_options(o));
    }
    if (solver == TQR_SOLVER_ORACLE || solver == TQR_SOLVER_BOTH) {
      oracle = oracle_window(model->params, e_min, e_max, o);
    }
    if (solver != TQR_SOLVER_GFUNCTION && solver != TQR_SOLVER_ORACLE && solver != TQR_SOLVER_BOTH) {
      tqr::fail(tqr::ErrorCode::invalid_argument, "unknown solver");
    }
    if (solver == TQR_SOLVER_BOTH) {
      tqr::verify_against(analytic, oracle, o.verify_tolerance);
      for (const auto& r : oracle.records) {
        bool hit = false;
        for (const auto& a : analytic.records) {
          if (a.parity == r.parity && std::abs(a.energy - r.energy) <= o.verify_tolerance) hit = true;
        }
        if (!hit) ++result->unmatched;
      }
    }
    result->result = analytic;
    result->result.append(oracle);
    result->result.sort();
    *out = result.release();
  });
}

tqr_status tqr_oracle_levels(const tqr_model* model, int k_levels, const tqr_options* options, tqr_spectrum** out) {
  return guard([&] {
    need(model, "model");
    need(out, "out");
    tqr_options storage;
    const tqr_options& o = pick(options, storage);
    auto result = std::make_unique<tqr_spectrum>();
    result->result = tqr::diagonalize(model->params, std::max(o.truncation, k_levels / 2 + 10), k_levels,
                                      oracle_options(o));
    *out = result.release();
  });
}

size_t tqr_spectrum_size(const tqr_spectrum* spectrum) { return spectrum ? spectrum->result.records.size() : 0; }

tqr_status tqr_spectrum_get(const tqr_spectrum* spectrum, size_t index, tqr_record* out) {
  return guard([&] {
    need(spectrum, "spectrum");
    need(out, "out");
    if (index >= spectrum->result.records.size()) tqr::fail(tqr::ErrorCode::invalid_argument, "index out of range");
    const auto& r = spectrum->result.records[index];
    out->energy = r.energy;
    out->parity = r.parity == tqr::Parity::plus ? TQR_PARITY_PLUS : TQR_PARITY_MINUS;
    out->method = static_cast<tqr_method>(static_cast<int>(r.method));
    out->residual = r.residual;
    out->label = r.label ? *r.label : -1;
    out->status = static_cast<tqr_verification>(static_cast<int>(r.status));
  });
}

size_t tqr_spectrum_unmatched(const tqr_spectrum* spectrum) { return spectrum ? spectrum->unmatched : 0; }

tqr_status tqr_spectrum_csv(const tqr_spectrum* spectrum, const char* const* comments, size_t n_comments,
                            int with_status, char** out) {
  return guard([&] {
    need(spectrum, "spectrum");
    need(out, "out");
    *out = dup(tqr::spectrum_csv(spectrum->result, comments_of(comments, n_comments), with_status != 0));
  });
}

void tqr_spectrum_free(tqr_spectrum* spectrum) { delete spectrum; }

tqr_status tqr_trace_compute(const tqr_model* model, int which, double e_min, double e_max, double step,
                             const tqr_options* options, tqr_trace** out) {
  return guard([&] {
    need(model, "model");
    need(out, "out");
    if (which != 0 && which != TQR_PARITY_PLUS && which != TQR_PARITY_MINUS) {
      tqr::fail(tqr::ErrorCode::invalid_argument, "which must be a parity or 0");
    }
    tqr_options storage;
    const tqr::GOptions g = root_options(pick(options, storage)).g;
    auto t = std::make_unique<tqr_trace>();
    t->plus.parity = tqr::Parity::plus;
    t->minus.parity = tqr::Parity::minus;
    if (which != TQR_PARITY_MINUS) t->plus = tqr::trace(model->params, tqr::Parity::plus, e_min, e_max, step, g);
    if (which != TQR_PARITY_PLUS) t->minus = tqr::trace(model->params, tqr::Parity::minus, e_min, e_max, step, g);
    *out = t.release();
  });
}

size_t tqr_trace_size(const tqr_trace* trace, tqr_parity parity) {
  if (trace == nullptr) return 0;
  return parity == TQR_PARITY_PLUS ? trace->plus.energies.size() : trace->minus.energies.size();
}

tqr_status tqr_trace_get(const tqr_trace* trace, tqr_parity parity, size_t index, double* energy, double* value) {
  return guard([&] {
    need(trace, "trace");
    const tqr::GTrace& t = parity_of(parity) == tqr::Parity::plus ? trace->plus : trace->minus;
    if (index >= t.energies.size()) tqr::fail(tqr::ErrorCode::invalid_argument, "index out of range");
    if (energy) *energy = t.energies[index];
    if (value) *value = t.values[index];
  });
}

tqr_status tqr_trace_csv(const tqr_trace* trace, const char* const* comments, size_t n_comments, char** out) {
  return guard([&] {
    need(trace, "trace");
    need(out, "out");
    *out = dup(tqr::trace_csv(trace->plus, trace->minus, comments_of(comments, n_comments)));
  });
}

void tqr_trace_free(tqr_trace* trace) { delete trace; }

tqr_status tqr_exceptional_condition(const tqr_model* model, tqr_parity parity, int n_index, double* out) {
  return guard([&] {
    need(model, "model");
    need(out, "out");
    *out = tqr::condition(model->params, parity_of(parity), n_index);
  });
}

tqr_status tqr_exceptional_state(const tqr_model* model, tqr_parity parity, int n_index, tqr_state** out) {
  return guard([&] {
    need(model, "model");
    need(out, "out");
    *out = new tqr_state{tqr::build_state(model->params, parity_of(parity), n_index)};
  });
}

tqr_status tqr_closed_form_state(const tqr_model* model, tqr_closed_form form, int n_index, tqr_state** out) {
  return guard([&] {
    need(model, "model");
    need(out, "out");
    namespace cf = tqr::closed_form;
    const auto& p = model->params;
    tqr::ExceptionalState s;
    switch (form) {
      case TQR_FORM_DARK: s = cf::dark(p, n_index); break;
      case TQR_FORM_PSI_E: s = cf::psi_e(p); break;
      case TQR_FORM_PSI_G1: s = cf::psi_g1(p); break;
      case TQR_FORM_PSI_G2: s = cf::psi_g2(p); break;
      case TQR_FORM_PSI_E1: s = cf::psi_e1(p); break;
      case TQR_FORM_PSI_E1_ODD: s = cf::psi_e1_odd(p); break;
      case TQR_FORM_PSI_E3: s = cf::psi_e3(p); break;
      default: tqr::fail(tqr::ErrorCode::invalid_argument, "unknown closed form");
    }
    *out = new tqr_state{std::move(s)};
  });
}

tqr_status tqr_state_info_get(const tqr_state* state, tqr_state_info* out) {
  return guard([&] {
    need(state, "state");
    need(out, "out");
    const auto& s = state->state;
    out->n_index = s.n_index;
    out->energy = s.energy;
    out->parity = s.parity == tqr::Parity::plus ? TQR_PARITY_PLUS : TQR_PARITY_MINUS;
    out->condition_value = s.condition_value;
    out->norm_constant = s.norm_constant;
    out->size = s.coeffs.size();
  });
}

tqr_status tqr_state_amplitude(const tqr_state* state, size_t index, tqr_amplitude* out) {
  return guard([&] {
    need(state, "state");
    need(out, "out");
    if (index >= state->state.coeffs.size()) tqr::fail(tqr::ErrorCode::invalid_argument, "index out of range");
    const auto& a = state->state.coeffs[index];
    *out = tqr_amplitude{a.n, static_cast<tqr_qubit_pair>(static_cast<int>(a.pair)), a.value};
  });
}

tqr_status tqr_state_residual(const tqr_model* model, const tqr_state* state, int truncation, double* out) {
  return guard([&] {
    need(model, "model");
    need(state, "state");
    need(out, "out");
    *out = tqr::residual(model->params, truncation, state->state);
  });
}

tqr_status tqr_state_subspace_check(const tqr_model* model, const tqr_state* state, double* out) {
  return guard([&] {
    need(model, "model");
    need(state, "state");
    need(out, "out");
    *out = tqr::fock_subspace_check(model->params, state->state);
  });
}

tqr_status tqr_states_csv(const tqr_state* const* states, size_t n_states, const char* const* comments,
                          size_t n_comments, char** out) {
  return guard([&] {
    need(out, "out");
    if (n_states > 0) need(states, "states");
    std::vector<tqr::ExceptionalState> list;
    for (std::size_t i = 0; i < n_states; ++i) {
      need(states[i], "state");
      list.push_back(states[i]->state);
    }
    *out = dup(tqr::states_csv(list, comments_of(comments, n_comments)));
  });
}

void tqr_state_free(tqr_state* state) { delete state; }

tqr_status tqr_exceptional_window(const tqr_model* model, double e_min, double e_max, tqr_catalog** out) {
  return guard([&] {
    need(model, "model");
    need(out, "out");
    if (!tqr::to_unit_model_unchecked(model->params).equal_couplings()) {
      tqr::fail(tqr::ErrorCode::requires_equal_couplings, "exceptional states need g1 = g2");
    }
    auto c = std::make_unique<tqr_catalog>();
    for (const auto& cand : tqr::exceptional_in_window(model->params, e_min, e_max)) {
      tqr::FlatLine line;
      line.value = std::numeric_limits<double>::quiet_NaN();
      line.params = model->params;
      line.candidate = cand;
      const auto label = tqr::manifold_label(model->params, cand.parity, cand.n_index);
      line.label = label ? *label : "";
      c->lines.push_back(std::move(line));
    }
    *out = c.release();
  });
}

tqr_status tqr_scan_flat_lines(const tqr_model* model, const tqr_scan_spec* spec, tqr_catalog** out) {
  return guard([&] {
    need(model, "model");
    need(spec, "spec");
    need(out, "out");
    if (spec->axis < TQR_AXIS_DELTA1 || spec->axis > TQR_AXIS_JZ) {
      tqr::fail(tqr::ErrorCode::invalid_argument, "unknown scan axis");
    }
    tqr::ScanSpec s;
    s.axis = static_cast<tqr::ScanAxis>(static_cast<int>(spec->axis));
    s.start = spec->start;
    s.stop = spec->stop;
    s.points = spec->points;
    s.n_max = spec->n_max;
    s.g_first = spec->g_first;
    s.g_second = spec->g_second;
    auto c = std::make_unique<tqr_catalog>();
    c->lines = tqr::scan_flat_lines(model->params, s);
    *out = c.release();
  });
}

size_t tqr_catalog_size(const tqr_catalog* catalog) { return catalog ? catalog->lines.size() : 0; }

tqr_status tqr_catalog_get(const tqr_catalog* catalog, size_t index, tqr_candidate* out) {
  return guard([&] {
    need(catalog, "catalog");
    need(out, "out");
    if (index >= catalog->lines.size()) tqr::fail(tqr::ErrorCode::invalid_argument, "index out of range");
    const auto& l = catalog->lines[index];
    out->n_index = l.candidate.n_index;
    out->parity = l.candidate.parity == tqr::Parity::plus ? TQR_PARITY_PLUS : TQR_PARITY_MINUS;
    out->energy = l.candidate.energy;
    out->condition_value = l.candidate.condition_value;
    out->g_independent = l.candidate.g_independent ? 1 : 0;
    out->axis_value = l.value;
  });
}

const char* tqr_catalog_label(const tqr_catalog* catalog, size_t index) {
  if (catalog == nullptr || index >= catalog->lines.size()) return nullptr;
  return catalog->lines[index].label.c_str();
}

tqr_status tqr_catalog_model(const tqr_catalog* catalog, size_t index, tqr_model** out) {
  return guard([&] {
    need(catalog, "catalog");
    need(out, "out");
    if (index >= catalog->lines.size()) tqr::fail(tqr::ErrorCode::invalid_argument, "index out of range");
    *out = new tqr_model{catalog->lines[index].params};
  });
}

tqr_status tqr_catalog_csv(const tqr_catalog* catalog, const char* const* comments, size_t n_comments, char** out) {
  return guard([&] {
    need(catalog, "catalog");
    need(out, "out");
    *out = dup(tqr::catalog_csv(catalog->lines, comments_of(comments, n_comments)));
  });
}

void tqr_catalog_free(tqr_catalog* catalog) { delete catalog; }

tqr_status tqr_sweep_run(const tqr_model* templ, const tqr_sweep_spec* spec, const tqr_options* options, int workers,
                         tqr_sweep** out) {
  return guard([&] {
    need(templ, "templ");
    need(spec, "spec");
    need(out, "out");
    if (spec->variable < TQR_VARY_G || spec->variable > TQR_VARY_JZ) {
      tqr::fail(tqr::ErrorCode::invalid_argument, "unknown sweep variable");
    }
    if (spec->solver != TQR_SOLVER_GFUNCTION && spec->solver != TQR_SOLVER_ORACLE && spec->solver != TQR_SOLVER_BOTH) {
      tqr::fail(tqr::ErrorCode::invalid_argument, "unknown solver");
    }
    tqr_options storage;
    const tqr_options& o = pick(options, storage);
    tqr::SweepSpec s;
    s.varying = static_cast<tqr::SweepVariable>(static_cast<int>(spec->variable));
    s.start = spec->start;
    s.stop = spec->stop;
    s.step = spec->step;
    s.fixed = templ->params;
    s.levels = spec->levels;
    s.solver = static_cast<tqr::Solver>(static_cast<int>(spec->solver));
    s.e_max = spec->e_max;
    s.truncation = o.truncation;
    s.verify_tolerance = o.verify_tolerance;
    s.roots = root_options(o);
    s.oracle = oracle_options(o);
    auto sw = std::make_unique<tqr_sweep>();
    sw->rows = tqr::run_sweep(s, workers);
    sw->variable = tqr::to_string(s.varying);
    *out = sw.release();
  });
}

size_t tqr_sweep_size(const tqr_sweep* sweep) { return sweep ? sweep->rows.size() : 0; }

tqr_status tqr_sweep_get(const tqr_sweep* sweep, size_t index, tqr_sweep_row* out) {
  return guard([&] {
    need(sweep, "sweep");
    need(out, "out");
    if (index >= sweep->rows.size()) tqr::fail(tqr::ErrorCode::invalid_argument, "index out of range");
    const auto& r = sweep->rows[index];
    out->x = r.x;
    out->has_energy = r.energy ? 1 : 0;
    out->energy = r.energy.value_or(std::numeric_limits<double>::quiet_NaN());
    out->parity = r.parity.value_or(tqr::Parity::plus) == tqr::Parity::plus ? TQR_PARITY_PLUS : TQR_PARITY_MINUS;
    out->method = static_cast<tqr_method>(static_cast<int>(r.method.value_or(tqr::Method::gfunction)));
    out->status = r.status.c_str();
  });
}

size_t tqr_sweep_failures(const tqr_sweep* sweep) {
  if (sweep == nullptr) return 0;
  std::size_t n = 0;
  for (const auto& r : sweep->rows) {
    if (r.status.rfind("error:", 0) == 0) ++n;
  }
  return n;
}

tqr_status tqr_sweep_csv(const tqr_sweep* sweep, const char* const* comments, size_t n_comments, char** out) {
  return guard([&] {
    need(sweep, "sweep");
    need(out, "out");
    *out = dup(tqr::sweep_csv(sweep->rows, sweep->variable, comments_of(comments, n_comments)));
  });
}

void tqr_sweep_free(tqr_sweep* sweep) { delete sweep; }

}  // extern "C"
