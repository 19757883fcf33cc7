// tqrabi: Command-line front end over the C API.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage/config/io error,
// 3 solver error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tqrabi/tqrabi.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Failure {
  int exit_code;
  std::string message;
};

void check(tqr_status s, const char* what) {
  if (s == TQR_OK) return;
  const bool usage = s == TQR_E_CONFIG || s == TQR_E_IO;
  throw Failure{usage ? kExitUsage : kExitSolver,
                std::string(what) + ": " + tqr_status_name(s) + ": " + tqr_last_error()};
}

struct OwnedString {
  char* p{nullptr};
  ~OwnedString() { tqr_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* p{nullptr};
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  Handle(Handle&& o) noexcept : p(o.p) { o.p = nullptr; }
  ~Handle() { Free(p); }
};

using Model = Handle<tqr_model, tqr_model_free>;
using Spectrum = Handle<tqr_spectrum, tqr_spectrum_free>;
using Trace = Handle<tqr_trace, tqr_trace_free>;
using Catalog = Handle<tqr_catalog, tqr_catalog_free>;
using Sweep = Handle<tqr_sweep, tqr_sweep_free>;
using State = Handle<tqr_state, tqr_state_free>;

struct Common {
  std::string config;
  std::string output;
  tqr_options opt{};
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("-c,--config", c.config, "model config file")->required();
  sub->add_option("-o,--output", c.output, "output file (default: standard output)");
  sub->add_option("--root-step", c.opt.root_step, "G scan step in units of omega")->capture_default_str();
  sub->add_option("--root-tol", c.opt.root_tolerance, "root bisection width")->capture_default_str();
  sub->add_option("--pole-margin", c.opt.pole_margin, "exclusion around baselines")->capture_default_str();
  sub->add_option("--nmax", c.opt.series_n_max, "initial series order")->capture_default_str();
  sub->add_option("--ncap", c.opt.series_n_cap, "series order cap")->capture_default_str();
  sub->add_option("--tail-tol", c.opt.tail_tolerance, "series tail tolerance")->capture_default_str();
  sub->add_option("--truncation", c.opt.truncation, "oracle photon cutoff")->capture_default_str();
  sub->add_option("--truncation-cap", c.opt.truncation_cap, "oracle drift-test cap")->capture_default_str();
  sub->add_option("--drift-tol", c.opt.drift_tolerance, "oracle level drift tolerance")->capture_default_str();
  sub->add_option("--verify-tol", c.opt.verify_tolerance, "analytic/oracle match tolerance")->capture_default_str();
}

Model load(const Common& c) {
  Model m;
  check(tqr_model_load(c.config.c_str(), &m.p), "config");
  return m;
}

std::vector<std::string> provenance(const std::string& command, const tqr_model* model, const Common& c) {
  OwnedString d;
  check(tqr_model_describe(model, &d.p), "describe");
  const auto& o = c.opt;
  return {
      std::string("tqrabi ") + tqr_version() + " " + command,
      "model: " + d.str(),
      "options: root_step=" + num(o.root_step) + " root_tol=" + num(o.root_tolerance) +
          " pole_margin=" + num(o.pole_margin) + " nmax=" + std::to_string(o.series_n_max) +
          " ncap=" + std::to_string(o.series_n_cap) + " tail_tol=" + num(o.tail_tolerance) +
          " truncation=" + std::to_string(o.truncation) + " truncation_cap=" + std::to_string(o.truncation_cap) +
          " drift_tol=" + num(o.drift_tolerance) + " verify_tol=" + num(o.verify_tolerance),
  };
}

std::vector<const char*> pointers(const std::vector<std::string>& lines) {
  std::vector<const char*> out;
  for (const auto& l : lines) out.push_back(l.c_str());
  return out;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Failure{kExitUsage, "cannot open '" + path + "' for writing"};
  f << text;
  if (!f) throw Failure{kExitUsage, "write to '" + path + "' failed"};
}

tqr_solver solver_of(const std::string& s) {
  if (s == "gfunction") return TQR_SOLVER_GFUNCTION;
  if (s == "oracle") return TQR_SOLVER_ORACLE;
  return TQR_SOLVER_BOTH;
}

double floor_of(const tqr_model* m) {
  double f = 0.0;
  check(tqr_model_energy_floor(m, &f), "energy floor");
  return f;
}

// ---- spectrum / verify ----

struct SpectrumArgs {
  Common common;
  std::optional<double> emin;
  double emax{3.0};
  std::string solver{"gfunction"};
};

int run_spectrum(const SpectrumArgs& a, bool verify) {
  Model m = load(a.common);
  const std::string solver = verify ? "both" : a.solver;
  const double lo = a.emin ? *a.emin : floor_of(m.p);
  Spectrum s;
  check(tqr_spectrum_compute(m.p, solver_of(solver), lo, a.emax, &a.common.opt, &s.p), "spectrum");

  auto lines = provenance(verify ? "verify" : "spectrum", m.p, a.common);
  lines.push_back("window: emin=" + num(lo) + " emax=" + num(a.emax) + " solver=" + solver);
  const bool both = solver == "both";
  std::size_t spurious = 0;
  for (std::size_t i = 0; i < tqr_spectrum_size(s.p); ++i) {
    tqr_record r;
    check(tqr_spectrum_get(s.p, i, &r), "record");
    if (r.status == TQR_SPURIOUS) ++spurious;
  }
  const std::size_t unmatched = tqr_spectrum_unmatched(s.p);
  if (both) lines.push_back("spurious=" + std::to_string(spurious) + " unmatched_oracle=" + std::to_string(unmatched));
  const auto ptr = pointers(lines);
  OwnedString csv;
  check(tqr_spectrum_csv(s.p, ptr.data(), ptr.size(), both ? 1 : 0, &csv.p), "csv");
  emit(a.common.output, csv.str());
  if (both && (spurious > 0 || unmatched > 0)) {
    std::cerr << "verification: " << spurious << " spurious analytic roots, " << unmatched
              << " oracle levels without an analytic match\n";
    return kExitMismatch;
  }
  return kExitOk;
}

// ---- trace ----

struct TraceArgs {
  Common common;
  std::string parity{"both"};
  std::vector<double> window{-1.0, 2.5};
  double step{0.01};
};

int run_trace(const TraceArgs& a) {
  Model m = load(a.common);
  int which = 0;
  if (a.parity == "plus") which = TQR_PARITY_PLUS;
  if (a.parity == "minus") which = TQR_PARITY_MINUS;
  Trace t;
  check(tqr_trace_compute(m.p, which, a.window[0], a.window[1], a.step, &a.common.opt, &t.p), "trace");
  auto lines = provenance("trace", m.p, a.common);
  lines.push_back("window: emin=" + num(a.window[0]) + " emax=" + num(a.window[1]) + " step=" + num(a.step) +
                  " parity=" + a.parity);
  const auto ptr = pointers(lines);
  OwnedString csv;
  check(tqr_trace_csv(t.p, ptr.data(), ptr.size(), &csv.p), "csv");
  emit(a.common.output, csv.str());
  return kExitOk;
}

// ---- sweep ----

struct SweepArgs {
  Common common;
  std::string vary{"g"};
  std::vector<double> grid;
  int levels{6};
  std::string solver{"both"};
  double emax{3.0};
  int workers{0};
};

tqr_variable variable_of(const std::string& s) {
  if (s == "delta1") return TQR_VARY_DELTA1;
  if (s == "delta2") return TQR_VARY_DELTA2;
  if (s == "jx") return TQR_VARY_JX;
  if (s == "jy") return TQR_VARY_JY;
  if (s == "jz") return TQR_VARY_JZ;
  return TQR_VARY_G;
}

int run_sweep(const SweepArgs& a) {
  Model m = load(a.common);
  tqr_sweep_spec spec{variable_of(a.vary), a.grid[0], a.grid[1], a.grid[2], a.levels, solver_of(a.solver), a.emax};
  Sweep s;
  check(tqr_sweep_run(m.p, &spec, &a.common.opt, a.workers, &s.p), "sweep");
  auto lines = provenance("sweep", m.p, a.common);
  lines.push_back("sweep: vary=" + a.vary + " start=" + num(a.grid[0]) + " stop=" + num(a.grid[1]) +
                  " step=" + num(a.grid[2]) + " levels=" + std::to_string(a.levels) + " solver=" + a.solver +
                  " emax=" + num(a.emax));
  const auto ptr = pointers(lines);
  OwnedString csv;
  check(tqr_sweep_csv(s.p, ptr.data(), ptr.size(), &csv.p), "csv");
  emit(a.common.output, csv.str());
  const std::size_t failures = tqr_sweep_failures(s.p);
  if (failures > 0) {
    std::cerr << "sweep: " << failures << " grid points failed (see status column)\n";
    return kExitSolver;
  }
  return kExitOk;
}

// ---- exceptional ----

struct ExceptionalArgs {
  Common common;
  std::optional<double> emin;
  double emax{5.0};
  std::vector<std::string> scan;
  int points{201};
  int n_max{3};
  std::vector<double> g_pair;
  std::string states;
};

tqr_axis axis_of(const std::string& s) {
  if (s == "delta1") return TQR_AXIS_DELTA1;
  if (s == "delta2") return TQR_AXIS_DELTA2;
  if (s == "jx") return TQR_AXIS_JX;
  if (s == "jy") return TQR_AXIS_JY;
  if (s == "jz") return TQR_AXIS_JZ;
  throw Failure{kExitUsage, "--scan: unknown axis '" + s + "' (delta1, delta2, jx, jy, jz)"};
}

double parse_double(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Failure{kExitUsage, std::string(what) + ": not a number: '" + s + "'"};
  }
}

int run_exceptional(const ExceptionalArgs& a) {
  Model m = load(a.common);
  Catalog c;
  auto lines = provenance("exceptional", m.p, a.common);
  if (a.scan.empty()) {
    const double lo = a.emin ? *a.emin : floor_of(m.p);
    check(tqr_exceptional_window(m.p, lo, a.emax, &c.p), "exceptional");
    lines.push_back("window: emin=" + num(lo) + " emax=" + num(a.emax));
  } else {
    tqr_scan_spec spec{axis_of(a.scan[0]),
                       parse_double(a.scan[1], "--scan start"),
                       parse_double(a.scan[2], "--scan stop"),
                       a.points,
                       a.n_max,
                       a.g_pair.empty() ? 0.0 : a.g_pair[0],
                       a.g_pair.empty() ? 0.0 : a.g_pair[1]};
    check(tqr_scan_flat_lines(m.p, &spec, &c.p), "scan");
    lines.push_back("scan: axis=" + a.scan[0] + " start=" + num(spec.start) + " stop=" + num(spec.stop) +
                    " points=" + std::to_string(a.points) + " nmax=" + std::to_string(a.n_max) +
                    " g=" + num(spec.g_first) + "," + num(spec.g_second));
  }
  const auto ptr = pointers(lines);
  OwnedString csv;
  check(tqr_catalog_csv(c.p, ptr.data(), ptr.size(), &csv.p), "csv");
  emit(a.common.output, csv.str());

  if (!a.states.empty()) {
    std::vector<State> states;
    for (std::size_t i = 0; i < tqr_catalog_size(c.p); ++i) {
      tqr_candidate cand;
      check(tqr_catalog_get(c.p, i, &cand), "catalog");
      Model at;
      check(tqr_catalog_model(c.p, i, &at.p), "catalog");
      State st;
      check(tqr_exceptional_state(at.p, cand.parity, cand.n_index, &st.p), "state");
      states.push_back(std::move(st));
    }
    std::vector<const tqr_state*> raw;
    for (const auto& s : states) raw.push_back(s.p);
    OwnedString side;
    check(tqr_states_csv(raw.data(), raw.size(), ptr.data(), ptr.size(), &side.p), "states");
    emit(a.states, side.str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectrum of the asymmetric two-qubit Rabi model with XYZ exchange"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tqr_version()));

  SpectrumArgs spec_args, verify_args;
  TraceArgs trace_args;
  SweepArgs sweep_args;
  ExceptionalArgs exc_args;
  for (Common* c : {&spec_args.common, &verify_args.common, &trace_args.common, &sweep_args.common,
                    &exc_args.common}) {
    tqr_options_default(&c->opt);
  }

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues in an energy window");
  add_common(spectrum, spec_args.common);
  spectrum->add_option("--emin", spec_args.emin, "lower end (default: ground-energy bound)");
  spectrum->add_option("--emax", spec_args.emax, "upper end")->capture_default_str();
  spectrum->add_option("--solver", spec_args.solver, "gfunction | oracle | both")
      ->check(CLI::IsMember({"gfunction", "oracle", "both"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "analytic spectrum checked against the oracle");
  add_common(verify, verify_args.common);
  verify->add_option("--emin", verify_args.emin, "lower end (default: ground-energy bound)");
  verify->add_option("--emax", verify_args.emax, "upper end")->capture_default_str();

  auto* trace = app.add_subcommand("trace", "G on an energy grid");
  add_common(trace, trace_args.common);
  trace->add_option("--parity", trace_args.parity, "plus | minus | both")
      ->check(CLI::IsMember({"plus", "minus", "both"}))
      ->capture_default_str();
  trace->add_option("--window", trace_args.window, "EMIN EMAX")->expected(2)->capture_default_str();
  trace->add_option("--step", trace_args.step, "grid step")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "spectra along a parameter grid");
  add_common(sweep, sweep_args.common);
  sweep->add_option("--vary", sweep_args.vary, "g | delta1 | delta2 | jx | jy | jz")
      ->check(CLI::IsMember({"g", "delta1", "delta2", "jx", "jy", "jz"}))
      ->capture_default_str();
  sweep->add_option("--grid", sweep_args.grid, "START STOP STEP")->expected(3)->required();
  sweep->add_option("--levels", sweep_args.levels, "levels per parity")->capture_default_str();
  sweep->add_option("--solver", sweep_args.solver, "gfunction | oracle | both")
      ->check(CLI::IsMember({"gfunction", "oracle", "both"}))
      ->capture_default_str();
  sweep->add_option("--emax", sweep_args.emax, "upper end of the analytic window")->capture_default_str();
  sweep->add_option("--workers", sweep_args.workers, "worker threads (0: TQR_WORKERS or all cores)")
      ->capture_default_str();

  auto* exceptional = app.add_subcommand("exceptional", "exceptional states and flat-line scans (g1 = g2)");
  add_common(exceptional, exc_args.common);
  exceptional->add_option("--emin", exc_args.emin, "lower end (default: ground-energy bound)");
  exceptional->add_option("--emax", exc_args.emax, "upper end")->capture_default_str();
  exceptional->add_option("--scan", exc_args.scan, "AXIS START STOP: scan one parameter for flat lines")
      ->expected(3);
  exceptional->add_option("--points", exc_args.points, "scan grid points")->capture_default_str();
  exceptional->add_option("--nmax-index", exc_args.n_max, "largest photon index N scanned")->capture_default_str();
  exceptional->add_option("--g-pair", exc_args.g_pair, "G1 G2: couplings certifying g-independence")->expected(2);
  exceptional->add_option("--states", exc_args.states, "sidecar file for state amplitudes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*spectrum) return run_spectrum(spec_args, false);
    if (*verify) return run_spectrum(verify_args, true);
    if (*trace) return run_trace(trace_args);
    if (*sweep) return run_sweep(sweep_args);
    if (*exceptional) return run_exceptional(exc_args);
  } catch (const Failure& f) {
    std::cerr << "tqrabi: " << f.message << "\n";
    return f.exit_code;
  }
  return kExitUsage;
}
