#include "tqrabi/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "tqrabi/error.hpp"
#include "tqrabi/exceptional.hpp"

namespace tqr {

double energy_floor(const ModelParams& p) {
  p.validate();
  const double g = p.g();
  return -g * g / p.omega - std::abs(p.delta1) - std::abs(p.delta2) - std::abs(p.jx) - std::abs(p.jy) -
         std::abs(p.jz);
}

SpectrumResult analytic_spectrum(const ModelParams& params, double e_min, double e_max, const RootOptions& options) {
  SpectrumResult out;
  for (Parity parity : kBothParities) out.append(find_roots(params, parity, e_min, e_max, options));
  for (const auto& c : exceptional_in_window(params, e_min, e_max)) {
    SpectrumRecord r;
    r.energy = c.energy;
    r.parity = c.parity;
    r.method = Method::exceptional;
    r.residual = std::abs(c.condition_value);
    out.records.push_back(r);
  }
  out.sort();
  return out;
}

SpectrumResult lowest_per_parity(const SpectrumResult& in, int levels) {
  SpectrumResult sorted = in;
  sorted.sort();
  SpectrumResult out;
  int plus_analytic = 0, minus_analytic = 0, plus_oracle = 0, minus_oracle = 0;
  for (const auto& r : sorted.records) {
    const bool oracle = r.method == Method::oracle;
    int& count = r.parity == Parity::plus ? (oracle ? plus_oracle : plus_analytic)
                                          : (oracle ? minus_oracle : minus_analytic);
    if (count < levels) {
      out.records.push_back(r);
      ++count;
    }
  }
  return out;
}

const char* to_string(Solver s) noexcept {
  switch (s) {
    case Solver::gfunction: return "gfunction";
    case Solver::oracle: return "oracle";
    case Solver::both: return "both";
  }
  return "?";
}

Solver parse_solver(std::string_view text) {
  if (text == "gfunction") return Solver::gfunction;
  if (text == "oracle") return Solver::oracle;
  if (text == "both") return Solver::both;
  fail(ErrorCode::invalid_argument, "unknown solver '" + std::string(text) + "'");
}

const char* to_string(SweepVariable v) noexcept {
  switch (v) {
    case SweepVariable::g: return "g";
    case SweepVariable::delta1: return "delta1";
    case SweepVariable::delta2: return "delta2";
    case SweepVariable::jx: return "jx";
    case SweepVariable::jy: return "jy";
    case SweepVariable::jz: return "jz";
  }
  return "?";
}

SweepVariable parse_sweep_variable(std::string_view text) {
  for (SweepVariable v : {SweepVariable::g, SweepVariable::delta1, SweepVariable::delta2, SweepVariable::jx,
                          SweepVariable::jy, SweepVariable::jz}) {
    if (text == to_string(v)) return v;
  }
  fail(ErrorCode::invalid_argument, "unknown sweep variable '" + std::string(text) + "'");
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
  if (!(spec.step > 0.0) || !std::isfinite(spec.step)) fail(ErrorCode::invalid_argument, "sweep step must be positive");
  std::vector<double> grid;
  if (spec.stop < spec.start) return grid;
  const auto count = static_cast<long>(std::floor((spec.stop - spec.start) / spec.step + 1e-9));
  for (long k = 0; k <= count; ++k) grid.push_back(spec.start + static_cast<double>(k) * spec.step);
  return grid;
}

ModelParams sweep_point(const SweepSpec& spec, double x) {
  ModelParams p = spec.fixed;
  switch (spec.varying) {
    case SweepVariable::g: {
      const double g = spec.fixed.g();
      const double share = g > 0.0 ? spec.fixed.g1 / g : 0.5;
      p.g1 = share * x;
      p.g2 = x - p.g1;
      if (share == 0.5) p.g2 = p.g1;  // keep g' exactly zero
      break;
    }
    case SweepVariable::delta1: p.delta1 = x; break;
    case SweepVariable::delta2: p.delta2 = x; break;
    case SweepVariable::jx: p.jx = x; break;
    case SweepVariable::jy: p.jy = x; break;
    case SweepVariable::jz: p.jz = x; break;
  }
  return p;
}

std::vector<SweepRow> sweep_one(const SweepSpec& spec, double x) {
  std::vector<SweepRow> rows;
  try {
    const ModelParams p = sweep_point(spec, x);
    SpectrumResult analytic, oracle;
    if (spec.solver != Solver::oracle) {
      analytic = lowest_per_parity(analytic_spectrum(p, energy_floor(p), spec.e_max, spec.roots), spec.levels);
    }
    if (spec.solver != Solver::gfunction) {
      const int k = 2 * spec.levels + 8;
      SpectrumResult all = diagonalize(p, std::max(spec.truncation, k / 2 + 10), k, spec.oracle);
      std::erase_if(all.records, [&](const SpectrumRecord& r) { return r.energy > spec.e_max; });
      oracle = lowest_per_parity(all, spec.levels);
    }
    if (spec.solver == Solver::both) verify_against(analytic, oracle, spec.verify_tolerance);
    SpectrumResult merged = analytic;
    merged.append(oracle);
    merged.sort();
    for (const auto& r : merged.records) {
      SweepRow row;
      row.x = x;
      row.energy = r.energy;
      row.parity = r.parity;
      row.method = r.method;
      row.status = r.status == Verification::unverified ? "ok" : to_string(r.status);
      rows.push_back(row);
    }
  } catch (const Error& e) {
    rows.clear();
    SweepRow row;
    row.x = x;
    row.status = std::string("error:") + to_string(e.code());
    rows.push_back(row);
  }
  return rows;
}

int worker_count() {
  if (const char* env = std::getenv("TQR_WORKERS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<int>(std::min<long>(n, 1024));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int workers) {
  spec.fixed.validate();
  if (spec.levels < 1) fail(ErrorCode::invalid_argument, "levels must be positive");
  const std::vector<double> grid = sweep_grid(spec);
  std::vector<std::vector<SweepRow>> results(grid.size());
  const int n_threads = std::max(1, std::min<int>(workers > 0 ? workers : worker_count(), static_cast<int>(grid.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) results[i] = sweep_one(spec, grid[i]);
  };
  if (n_threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::vector<SweepRow> rows;
  for (auto& r : results) rows.insert(rows.end(), r.begin(), r.end());
  return rows;
}

}  // namespace tqr
