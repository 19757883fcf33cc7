// sweep.hpp: Full analytic spectrum of one parameter point and sweeps over a
// parameter grid.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tqrabi/gfunction.hpp"
#include "tqrabi/oracle.hpp"
#include "tqrabi/spectrum.hpp"

namespace tqr {

/// Rigorous lower bound on the ground energy: -g^2/w - |D1| - |D2| - |Jx| - |Jy| - |Jz|.
double energy_floor(const ModelParams& params);

/// G-function roots of both parities in [e_min, e_max], plus the exceptional
/// eigenvalues on the baselines when g1 = g2. Sorted by energy.
SpectrumResult analytic_spectrum(const ModelParams& params, double e_min, double e_max,
                                 const RootOptions& options = {});

/// Keeps the lowest `levels` records of each parity (per method).
SpectrumResult lowest_per_parity(const SpectrumResult& in, int levels);

enum class Solver { gfunction, oracle, both };
const char* to_string(Solver s) noexcept;
Solver parse_solver(std::string_view text);

enum class SweepVariable { g, delta1, delta2, jx, jy, jz };
const char* to_string(SweepVariable v) noexcept;
SweepVariable parse_sweep_variable(std::string_view text);

struct SweepSpec {
  SweepVariable varying{SweepVariable::g};
  double start{0.0};
  double stop{0.0};
  double step{0.1};
  ModelParams fixed{};      // for g sweeps the ratio g1 : g2 of this template is kept
  int levels{6};            // per parity
  Solver solver{Solver::both};
  double e_max{3.0};        // upper end of the analytic window (energy units)
  int truncation{300};
  double verify_tolerance{1e-6};
  RootOptions roots{};
  OracleOptions oracle{};
};

struct SweepRow {
  double x{0.0};
  std::optional<double> energy;
  std::optional<Parity> parity;
  std::optional<Method> method;
  std::string status;       // ok | verified | spurious | error:<code>
};

/// start, start + step, ... up to stop (inclusive within 1e-9 steps).
std::vector<double> sweep_grid(const SweepSpec& spec);

ModelParams sweep_point(const SweepSpec& spec, double x);

/// Rows of one grid point; solver failures become a single error row.
std::vector<SweepRow> sweep_one(const SweepSpec& spec, double x);

/// All rows in grid order. Points run on `workers` threads (0: worker_count()).
std::vector<SweepRow> run_sweep(const SweepSpec& spec, int workers = 0);

/// TQR_WORKERS if set to a positive integer, else the hardware concurrency.
int worker_count();

}  // namespace tqr
