#include "tqrabi/exceptional.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "tqrabi/csv.hpp"
#include "tqrabi/error.hpp"

namespace tqr {

namespace {

constexpr double kDenominatorFloor = 1e-12;
constexpr double kManifoldTolerance = 1e-9;

int alt(int n) { return (n & 1) ? -1 : 1; }

UnitModel equal_coupling_model(const ModelParams& params) {
  const UnitModel m = to_unit_model(params);
  if (!m.equal_couplings()) {
    fail(ErrorCode::requires_equal_couplings,
         "exceptional states need g1 = g2, got g1=" + format_number(params.g1) + " g2=" + format_number(params.g2));
  }
  return m;
}

double unit_energy(const UnitModel& m, Parity parity, int n) {
  return n - m.jx + sign(parity) * alt(n) * (m.jy + m.jz);
}

// Terminating solution around z = 0: c_{1,n} = f1[n], c_{2,n} = f2[n] for
// n = 0..N; c_{3,n} = s(-1)^n c_{1,n}, c_{4,n} = s(-1)^n c_{2,n}.
struct Terminating {
  double energy{0.0};
  std::vector<double> f1;
  std::vector<double> f2;
  double condition{0.0};
};

Terminating terminate(const UnitModel& m, Parity parity, int n_index) {
  if (n_index < 0) fail(ErrorCode::invalid_argument, "exceptional index N must be non-negative");
  const int N = n_index;
  const double s = sign(parity);
  const double E = unit_energy(m, parity, N);
  const double jyz = m.jy + m.jz;

  // f[n + 1] holds c_{1,n} for n = -1..N+1.
  std::vector<double> f(static_cast<std::size_t>(N) + 3, 0.0);
  std::vector<double> f2(static_cast<std::size_t>(N) + 1, 0.0);
  auto F = [&](int n) -> double& { return f[static_cast<std::size_t>(n + 1)]; };
  f2[static_cast<std::size_t>(N)] = 1.0;
  F(N - 1) = -(m.delta2 + s * alt(N) * m.delta1) / m.g;
  for (int n = N - 1; n >= 0; --n) {
    const double coupling = m.delta2 + s * alt(n) * m.delta1;
    const double d = E - n + m.jx - s * alt(n) * jyz;
    if (std::abs(d) < kDenominatorFloor && coupling * F(n) == 0.0) {
      // 0/0: the row leaves c_{2,n} free; take the solution with c_{2,n} = 0
      // (this is how the singlet states pass through).
      f2[static_cast<std::size_t>(n)] = 0.0;
    } else if (std::abs(d) < kDenominatorFloor) {
      fail(ErrorCode::degenerate_denominator, "downward recurrence: division factor " + format_number(d) +
                                                  " vanishes at n=" + std::to_string(n) + " for N=" +
                                                  std::to_string(N));
    } else {
      f2[static_cast<std::size_t>(n)] = coupling * F(n) / d;
    }
    const double diag = E - n - m.jx - s * alt(n) * (m.jz - m.jy);
    F(n - 1) = (diag * F(n) - coupling * f2[static_cast<std::size_t>(n)] - m.g * (n + 1) * F(n + 1)) / m.g;
  }
  Terminating t;
  t.energy = E;
  t.condition = F(-1);
  t.f1.assign(f.begin() + 1, f.begin() + 1 + N + 1);
  t.f2 = std::move(f2);
  return t;
}

ModelParams with_g(const ModelParams& p, double g) {
  ModelParams q = p;
  q.g1 = 0.5 * g;
  q.g2 = 0.5 * g;
  return q;
}

}  // namespace

int ExceptionalState::max_photon() const {
  int n = 0;
  for (const auto& a : coeffs) n = std::max(n, a.n);
  return n;
}

std::vector<double> ExceptionalState::dense(int truncation) const { return to_dense(coeffs, truncation); }

double exceptional_energy(const ModelParams& params, Parity parity, int n_index) {
  const UnitModel m = equal_coupling_model(params);
  return unit_energy(m, parity, n_index) * m.omega;
}

double condition(const ModelParams& params, Parity parity, int n_index) {
  return terminate(equal_coupling_model(params), parity, n_index).condition;
}

ExceptionalCandidate make_candidate(const ModelParams& params, Parity parity, int n_index) {
  const UnitModel m = equal_coupling_model(params);
  const Terminating t = terminate(m, parity, n_index);
  ExceptionalCandidate c;
  c.n_index = n_index;
  c.parity = parity;
  c.energy = t.energy * m.omega;
  c.condition_value = t.condition;
  if (std::abs(t.condition) < kConditionTolerance) {
    const double g = params.g();
    c.g_independent = true;
    for (double other : {2.0 * g, 3.1 * g + 0.5}) {
      try {
        if (!(std::abs(condition(with_g(params, other), parity, n_index)) < kConditionTolerance)) {
          c.g_independent = false;
        }
      } catch (const Error&) {
        c.g_independent = false;
      }
    }
  }
  return c;
}

ExceptionalState build_state(const ModelParams& params, Parity parity, int n_index) {
  const UnitModel m = equal_coupling_model(params);
  const Terminating t = terminate(m, parity, n_index);
  if (!(std::abs(t.condition) < kConditionTolerance)) {
    fail(ErrorCode::condition_not_met, "termination condition is " + format_number(t.condition) + " for N=" +
                                           std::to_string(n_index) + ", parity " + to_string(parity));
  }
  const double s = sign(parity);
  const double h = 1.0 / std::sqrt(2.0);

  // Components 1..4 are the qubit states up-up, up-down, down-down, down-up of
  // the sigma_x basis; up = (e + g)/sqrt2, down = (e - g)/sqrt2.
  std::vector<std::array<double, 4>> raw(static_cast<std::size_t>(n_index) + 1);
  double sqrt_factorial = 1.0;
  for (int n = 0; n <= n_index; ++n) {
    if (n > 0) sqrt_factorial *= std::sqrt(static_cast<double>(n));
    const double p = s * alt(n);
    const double a = t.f1[static_cast<std::size_t>(n)] * sqrt_factorial;
    const double b = t.f2[static_cast<std::size_t>(n)] * sqrt_factorial;
    // t[i][j] with i, j in {up, down}
    const double uu = a, ud = b, dd = p * a, du = p * b;
    // <x y|psi> = sum_ij h[x][i] h[y][j] t[i][j], h = [[1, 1], [1, -1]]/sqrt2
    std::array<double, 4> o{};
    o[0] = h * h * (uu + ud + du + dd);  // ee
    o[1] = h * h * (uu - ud + du - dd);  // eg
    o[2] = h * h * (uu + ud - du - dd);  // ge
    o[3] = h * h * (uu - ud - du + dd);  // gg
    if (m.swapped) std::swap(o[1], o[2]);
    raw[static_cast<std::size_t>(n)] = o;
  }

  double top = 0.0;
  for (double v : raw.back()) top = std::max(top, std::abs(v));
  double norm = 0.0;
  for (const auto& r : raw) {
    for (double v : r) norm += v * v;
  }
  norm = std::sqrt(norm);

  ExceptionalState st;
  st.n_index = n_index;
  st.energy = t.energy * m.omega;
  st.parity = parity;
  st.condition_value = t.condition;
  st.norm_constant = top > 0.0 ? norm / top : 0.0;
  for (int n = 0; n <= n_index; ++n) {
    for (int q = 0; q < 4; ++q) {
      const double v = raw[static_cast<std::size_t>(n)][static_cast<std::size_t>(q)] / norm;
      if (v != 0.0) st.coeffs.push_back({n, static_cast<QubitPair>(q), v});
    }
  }
  return st;
}

double fock_subspace_check(const ModelParams& params, const ExceptionalState& state) {
  const int cut = state.max_photon() + 1;
  const auto v = state.dense(cut);
  const auto hv = apply_hamiltonian(params, cut, v);
  double worst = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) worst = std::max(worst, std::abs(hv[i] - state.energy * v[i]));
  return worst;
}

std::vector<ExceptionalCandidate> exceptional_in_window(const ModelParams& params, double e_min, double e_max) {
  if (!(e_min < e_max)) fail(ErrorCode::invalid_argument, "exceptional_in_window: need e_min < e_max");
  const UnitModel m = to_unit_model(params);
  std::vector<ExceptionalCandidate> out;
  if (!m.equal_couplings()) return out;
  const double lo = e_min / m.omega;
  const double hi = e_max / m.omega;
  const double spread = std::abs(m.jx) + std::abs(m.jy + m.jz);
  for (int N = 0; N - spread <= hi; ++N) {
    for (Parity parity : kBothParities) {
      const double e = unit_energy(m, parity, N);
      if (e < lo || e > hi) continue;
      try {
        auto c = make_candidate(params, parity, N);
        if (std::abs(c.condition_value) < kConditionTolerance) out.push_back(c);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::degenerate_denominator) throw;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.energy < b.energy; });
  return out;
}

const char* to_string(ScanAxis axis) noexcept {
  switch (axis) {
    case ScanAxis::delta1: return "delta1";
    case ScanAxis::delta2: return "delta2";
    case ScanAxis::jx: return "jx";
    case ScanAxis::jy: return "jy";
    case ScanAxis::jz: return "jz";
  }
  return "?";
}

ScanAxis parse_scan_axis(std::string_view text) {
  for (ScanAxis a : {ScanAxis::delta1, ScanAxis::delta2, ScanAxis::jx, ScanAxis::jy, ScanAxis::jz}) {
    if (text == to_string(a)) return a;
  }
  fail(ErrorCode::invalid_argument, "unknown scan axis '" + std::string(text) + "'");
}

std::optional<std::string> manifold_label(const ModelParams& params, Parity parity, int n_index) {
  const UnitModel m = to_unit_model_unchecked(params);
  const double s = sign(parity);
  const double tol = kManifoldTolerance;
  const bool no_exchange = m.jx == 0.0 && m.jy == 0.0 && m.jz == 0.0;
  if (std::abs(m.delta1 - m.delta2) < tol && s * alt(n_index) < 0) return "dark state delta1=delta2";
  if (n_index == 1) {
    if (no_exchange) {
      if (parity == Parity::plus && std::abs(m.delta1 + m.delta2 - 1.0) < tol) return "delta1+delta2=omega";
      if (parity == Parity::minus && std::abs(std::abs(m.delta1 - m.delta2) - 1.0) < tol) {
        return "|delta1-delta2|=omega";
      }
      return std::nullopt;
    }
    const double a = m.jx + s * m.jy + 2.0 * s * m.jz - 1.0;
    const double b = m.jx - s * m.jy;
    const double c = m.delta2 + s * m.delta1;
    if (std::abs(a * a - b * b - c * c) < tol) {
      return parity == Parity::plus ? "(jx+jy+2jz-1)^2=(jx-jy)^2+(delta2+delta1)^2"
                                    : "(jx-jy-2jz-1)^2=(jx+jy)^2+(delta2-delta1)^2";
    }
  }
  if (n_index == 3 && !no_exchange && std::abs(m.jx + s * m.jy + 2.0 * s * m.jz - 2.0) < tol) {
    return parity == Parity::plus ? "jx+jy+2jz=2" : "jx-jy-2jz=2";
  }
  return std::nullopt;
}

namespace {

void set_axis(ModelParams& p, ScanAxis axis, double v) {
  switch (axis) {
    case ScanAxis::delta1: p.delta1 = v; break;
    case ScanAxis::delta2: p.delta2 = v; break;
    case ScanAxis::jx: p.jx = v; break;
    case ScanAxis::jy: p.jy = v; break;
    case ScanAxis::jz: p.jz = v; break;
  }
}

double condition_at(const ModelParams& templ, ScanAxis axis, double v, double g, Parity parity, int N) {
  ModelParams p = with_g(templ, g);
  set_axis(p, axis, v);
  try {
    return condition(p, parity, N);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::degenerate_denominator) return std::numeric_limits<double>::quiet_NaN();
    throw;
  }
}

template <class F>
double bisect_root(F&& f, double a, double b, double fa) {
  for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++it) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (fa > 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<FlatLine> scan_flat_lines(const ModelParams& templ, const ScanSpec& spec) {
  if (spec.points < 2) fail(ErrorCode::invalid_argument, "scan needs at least two grid points");
  if (!(spec.start < spec.stop)) fail(ErrorCode::invalid_argument, "scan needs start < stop");
  if (spec.n_max < 0) fail(ErrorCode::invalid_argument, "scan needs n_max >= 0");
  equal_coupling_model(templ);
  const double ga = spec.g_first > 0.0 ? spec.g_first : templ.g();
  const double gb = spec.g_second > 0.0 ? spec.g_second : 1.7 * templ.g() + 0.3;
  if (ga == gb) fail(ErrorCode::invalid_argument, "scan needs two distinct couplings");

  std::vector<double> grid(static_cast<std::size_t>(spec.points));
  for (int i = 0; i < spec.points; ++i) {
    grid[static_cast<std::size_t>(i)] =
        i + 1 == spec.points ? spec.stop : spec.start + (spec.stop - spec.start) * i / (spec.points - 1);
  }

  std::vector<FlatLine> out;
  auto emit = [&](double v, Parity parity, int N, double value, bool independent) {
    FlatLine line;
    line.axis = spec.axis;
    line.value = v;
    line.params = with_g(templ, ga);
    set_axis(line.params, spec.axis, v);
    line.candidate.n_index = N;
    line.candidate.parity = parity;
    line.candidate.energy = exceptional_energy(line.params, parity, N);
    line.candidate.condition_value = value;
    line.candidate.g_independent = independent;
    const auto known = manifold_label(line.params, parity, N);
    line.label = known ? *known : std::string(to_string(spec.axis)) + "=" + format_number(v);
    out.push_back(std::move(line));
  };

  for (int N = 0; N <= spec.n_max; ++N) {
    for (Parity parity : kBothParities) {
      auto fa = [&](double v) { return condition_at(templ, spec.axis, v, ga, parity, N); };
      auto fb = [&](double v) { return condition_at(templ, spec.axis, v, gb, parity, N); };
      std::vector<double> va(grid.size()), vb(grid.size());
      bool flat = true;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        va[i] = fa(grid[i]);
        vb[i] = fb(grid[i]);
        if (!(std::abs(va[i]) < kConditionTolerance && std::abs(vb[i]) < kConditionTolerance)) flat = false;
      }
      if (flat) {
        // Satisfied along the whole line (dark states, for instance).
        emit(grid.front(), parity, N, va.front(), true);
        continue;
      }
      for (std::size_t i = 0; i < grid.size(); ++i) {
        double root = std::numeric_limits<double>::quiet_NaN();
        if (va[i] == 0.0) {
          root = grid[i];
        } else if (i + 1 < grid.size() && std::isfinite(va[i]) && std::isfinite(va[i + 1]) && va[i + 1] != 0.0 &&
                   va[i] != 0.0 &&
                   (va[i] > 0.0) != (va[i + 1] > 0.0)) {
          root = bisect_root(fa, grid[i], grid[i + 1], va[i]);
          // A sign change across a pole is not a root.
          if (!(std::abs(fa(root)) <= std::max(std::abs(va[i]), std::abs(va[i + 1])))) continue;
        }
        if (!std::isfinite(root)) continue;
        const double value = fa(root);
        const double other = fb(root);
        bool independent = std::abs(other) < kConditionTolerance;
        if (!independent && i + 1 < grid.size() && std::isfinite(vb[i]) && std::isfinite(vb[i + 1]) &&
            (vb[i] > 0.0) != (vb[i + 1] > 0.0)) {
          const double rb = bisect_root(fb, grid[i], grid[i + 1], vb[i]);
          independent = std::abs(rb - root) < 1e-9 * std::max(1.0, std::abs(root));
        }
        emit(root, parity, N, value, independent);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const FlatLine& a, const FlatLine& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.candidate.n_index != b.candidate.n_index) return a.candidate.n_index < b.candidate.n_index;
    return a.candidate.parity == Parity::plus && b.candidate.parity == Parity::minus;
  });
  return out;
}

}  // namespace tqr
