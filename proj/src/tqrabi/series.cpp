#include "tqrabi/series.hpp"

#include <algorithm>
#include <cmath>

#include "tqrabi/csv.hpp"
#include "tqrabi/error.hpp"

namespace tqr {

const char* to_string(Center c) noexcept {
  switch (c) {
    case Center::origin: return "0";
    case Center::gprime: return "gprime";
    case Center::g: return "g";
  }
  return "?";
}

double center_position(const UnitModel& m, Center c) {
  switch (c) {
    case Center::origin: return 0.0;
    case Center::gprime: return m.gprime;
    case Center::g: return m.g;
  }
  return 0.0;
}

double convergence_radius(const UnitModel& m, Center c) {
  if (m.equal_couplings()) {
    if (c == Center::gprime) fail(ErrorCode::invalid_argument, "center g' coincides with 0 for g' = 0");
    return m.g;
  }
  switch (c) {
    case Center::origin: return m.gprime;
    case Center::gprime: return std::min(2.0 * m.gprime, m.g - m.gprime);
    case Center::g: return m.g - m.gprime;
  }
  return 0.0;
}

std::vector<int> free_slots(const UnitModel& m, Center c) {
  switch (c) {
    case Center::origin: return m.equal_couplings() ? std::vector<int>{0} : std::vector<int>{0, 1};
    case Center::gprime: return {0, 1, 2};
    case Center::g: return {0, 1, 3};
  }
  return {};
}

double ExpansionBlock::coeff(int j, int n) const {
  return scaled.at(static_cast<std::size_t>(n))[static_cast<std::size_t>(j)] / std::pow(scale, n);
}

namespace {

// Row j of the recurrence reads
//   lead_j (n+1) c_{j,n+1} = diag_j(n) c_{j,n} - lead_j c_{j,n-1} - sum_k K_jk c_{k,n}
// with lead = alpha + (g, g', -g, -g'),
//      diag_j(n) = E - n - alpha^2 - 2 alpha (g, g', -g, -g')_j + (-Jx, Jx, -Jx, Jx)_j
// and the symmetric coupling matrix K (s = parity sign)
//   K01 = K23 = D2,  K03 = K12 = s D1,  K02 = s (Jz - Jy),  K13 = s (Jy + Jz).
struct Rows {
  std::array<double, 4> lead{};
  std::array<double, 4> diag0{};  // diag_j(0); diag_j(n) = diag0_j - n
  std::array<std::array<double, 4>, 4> K{};
};

Rows make_rows(const UnitModel& m, Parity parity, double energy, double alpha) {
  const double s = sign(parity);
  const std::array<double, 4> shift{m.g, m.gprime, -m.g, -m.gprime};
  const std::array<double, 4> jx{-m.jx, m.jx, -m.jx, m.jx};
  Rows r;
  for (int j = 0; j < 4; ++j) {
    r.lead[j] = alpha + shift[j];
    r.diag0[j] = energy - alpha * alpha - 2.0 * alpha * shift[j] + jx[j];
  }
  auto set = [&](int a, int b, double v) {
    r.K[a][b] = v;
    r.K[b][a] = v;
  };
  set(0, 1, m.delta2);
  set(2, 3, m.delta2);
  set(0, 3, s * m.delta1);
  set(1, 2, s * m.delta1);
  set(0, 2, s * (m.jz - m.jy));
  set(1, 3, s * (m.jy + m.jz));
  return r;
}

// Rows whose leading factor is identically zero at this center.
std::vector<int> singular_rows(const UnitModel& m, Center c) {
  switch (c) {
    case Center::origin: return m.equal_couplings() ? std::vector<int>{1, 3} : std::vector<int>{};
    case Center::gprime: return {3};
    case Center::g: return {2};
  }
  return {};
}

[[noreturn]] void pole(double energy, int n, double factor) {
  fail(ErrorCode::pole_at_baseline, "energy " + format_number(energy) + " sits on a baseline (order n=" +
                                        std::to_string(n) + ", division factor " + format_number(factor) + ")");
}

// Solves the constraint rows (vanishing leading factor) at order n for the
// dependent components, in place.
void resolve_singular(const Rows& r, const std::vector<int>& rows, int n, double energy, double tol,
                      std::array<double, 4>& c) {
  if (rows.empty()) return;
  auto rhs = [&](int j) {
    double b = 0.0;
    for (int k = 0; k < 4; ++k) {
      if (std::find(rows.begin(), rows.end(), k) == rows.end()) b += r.K[j][k] * c[k];
    }
    return b;
  };
  if (rows.size() == 1) {
    const int j = rows[0];
    const double d = r.diag0[j] - n;
    if (std::abs(d) < tol) pole(energy, n, d);
    c[j] = rhs(j) / d;
    return;
  }
  // Two coupled constraint rows (origin with g' = 0): rows 1 and 3.
  const int a = rows[0];
  const int b = rows[1];
  const double d = r.diag0[a] - n;  // diag0[a] == diag0[b] here
  const double k = r.K[a][b];
  if (std::abs(d - k) < tol) pole(energy, n, d - k);
  if (std::abs(d + k) < tol) pole(energy, n, d + k);
  const double ba = rhs(a);
  const double bb = rhs(b);
  // [d, -k; -k, d] (x_a, x_b) = (ba, bb)
  const double det = (d - k) * (d + k);
  c[a] = (d * ba + k * bb) / det;
  c[b] = (k * ba + d * bb) / det;
}

}  // namespace

ExpansionBlock recur(const UnitModel& m, Parity parity, double energy, Center kind,
                     const std::array<double, 4>& init, int n_max, double pole_tolerance) {
  if (n_max < 1) fail(ErrorCode::invalid_argument, "recur: n_max must be >= 1");
  if (!(m.g > 0.0)) fail(ErrorCode::requires_valid_couplings, "recur: need g > 0");
  if (kind == Center::gprime && m.equal_couplings()) {
    fail(ErrorCode::invalid_argument, "recur: center g' is not distinct from 0 when g' = 0");
  }

  ExpansionBlock block;
  block.model = m;
  block.parity = parity;
  block.energy = energy;
  block.kind = kind;
  block.center = center_position(m, kind);
  block.radius = convergence_radius(m, kind);
  block.scale = block.radius;
  block.n_max = n_max;

  std::array<double, 4> c0{};
  for (int j : free_slots(m, kind)) c0[j] = init[j];
  if (kind == Center::origin) {
    // phi_3(0) = phi_1(0), phi_4(0) = phi_2(0)
    c0[2] = c0[0];
    if (!m.equal_couplings()) c0[3] = c0[1];
  }

  const Rows r = make_rows(m, parity, energy, block.center);
  const std::vector<int> sing = singular_rows(m, kind);
  const double rho = block.scale;

  block.scaled.assign(static_cast<std::size_t>(n_max) + 1, std::array<double, 4>{});
  block.scaled[0] = c0;
  resolve_singular(r, sing, 0, energy, pole_tolerance, block.scaled[0]);
  block.init = block.scaled[0];

  std::array<double, 4> prev{};
  for (int n = 0; n < n_max; ++n) {
    const auto& cur = block.scaled[static_cast<std::size_t>(n)];
    auto& next = block.scaled[static_cast<std::size_t>(n) + 1];
    for (int j = 0; j < 4; ++j) {
      if (std::find(sing.begin(), sing.end(), j) != sing.end()) continue;
      double acc = (r.diag0[j] - n) * cur[j];
      for (int k = 0; k < 4; ++k) acc -= r.K[j][k] * cur[k];
      next[j] = (rho * acc - rho * rho * r.lead[j] * prev[j]) / (r.lead[j] * (n + 1));
    }
    resolve_singular(r, sing, n + 1, energy, pole_tolerance, next);
    prev = cur;
  }
  return block;
}

ExpansionBlock recur_basis(const UnitModel& m, Parity parity, double energy, Center kind, int slot,
                           int n_max, double pole_tolerance) {
  const auto slots = free_slots(m, kind);
  if (std::find(slots.begin(), slots.end(), slot) == slots.end()) {
    fail(ErrorCode::invalid_argument, "recur_basis: slot " + std::to_string(slot) + " is not free at center " +
                                          to_string(kind));
  }
  std::array<double, 4> init{};
  init[slot] = 1.0;
  auto block = recur(m, parity, energy, kind, init, n_max, pole_tolerance);
  block.basis_tag = slot;
  return block;
}

namespace {

// Neumaier's variant of Kahan summation.
struct CompensatedSum {
  double sum{0.0};
  double carry{0.0};
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

struct PartialSums {
  std::array<double, 4> values{};
  int terms{0};
  bool converged{false};
};

PartialSums sum_series(const ExpansionBlock& block, double t, double tol) {
  std::array<CompensatedSum, 4> acc{};
  std::array<double, 4> last{};
  double power = 1.0;
  int quiet = 0;  // consecutive orders with a negligible contribution
  PartialSums out;
  const int n_max = block.n_max;
  for (int n = 0; n <= n_max; ++n) {
    const auto& c = block.scaled[static_cast<std::size_t>(n)];
    std::array<double, 4> term{};
    for (int j = 0; j < 4; ++j) {
      term[j] = c[j] * power;
      acc[j].add(term[j]);
    }
    power *= t;
    out.terms = n + 1;

    double scale = 0.0;
    for (int j = 0; j < 4; ++j) scale = std::max(scale, std::abs(acc[j].value()));
    bool small = true;
    for (int j = 0; j < 4; ++j) {
      if (std::max(std::abs(term[j]), std::abs(last[j])) > tol * scale) small = false;
    }
    last = term;
    quiet = small ? quiet + 1 : 0;
    if (quiet >= 3 && n >= 8) {
      out.converged = true;
      break;
    }
  }
  for (int j = 0; j < 4; ++j) out.values[j] = acc[j].value();
  return out;
}

}  // namespace

SeriesPoint evaluate(const ExpansionBlock& block, double z, const SeriesOptions& options) {
  const double h = z - block.center;
  if (!(std::abs(h) < block.radius)) {
    fail(ErrorCode::outside_disk, "evaluation point z=" + format_number(z) + " outside the disk |z-" +
                                      format_number(block.center) + "| < " + format_number(block.radius));
  }
  const double t = h / block.scale;
  const double envelope = std::exp(block.center * z);

  PartialSums sums = sum_series(block, t, options.tail_tolerance);
  int n_max = block.n_max;
  ExpansionBlock grown;
  while (!sums.converged && n_max < options.n_cap) {
    n_max = std::min(2 * n_max, options.n_cap);
    grown = recur(block.model, block.parity, block.energy, block.kind, block.init, n_max,
                  options.pole_tolerance);
    sums = sum_series(grown, t, options.tail_tolerance);
  }
  if (!sums.converged) {
    fail(ErrorCode::no_convergence, "series around " + format_number(block.center) + " did not converge at z=" +
                                        format_number(z) + " within " + std::to_string(options.n_cap) +
                                        " terms");
  }
  SeriesPoint p;
  p.z = z;
  p.terms = sums.terms;
  for (int j = 0; j < 4; ++j) p.values[j] = envelope * sums.values[j];
  return p;
}

}  // namespace tqr
