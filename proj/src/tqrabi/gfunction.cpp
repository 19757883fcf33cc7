#include "tqrabi/gfunction.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "tqrabi/csv.hpp"
#include "tqrabi/error.hpp"

namespace tqr {

const char* to_string(Topology t) noexcept {
  switch (t) {
    case Topology::full8: return "full8";
    case Topology::reduced6: return "reduced6";
    case Topology::reduced4: return "reduced4";
  }
  return "?";
}

namespace {

Topology topology_for(const UnitModel& m) {
  if (m.equal_couplings()) return Topology::reduced4;
  return m.gprime >= 0.5 * m.g ? Topology::full8 : Topology::reduced6;
}

void require_inside(double z, double center, double radius, const char* what) {
  if (!(std::abs(z - center) < radius)) {
    fail(ErrorCode::outside_disk, std::string(what) + " = " + format_number(z) + " is not inside |z - " +
                                      format_number(center) + "| < " + format_number(radius));
  }
}

double distance_to_baseline(const UnitModel& m, double energy, double margin) {
  const auto near = baselines(m, energy - 2.0 * margin, energy + 2.0 * margin);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& b : near) best = std::min(best, std::abs(b.energy - energy));
  return best;
}

}  // namespace

MatchingScheme default_scheme(const UnitModel& m) {
  MatchingScheme s;
  s.topology = topology_for(m);
  if (s.topology == Topology::reduced4) {
    s.z0 = 0.5 * m.g;
    return s;
  }
  const double r_gp = convergence_radius(m, Center::gprime);
  const double r_g = convergence_radius(m, Center::g);
  // Equal fractional depth in both disks: (g - z0)/R_g = (z0 - g')/R_g'.
  s.z0 = (m.g * r_gp + m.gprime * r_g) / (r_gp + r_g);
  s.z0prime = s.topology == Topology::full8 ? m.gprime * m.gprime / m.g : 0.0;
  return s;
}

void validate_scheme(const UnitModel& m, const MatchingScheme& s) {
  const Topology expected = topology_for(m);
  if (s.topology != expected) {
    fail(ErrorCode::scheme_mismatch, std::string("topology ") + to_string(s.topology) + " does not fit g'=" +
                                         format_number(m.gprime) + ", g=" + format_number(m.g) + " (expected " +
                                         to_string(expected) + ")");
  }
  switch (s.topology) {
    case Topology::reduced4:
      require_inside(s.z0, 0.0, convergence_radius(m, Center::origin), "z0");
      require_inside(s.z0, m.g, convergence_radius(m, Center::g), "z0");
      break;
    case Topology::reduced6:
      if (s.z0prime != 0.0) fail(ErrorCode::scheme_mismatch, "reduced6 matches the origin block at z0' = 0");
      require_inside(s.z0, m.gprime, convergence_radius(m, Center::gprime), "z0");
      require_inside(s.z0, m.g, convergence_radius(m, Center::g), "z0");
      require_inside(0.0, m.gprime, convergence_radius(m, Center::gprime), "z0'");
      break;
    case Topology::full8:
      require_inside(s.z0, m.gprime, convergence_radius(m, Center::gprime), "z0");
      require_inside(s.z0, m.g, convergence_radius(m, Center::g), "z0");
      require_inside(s.z0prime, 0.0, convergence_radius(m, Center::origin), "z0'");
      require_inside(s.z0prime, m.gprime, convergence_radius(m, Center::gprime), "z0'");
      break;
  }
}

double gvalue(const UnitModel& m, Parity parity, double energy, const MatchingScheme& scheme,
              const SeriesOptions& series, double pole_margin) {
  if (!std::isfinite(energy)) fail(ErrorCode::invalid_argument, "gvalue: energy must be finite");
  if (const double d = distance_to_baseline(m, energy, pole_margin); d < pole_margin) {
    fail(ErrorCode::pole_at_baseline,
         "energy " + format_number(energy) + " is within " + format_number(d) + " of a baseline");
  }
  validate_scheme(m, scheme);

  auto values_at = [&](Center c, int slot, double z) {
    const auto block = recur_basis(m, parity, energy, c, slot, series.n_max, series.pole_tolerance);
    return evaluate(block, z, series).values;
  };
  auto values_at2 = [&](Center c, int slot, double za, double zb) {
    const auto block = recur_basis(m, parity, energy, c, slot, series.n_max, series.pole_tolerance);
    return std::pair{evaluate(block, za, series).values, evaluate(block, zb, series).values};
  };

  Eigen::MatrixXd M;
  switch (scheme.topology) {
    case Topology::full8: {
      // Columns: psi (alpha=g) slots {1,2,4}, phi (alpha=g') slots {1,2,3},
      // Phi (alpha=0) slots {1,2}. Rows: psi-phi at z0, phi-Phi at z0'.
      M = Eigen::MatrixXd::Zero(8, 8);
      const int g_slots[3] = {0, 1, 3};
      for (int k = 0; k < 3; ++k) {
        const auto v = values_at(Center::g, g_slots[k], scheme.z0);
        for (int j = 0; j < 4; ++j) M(j, k) = v[j];
      }
      for (int k = 0; k < 3; ++k) {
        const auto [a, b] = values_at2(Center::gprime, k, scheme.z0, scheme.z0prime);
        for (int j = 0; j < 4; ++j) {
          M(j, 3 + k) = -a[j];
          M(4 + j, 3 + k) = b[j];
        }
      }
      for (int k = 0; k < 2; ++k) {
        const auto v = values_at(Center::origin, k, scheme.z0prime);
        for (int j = 0; j < 4; ++j) M(4 + j, 6 + k) = -v[j];
      }
      break;
    }
    case Topology::reduced6: {
      M = Eigen::MatrixXd::Zero(6, 6);
      const int g_slots[3] = {0, 1, 3};
      for (int k = 0; k < 3; ++k) {
        const auto v = values_at(Center::g, g_slots[k], scheme.z0);
        for (int j = 0; j < 4; ++j) M(j, k) = v[j];
      }
      for (int k = 0; k < 3; ++k) {
        const auto [a, b] = values_at2(Center::gprime, k, scheme.z0, 0.0);
        for (int j = 0; j < 4; ++j) M(j, 3 + k) = -a[j];
        M(4, 3 + k) = b[0] - b[2];
        M(5, 3 + k) = b[1] - b[3];
      }
      break;
    }
    case Topology::reduced4: {
      M = Eigen::MatrixXd::Zero(4, 4);
      const auto v0 = values_at(Center::origin, 0, scheme.z0);
      for (int j = 0; j < 4; ++j) M(j, 0) = v0[j];
      const int g_slots[3] = {0, 1, 3};
      for (int k = 0; k < 3; ++k) {
        const auto v = values_at(Center::g, g_slots[k], scheme.z0);
        for (int j = 0; j < 4; ++j) M(j, 1 + k) = -v[j];
      }
      break;
    }
  }

  for (Eigen::Index c = 0; c < M.cols(); ++c) {
    const double norm = M.col(c).cwiseAbs().maxCoeff();
    if (norm > 0.0 && std::isfinite(norm)) M.col(c) /= norm;
  }
  return Eigen::FullPivLU<Eigen::MatrixXd>(M).determinant();
}

double gvalue(const ModelParams& params, Parity parity, double energy, const GOptions& options) {
  const UnitModel m = to_unit_model(params);
  const MatchingScheme scheme = options.scheme ? *options.scheme : default_scheme(m);
  return gvalue(m, parity, energy / m.omega, scheme, options.series, options.pole_margin);
}

namespace {

struct Scanner {
  const UnitModel& m;
  Parity parity;
  const MatchingScheme& scheme;
  const RootOptions& opt;

  double G(double e) const { return gvalue(m, parity, e, scheme, opt.g.series, opt.g.pole_margin); }

  static int sgn(double v) { return (v > 0.0) - (v < 0.0); }

  double bisect(double lo, double hi, double f_lo) const {
    while (hi - lo > opt.tolerance) {
      const double mid = 0.5 * (lo + hi);
      const double f_mid = G(mid);
      if (f_mid == 0.0) return mid;
      if (sgn(f_mid) == sgn(f_lo)) {
        lo = mid;
        f_lo = f_mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }

  // Minimises s*G on [lo, hi] by golden-section search; returns the abscissa.
  double dip(double lo, double hi, int s) const {
    const double r = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - r * (b - a), x2 = a + r * (b - a);
    double f1 = s * G(x1), f2 = s * G(x2);
    for (int it = 0; it < 60 && (b - a) > opt.tolerance; ++it) {
      if (f1 < f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - r * (b - a);
        f1 = s * G(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + r * (b - a);
        f2 = s * G(x2);
      }
      if (std::min(f1, f2) < 0.0) break;
    }
    return f1 < f2 ? x1 : x2;
  }

  void scan(double a, double b, std::vector<double>& roots) const {
    const int cells = std::max(2, static_cast<int>(std::ceil((b - a) / opt.step)));
    std::vector<double> e(static_cast<std::size_t>(cells) + 1);
    std::vector<double> v(e.size());
    for (int k = 0; k <= cells; ++k) {
      e[k] = (k == cells) ? b : a + (b - a) * k / cells;
      v[k] = G(e[k]);
    }
    for (int k = 0; k < cells; ++k) {
      if (v[k] == 0.0) {
        roots.push_back(e[k]);
        continue;
      }
      if (v[k + 1] != 0.0 && sgn(v[k]) != sgn(v[k + 1])) roots.push_back(bisect(e[k], e[k + 1], v[k]));
    }
    if (v[cells] == 0.0) roots.push_back(e[cells]);
    // Close pairs inside one cell leave G with a sign-preserving dip.
    for (int k = 1; k < cells; ++k) {
      const int s = sgn(v[k]);
      if (s == 0 || sgn(v[k - 1]) != s || sgn(v[k + 1]) != s) continue;
      if (!(std::abs(v[k]) < std::abs(v[k - 1]) && std::abs(v[k]) < std::abs(v[k + 1]))) continue;
      const double x = dip(e[k - 1], e[k + 1], s);
      const double fx = G(x);
      if (sgn(fx) == -s) {
        roots.push_back(bisect(e[k - 1], x, v[k - 1]));
        roots.push_back(bisect(x, e[k + 1], fx));
      }
    }
  }
};

}  // namespace

SpectrumResult find_roots(const ModelParams& params, Parity parity, double e_min, double e_max,
                          const RootOptions& options) {
  if (!(e_min < e_max)) fail(ErrorCode::invalid_argument, "find_roots: need e_min < e_max");
  if (!(options.step > 0.0)) fail(ErrorCode::invalid_argument, "find_roots: step must be positive");
  const UnitModel m = to_unit_model(params);
  const MatchingScheme scheme = options.g.scheme ? *options.g.scheme : default_scheme(m);
  validate_scheme(m, scheme);

  const double lo = e_min / m.omega;
  const double hi = e_max / m.omega;
  const double margin = options.g.pole_margin;
  const double guard = 1.5 * margin;

  // Interval ends: window edges and every baseline inside the window.
  struct Edge {
    double e;
    bool pole;
  };
  std::vector<Edge> edges{{lo, false}};
  for (const auto& b : baselines(m, lo - margin, hi + margin)) edges.push_back({b.energy, true});
  edges.push_back({hi, false});
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) { return x.e < y.e; });

  const Scanner scanner{m, parity, scheme, options};
  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    double a = edges[i].e;
    double b = edges[i + 1].e;
    // Keep clear of any baseline, including ones just outside the window.
    a = std::max(a, lo);
    b = std::min(b, hi);
    if (edges[i].pole || distance_to_baseline(m, a, margin) < guard) a += guard;
    if (edges[i + 1].pole || distance_to_baseline(m, b, margin) < guard) b -= guard;
    if (!(b > a)) continue;
    scanner.scan(a, b, roots);
  }
  std::sort(roots.begin(), roots.end());

  SpectrumResult out;
  for (double r : roots) {
    SpectrumRecord rec;
    rec.energy = r * m.omega;
    rec.parity = parity;
    rec.method = Method::gfunction;
    rec.residual = std::abs(scanner.G(r));
    out.records.push_back(rec);
  }
  return out;
}

GTrace trace(const ModelParams& params, Parity parity, double e_min, double e_max, double step,
             const GOptions& options) {
  if (!(step > 0.0)) fail(ErrorCode::invalid_argument, "trace: step must be positive");
  if (!(e_min < e_max)) fail(ErrorCode::invalid_argument, "trace: need e_min < e_max");
  const UnitModel m = to_unit_model(params);
  const MatchingScheme scheme = options.scheme ? *options.scheme : default_scheme(m);
  validate_scheme(m, scheme);

  GTrace t;
  t.parity = parity;
  t.poles = baselines(params, e_min, e_max);
  const auto count = static_cast<long>(std::floor((e_max - e_min) / step + 1e-9));
  for (long k = 0; k <= count; ++k) {
    const double e = e_min + static_cast<double>(k) * step;
    const double eu = e / m.omega;
    if (distance_to_baseline(m, eu, options.pole_margin) < options.pole_margin) continue;
    t.energies.push_back(e);
    t.values.push_back(gvalue(m, parity, eu, scheme, options.series, options.pole_margin));
  }
  return t;
}

}  // namespace tqr
