#include "tqrabi/model.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "tqrabi/csv.hpp"
#include "tqrabi/error.hpp"

namespace tqr {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::pole_at_baseline: return "PoleAtBaseline";
    case ErrorCode::outside_disk: return "OutsideDisk";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::scheme_mismatch: return "SchemeMismatch";
    case ErrorCode::requires_equal_couplings: return "RequiresEqualCouplings";
    case ErrorCode::requires_valid_couplings: return "RequiresValidCouplings";
    case ErrorCode::degenerate_denominator: return "DegenerateDenominator";
    case ErrorCode::condition_not_met: return "ConditionNotMet";
    case ErrorCode::support_overflow: return "SupportOverflow";
    case ErrorCode::not_converged: return "NotConverged";
    case ErrorCode::config: return "ConfigError";
    case ErrorCode::io: return "IoError";
  }
  return "UnknownError";
}

void ModelParams::validate() const {
  const std::array<double, 8> all{omega, delta1, delta2, g1, g2, jx, jy, jz};
  for (double v : all) {
    if (!std::isfinite(v)) fail(ErrorCode::invalid_argument, "model parameters must be finite");
  }
  if (!(omega > 0.0)) fail(ErrorCode::invalid_argument, "omega must be positive");
  if (g1 < 0.0 || g2 < 0.0) fail(ErrorCode::invalid_argument, "couplings g1, g2 must be non-negative");
}

void ModelParams::validate_for_analytic() const {
  validate();
  if (!(g1 > 0.0) || !(g2 > 0.0)) {
    fail(ErrorCode::requires_valid_couplings,
         "analytic solver needs g1 > 0 and g2 > 0 (g > 0 and |g'| < g), got g1=" + format_number(g1) +
             " g2=" + format_number(g2));
  }
}

UnitModel to_unit_model_unchecked(const ModelParams& p) {
  UnitModel m;
  m.omega = p.omega;
  const double w = p.omega;
  double g1 = p.g1 / w;
  double g2 = p.g2 / w;
  double d1 = p.delta1 / w;
  double d2 = p.delta2 / w;
  if (g1 < g2) {
    std::swap(g1, g2);
    std::swap(d1, d2);
    m.swapped = true;
  }
  m.delta1 = d1;
  m.delta2 = d2;
  m.g = g1 + g2;
  m.gprime = g1 - g2;
  if (m.gprime <= kEqualCouplingTolerance * m.g) m.gprime = 0.0;
  m.jx = p.jx / w;
  m.jy = p.jy / w;
  m.jz = p.jz / w;
  return m;
}

UnitModel to_unit_model(const ModelParams& p) {
  p.validate_for_analytic();
  return to_unit_model_unchecked(p);
}

const char* to_string(Parity p) noexcept { return p == Parity::plus ? "plus" : "minus"; }

Parity parse_parity(std::string_view text) {
  if (text == "plus" || text == "+" || text == "+1" || text == "even") return Parity::plus;
  if (text == "minus" || text == "-" || text == "-1" || text == "odd") return Parity::minus;
  fail(ErrorCode::invalid_argument, "unknown parity '" + std::string(text) + "'");
}

const char* to_string(BaselineKind kind) noexcept {
  switch (kind) {
    case BaselineKind::first: return "first";
    case BaselineKind::second: return "second";
    case BaselineKind::exchange: return "exchange";
  }
  return "?";
}

namespace {

// Appends n + offset for every n >= 0 landing in [lo, hi].
void push_ladder(std::vector<Baseline>& out, BaselineKind kind, double offset, double lo, double hi) {
  const int n_begin = std::max(0, static_cast<int>(std::ceil(lo - offset)));
  for (int n = n_begin;; ++n) {
    const double e = n + offset;
    if (e > hi) break;
    if (e >= lo) out.push_back({kind, n, e});
  }
}

}  // namespace

std::vector<Baseline> baselines(const UnitModel& m, double e_min, double e_max) {
  if (!(e_min < e_max)) fail(ErrorCode::invalid_argument, "baselines: need e_min < e_max");
  std::vector<Baseline> out;
  push_ladder(out, BaselineKind::first, -m.g * m.g + m.jx, e_min, e_max);
  const double exchange = m.jy + m.jz;
  if (m.gprime == 0.0 && exchange != 0.0) {
    push_ladder(out, BaselineKind::exchange, -m.jx - exchange, e_min, e_max);
    push_ladder(out, BaselineKind::exchange, -m.jx + exchange, e_min, e_max);
  } else {
    push_ladder(out, BaselineKind::second, -m.gprime * m.gprime - m.jx, e_min, e_max);
  }
  std::sort(out.begin(), out.end(), [](const Baseline& a, const Baseline& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  });
  std::vector<Baseline> unique;
  for (const auto& b : out) {
    const bool dup = std::any_of(unique.begin(), unique.end(), [&](const Baseline& u) {
      return u.kind == b.kind && std::abs(u.energy - b.energy) <= 1e-12;
    });
    if (!dup) unique.push_back(b);
  }
  return unique;
}

std::vector<Baseline> baselines(const ModelParams& params, double e_min, double e_max) {
  params.validate();
  if (!(e_min < e_max)) fail(ErrorCode::invalid_argument, "baselines: need e_min < e_max");
  const UnitModel m = to_unit_model_unchecked(params);
  auto out = baselines(m, e_min / m.omega, e_max / m.omega);
  for (auto& b : out) b.energy *= m.omega;
  // Rescaling can push an endpoint by an ulp.
  std::erase_if(out, [&](const Baseline& b) { return b.energy < e_min || b.energy > e_max; });
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

double parse_double(std::string_view text, std::string_view key, int line) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    fail(ErrorCode::config, "line " + std::to_string(line) + ": value of '" + std::string(key) +
                                "' is not a number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

ModelParams parse_config(std::string_view text) {
  std::map<std::string, double, std::less<>> values;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto sep = line.find_first_of("=:");
    if (sep == std::string_view::npos) {
      fail(ErrorCode::config, "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, sep)));
    const auto value_text = trim(line.substr(sep + 1));
    static constexpr std::array<std::string_view, 8> known{"omega", "delta1", "delta2", "g1",
                                                          "g2",    "jx",     "jy",     "jz"};
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      fail(ErrorCode::config, "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    if (values.count(key)) {
      fail(ErrorCode::config, "line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    values[key] = parse_double(value_text, key, line_no);
  }
  auto required = [&](const char* key) {
    auto it = values.find(key);
    if (it == values.end()) fail(ErrorCode::config, std::string("missing required key '") + key + "'");
    return it->second;
  };
  auto optional = [&](const char* key) {
    auto it = values.find(key);
    return it == values.end() ? 0.0 : it->second;
  };
  ModelParams p;
  p.omega = required("omega");
  p.delta1 = required("delta1");
  p.delta2 = required("delta2");
  p.g1 = required("g1");
  p.g2 = required("g2");
  p.jx = optional("jx");
  p.jy = optional("jy");
  p.jz = optional("jz");
  try {
    p.validate();
  } catch (const Error& e) {
    fail(ErrorCode::config, e.what());
  }
  return p;
}

ModelParams load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io, "cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string describe(const ModelParams& p) {
  return "omega=" + format_number(p.omega) + " delta1=" + format_number(p.delta1) +
         " delta2=" + format_number(p.delta2) + " g1=" + format_number(p.g1) + " g2=" + format_number(p.g2) +
         " jx=" + format_number(p.jx) + " jy=" + format_number(p.jy) + " jz=" + format_number(p.jz);
}

}  // namespace tqr
