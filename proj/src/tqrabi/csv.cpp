#include "tqrabi/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>

#include "tqrabi/exceptional.hpp"
#include "tqrabi/gfunction.hpp"
#include "tqrabi/series.hpp"
#include "tqrabi/spectrum.hpp"
#include "tqrabi/sweep.hpp"

namespace tqr {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // also folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void put_comments(std::string& out, const Comments& comments) {
  for (const auto& c : comments) {
    out += "# ";
    out += c;
    out += '\n';
  }
}

// Commas and newlines cannot appear inside our cells.
std::string cell(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

std::string spectrum_csv(const SpectrumResult& spectrum, const Comments& comments, bool with_status) {
  std::string out;
  put_comments(out, comments);
  out += with_status ? "E,parity,method,residual,label,status\n" : "E,parity,method,residual\n";
  for (const auto& r : spectrum.records) {
    out += format_number(r.energy) + ',' + to_string(r.parity) + ',' + to_string(r.method) + ',' +
           format_number(r.residual);
    if (with_status) {
      out += ',';
      if (r.label) out += std::to_string(*r.label);
      out += ',';
      out += to_string(r.status);
    }
    out += '\n';
  }
  return out;
}

std::string trace_csv(const GTrace& plus, const GTrace& minus, const Comments& comments) {
  struct Row {
    std::optional<double> gp, gm;
  };
  std::map<double, Row> rows;
  for (std::size_t i = 0; i < plus.energies.size(); ++i) rows[plus.energies[i]].gp = plus.values[i];
  for (std::size_t i = 0; i < minus.energies.size(); ++i) rows[minus.energies[i]].gm = minus.values[i];
  const auto& poles = plus.poles.empty() ? minus.poles : plus.poles;
  for (const auto& b : poles) rows.try_emplace(b.energy);

  std::string out;
  put_comments(out, comments);
  for (const auto& b : poles) {
    out += "# baseline " + std::string(to_string(b.kind)) + " n=" + std::to_string(b.index) +
           " E=" + format_number(b.energy) + '\n';
  }
  out += "E,G_plus,G_minus\n";
  for (const auto& [e, r] : rows) {
    out += format_number(e) + ',';
    if (r.gp) out += format_number(*r.gp);
    out += ',';
    if (r.gm) out += format_number(*r.gm);
    out += '\n';
  }
  return out;
}

std::string coefficients_csv(const ExpansionBlock& block, const Comments& comments) {
  std::string out;
  put_comments(out, comments);
  out += "n,c1,c2,c3,c4\n";
  for (int n = 0; n <= block.n_max; ++n) {
    out += std::to_string(n);
    for (int j = 0; j < 4; ++j) out += ',' + format_number(block.coeff(j, n));
    out += '\n';
  }
  return out;
}

namespace {

void catalog_row(std::string& out, const ExceptionalCandidate& c, const std::string& label) {
  out += std::to_string(c.n_index) + ',' + to_string(c.parity) + ',' + format_number(c.energy) + ',' +
         format_number(c.condition_value) + ',' + (c.g_independent ? "true" : "false") + ',' + cell(label) + '\n';
}

constexpr const char* kCatalogHeader = "N,parity,energy,condition_value,g_independent,manifold_label\n";

}  // namespace

std::string catalog_csv(const std::vector<FlatLine>& lines, const Comments& comments) {
  std::string out;
  put_comments(out, comments);
  out += kCatalogHeader;
  for (const auto& l : lines) catalog_row(out, l.candidate, l.label);
  return out;
}

std::string catalog_csv(const std::vector<ExceptionalCandidate>& candidates, const Comments& comments) {
  std::string out;
  put_comments(out, comments);
  out += kCatalogHeader;
  for (const auto& c : candidates) catalog_row(out, c, "");
  return out;
}

std::string states_csv(const std::vector<ExceptionalState>& states, const Comments& comments) {
  std::string out;
  put_comments(out, comments);
  out += "n,s1s2,amplitude\n";
  for (const auto& s : states) {
    out += "# candidate N=" + std::to_string(s.n_index) + " parity=" + to_string(s.parity) +
           " energy=" + format_number(s.energy) + " norm_constant=" + format_number(s.norm_constant) + '\n';
    for (const auto& a : s.coeffs) {
      out += std::to_string(a.n) + ',' + to_string(a.pair) + ',' + format_number(a.value) + '\n';
    }
  }
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, const std::string& variable, const Comments& comments) {
  std::string out;
  put_comments(out, comments);
  out += variable + ",E,parity,method,status\n";
  for (const auto& r : rows) {
    out += format_number(r.x) + ',';
    if (r.energy) out += format_number(*r.energy);
    out += ',';
    if (r.parity) out += to_string(*r.parity);
    out += ',';
    if (r.method) out += to_string(*r.method);
    out += ',' + cell(r.status) + '\n';
  }
  return out;
}

}  // namespace tqr
