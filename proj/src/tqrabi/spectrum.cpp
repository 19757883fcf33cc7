#include "tqrabi/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tqrabi/error.hpp"

namespace tqr {

const char* to_string(Method m) noexcept {
  switch (m) {
    case Method::gfunction: return "gfunction";
    case Method::exceptional: return "exceptional";
    case Method::oracle: return "oracle";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  if (text == "gfunction") return Method::gfunction;
  if (text == "exceptional") return Method::exceptional;
  if (text == "oracle") return Method::oracle;
  fail(ErrorCode::invalid_argument, "unknown method '" + std::string(text) + "'");
}

const char* to_string(Verification v) noexcept {
  switch (v) {
    case Verification::unverified: return "unverified";
    case Verification::verified: return "verified";
    case Verification::spurious: return "spurious";
  }
  return "?";
}

void SpectrumResult::sort() {
  std::stable_sort(records.begin(), records.end(), [](const SpectrumRecord& a, const SpectrumRecord& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    if (a.parity != b.parity) return a.parity == Parity::plus;
    return static_cast<int>(a.method) < static_cast<int>(b.method);
  });
}

void SpectrumResult::append(const SpectrumResult& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

std::vector<double> SpectrumResult::energies(Parity parity) const {
  std::vector<double> out;
  for (const auto& r : records) {
    if (r.parity == parity) out.push_back(r.energy);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t SpectrumResult::count(Parity parity) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [&](const SpectrumRecord& r) { return r.parity == parity; }));
}

void verify_against(SpectrumResult& analytic, const SpectrumResult& oracle, double tolerance) {
  for (auto& rec : analytic.records) {
    if (rec.method == Method::oracle) continue;
    double best = std::numeric_limits<double>::infinity();
    std::optional<int> label;
    int index = 0;
    for (const auto& o : oracle.records) {
      if (o.parity != rec.parity) continue;
      const double d = std::abs(o.energy - rec.energy);
      if (d < best) {
        best = d;
        label = o.label ? o.label : std::optional<int>(index);
      }
      ++index;
    }
    rec.residual = best;
    rec.label = label;
    rec.status = best <= tolerance ? Verification::verified : Verification::spurious;
  }
}

}  // namespace tqr
