// spectrum.hpp: Spectrum records shared by the analytic solver and the oracle.

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tqrabi/model.hpp"

namespace tqr {

enum class Method { gfunction, exceptional, oracle };
const char* to_string(Method m) noexcept;
Method parse_method(std::string_view text);

enum class Verification { unverified, verified, spurious };
const char* to_string(Verification v) noexcept;

struct SpectrumRecord {
  double energy{0.0};
  Parity parity{Parity::plus};
  Method method{Method::gfunction};
  // Oracle distance once verified; otherwise |G| at the root (gfunction),
  // |condition| (exceptional) or the truncation drift (oracle).
  double residual{0.0};
  std::optional<int> label;  // level index within its parity sector
  Verification status{Verification::unverified};
};

struct SpectrumResult {
  std::vector<SpectrumRecord> records;

  void sort();
  void append(const SpectrumResult& other);
  std::vector<double> energies(Parity parity) const;
  std::size_t count(Parity parity) const;
};

/// Matches every non-oracle record to the nearest oracle eigenvalue of the same
/// parity. Residual becomes the distance; records farther than `tolerance` are
/// flagged spurious rather than dropped.
void verify_against(SpectrumResult& analytic, const SpectrumResult& oracle, double tolerance = 1e-6);

}  // namespace tqr
