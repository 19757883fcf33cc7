#include "tqrabi/fock.hpp"

#include <cmath>
#include <string>

#include "tqrabi/error.hpp"

namespace tqr {

const char* to_string(QubitPair q) noexcept {
  switch (q) {
    case QubitPair::ee: return "ee";
    case QubitPair::eg: return "eg";
    case QubitPair::ge: return "ge";
    case QubitPair::gg: return "gg";
  }
  return "?";
}

QubitPair parse_qubit_pair(std::string_view text) {
  if (text == "ee") return QubitPair::ee;
  if (text == "eg") return QubitPair::eg;
  if (text == "ge") return QubitPair::ge;
  if (text == "gg") return QubitPair::gg;
  fail(ErrorCode::invalid_argument, "unknown qubit pair '" + std::string(text) + "'");
}

std::vector<double> to_dense(const std::vector<Amplitude>& amps, int truncation) {
  std::vector<double> v(4 * static_cast<std::size_t>(truncation + 1), 0.0);
  for (const auto& a : amps) {
    if (a.n < 0 || a.n > truncation) {
      fail(ErrorCode::support_overflow, "amplitude at photon number " + std::to_string(a.n) +
                                            " exceeds truncation " + std::to_string(truncation));
    }
    v[static_cast<std::size_t>(basis_index(a.n, a.pair))] += a.value;
  }
  return v;
}

namespace {

// sigma_1i sigma_2i for i = x, y: flips both qubits.
//   xx: ee<->gg, eg<->ge with weight 1
//   yy: ee<->gg with weight -1, eg<->ge with weight +1
void add_exchange(const ModelParams& p, const double* in, double* out) {
  const double a = p.jx - p.jy;  // ee <-> gg
  const double b = p.jx + p.jy;  // eg <-> ge
  out[0] += a * in[3] + p.jz * in[0];
  out[3] += a * in[0] + p.jz * in[3];
  out[1] += b * in[2] - p.jz * in[1];
  out[2] += b * in[1] - p.jz * in[2];
}

}  // namespace

std::vector<double> apply_exchange(const ModelParams& params, const std::vector<double>& v) {
  if (v.size() % 4 != 0) fail(ErrorCode::invalid_argument, "vector length must be a multiple of 4");
  std::vector<double> out(v.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); i += 4) add_exchange(params, &v[i], &out[i]);
  return out;
}

std::vector<double> apply_hamiltonian(const ModelParams& p, int truncation, const std::vector<double>& v) {
  const std::size_t dim = 4 * static_cast<std::size_t>(truncation + 1);
  if (v.size() != dim) fail(ErrorCode::invalid_argument, "vector length does not match the truncation");
  std::vector<double> out(dim, 0.0);
  for (int n = 0; n <= truncation; ++n) {
    const double* in = &v[4 * static_cast<std::size_t>(n)];
    double* o = &out[4 * static_cast<std::size_t>(n)];
    for (int q = 0; q < 4; ++q) o[q] += (p.omega * n + p.delta1 * z1(q) + p.delta2 * z2(q)) * in[q];
    add_exchange(p, in, o);
    if (n < truncation) {
      // (a + a^+) couples n and n+1 with sqrt(n+1); s1x flips bit 2, s2x flips bit 1.
      const double r = std::sqrt(static_cast<double>(n + 1));
      const double* up = in + 4;
      double* oup = o + 4;
      for (int q = 0; q < 4; ++q) {
        o[q] += r * (p.g1 * up[q ^ 2] + p.g2 * up[q ^ 1]);
        oup[q] += r * (p.g1 * in[q ^ 2] + p.g2 * in[q ^ 1]);
      }
    }
  }
  return out;
}

}  // namespace tqr
