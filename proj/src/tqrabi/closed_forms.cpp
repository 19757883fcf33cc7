#include "tqrabi/closed_forms.hpp"

#include <algorithm>
#include <cmath>

#include "tqrabi/error.hpp"

namespace tqr::closed_form {

namespace {

struct Reduced {
  double d1, d2, g, jx, jy, jz, w;
};

Reduced reduce(const ModelParams& p) {
  p.validate();
  const double w = p.omega;
  return {p.delta1 / w, p.delta2 / w, p.g() / w, p.jx / w, p.jy / w, p.jz / w, w};
}

ExceptionalState assemble(double energy, Parity parity, int n_index, std::vector<Amplitude> amps) {
  double top = 0.0;
  double norm = 0.0;
  for (const auto& a : amps) {
    if (a.n == n_index) top = std::max(top, std::abs(a.value));
    norm += a.value * a.value;
  }
  norm = std::sqrt(norm);
  if (!(norm > 0.0) || !std::isfinite(norm)) fail(ErrorCode::invalid_argument, "closed form is not normalizable");
  ExceptionalState st;
  st.n_index = n_index;
  st.energy = energy;
  st.parity = parity;
  st.norm_constant = top > 0.0 ? norm / top : 0.0;
  for (auto& a : amps) {
    if (a.value == 0.0) continue;
    a.value /= norm;
    st.coeffs.push_back(a);
  }
  std::sort(st.coeffs.begin(), st.coeffs.end(), [](const Amplitude& x, const Amplitude& y) {
    return x.n != y.n ? x.n < y.n : static_cast<int>(x.pair) < static_cast<int>(y.pair);
  });
  return st;
}

void require_coupling(const Reduced& r) {
  if (!(r.g > 0.0)) fail(ErrorCode::requires_valid_couplings, "closed form needs g > 0");
}

}  // namespace

ExceptionalState dark(const ModelParams& params, int n_index) {
  if (n_index < 0) fail(ErrorCode::invalid_argument, "dark state needs N >= 0");
  const Reduced r = reduce(params);
  const Parity parity = (n_index % 2 == 0) ? Parity::minus : Parity::plus;
  return assemble((n_index - r.jx - r.jy - r.jz) * r.w, parity, n_index,
                  {{n_index, QubitPair::eg, -1.0}, {n_index, QubitPair::ge, 1.0}});
}

ExceptionalState psi_e(const ModelParams& params) {
  const Reduced r = reduce(params);
  require_coupling(r);
  return assemble(r.w, Parity::plus, 1,
                  {{0, QubitPair::ee, 2.0 * (r.d1 - r.d2) / r.g}, {1, QubitPair::eg, -1.0}, {1, QubitPair::ge, 1.0}});
}

ExceptionalState psi_g1(const ModelParams& params) {
  const Reduced r = reduce(params);
  require_coupling(r);
  return assemble(r.w, Parity::minus, 1,
                  {{0, QubitPair::eg, 2.0 * (r.d1 + r.d2) / r.g}, {1, QubitPair::ee, -1.0}, {1, QubitPair::gg, 1.0}});
}

ExceptionalState psi_g2(const ModelParams& params) {
  const Reduced r = reduce(params);
  require_coupling(r);
  return assemble(r.w, Parity::minus, 1,
                  {{0, QubitPair::ge, 2.0 * (r.d1 + r.d2) / r.g}, {1, QubitPair::ee, -1.0}, {1, QubitPair::gg, 1.0}});
}

ExceptionalState psi_e1(const ModelParams& params) {
  const Reduced r = reduce(params);
  require_coupling(r);
  if (r.d1 == r.d2) fail(ErrorCode::invalid_argument, "psi_e1 needs delta1 != delta2");
  const double a = 1.0 - 2.0 * r.jy - 2.0 * r.jz;
  const double s = r.d1 + r.d2;
  const double c = a * r.g / (r.d1 - r.d2);
  return assemble((1.0 - r.jx - r.jy - r.jz) * r.w, Parity::plus, 1,
                  {{0, QubitPair::ee, a + s}, {0, QubitPair::gg, a - s}, {1, QubitPair::eg, -c}, {1, QubitPair::ge, c}});
}

ExceptionalState psi_e1_odd(const ModelParams& params) {
  ModelParams q = params;
  q.delta1 = -q.delta1;
  q.jy = -q.jy;
  q.jz = -q.jz;
  ExceptionalState st = psi_e1(q);
  // sigma_1x: e <-> g on the first qubit
  for (auto& a : st.coeffs) a.pair = static_cast<QubitPair>(static_cast<int>(a.pair) ^ 2);
  std::sort(st.coeffs.begin(), st.coeffs.end(), [](const Amplitude& x, const Amplitude& y) {
    return x.n != y.n ? x.n < y.n : static_cast<int>(x.pair) < static_cast<int>(y.pair);
  });
  st.parity = Parity::minus;
  return st;
}

ExceptionalState psi_e3(const ModelParams& params) {
  const Reduced r = reduce(params);
  require_coupling(r);
  if (r.d1 == r.d2) fail(ErrorCode::invalid_argument, "psi_e3 needs delta1 != delta2");
  const double a = 1.0 - 2.0 * r.jy - 2.0 * r.jz;
  if (a == 0.0) fail(ErrorCode::invalid_argument, "psi_e3 needs 2Jy + 2Jz != w");
  const double b = 3.0 - 2.0 * r.jy - 2.0 * r.jz;
  const double s = r.d1 + r.d2;
  const double c = -b * std::sqrt(6.0) * r.g / (2.0 * (r.d1 - r.d2));
  return assemble((3.0 - r.jx - r.jy - r.jz) * r.w, Parity::plus, 3,
                  {{0, QubitPair::ee, b + s},
                   {0, QubitPair::gg, b - s},
                   {2, QubitPair::ee, -b * (a + s) / (std::sqrt(2.0) * a)},
                   {2, QubitPair::gg, -b * (a - s) / (std::sqrt(2.0) * a)},
                   {3, QubitPair::eg, -c},
                   {3, QubitPair::ge, c}});
}

}  // namespace tqr::closed_form
