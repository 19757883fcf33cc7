#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "tqrabi/model.hpp"

namespace tqr::testing {

// g = g1 + g2 with g1 : g2 = ratio : 1.
inline ModelParams family(double d1, double d2, double g, double ratio, double jx = 0, double jy = 0,
                          double jz = 0) {
  ModelParams p;
  p.delta1 = d1;
  p.delta2 = d2;
  p.g1 = g * ratio / (1.0 + ratio);
  p.g2 = g / (1.0 + ratio);
  p.jx = jx;
  p.jy = jy;
  p.jz = jz;
  return p;
}

inline ModelParams fig2() {
  ModelParams p;
  p.delta1 = 0.6;
  p.delta2 = 0.2;
  p.g1 = 0.24;
  p.g2 = 0.06;
  return p;
}
inline ModelParams fig3a(double g) { return family(0.6, 0.2, g, 4.0); }
inline ModelParams fig3b(double g) { return family(0.6, 0.2, g, 2.0); }
inline ModelParams fig3c(double g) { return family(0.5, 0.5, g, 1.0); }
inline ModelParams fig3d(double g) { return family(0.6, 0.4, g, 1.0); }
inline ModelParams fig4a(double g) { return family(0.6, 0.2, g, 4.0, 0.2, 0.0, 0.0); }
inline ModelParams fig4b(double g) { return family(0.5, 0.5, g, 1.0, 0.1, 0.2, 0.3); }
inline ModelParams fig4c(double g) { return family(0.1, 0.7, g, 1.0, 0.7, 0.1, 0.3); }
inline ModelParams fig4d(double g) { return family(0.6, 0.4, g, 1.0, 0.5, 0.5, 0.5); }

inline double nearest(const std::vector<double>& values, double e) {
  double best = INFINITY;
  for (double v : values) best = std::min(best, std::abs(v - e));
  return best;
}

}  // namespace tqr::testing
