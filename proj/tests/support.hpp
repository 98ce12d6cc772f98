#pragma once

#include <complex>
#include <random>

#include "parabolic/model_field.hpp"
#include "parabolic/series.hpp"

namespace support {

using parabolic::Complex;
using parabolic::Series;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240611);
  return engine;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline Complex random_complex(double radius) {
  return std::polar(radius * std::sqrt(uniform(0.0, 1.0)), uniform(0.0, 2 * parabolic::pi));
}

// Unit series with |c0| in [0.5, 1.5] and |c_d| ≤ decay^d.
inline Series random_unit(int order, double decay) {
  Series s(order);
  s[0] = std::polar(uniform(0.5, 1.5), uniform(0.0, 2 * parabolic::pi));
  double r = 1.0;
  for (int d = 1; d <= order; ++d) {
    r *= decay;
    s[d] = random_complex(r);
  }
  return s;
}

inline double max_diff(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  double worst = 0.0;
  for (int d = 0; d <= n; ++d) worst = std::max(worst, std::abs(a[d] - b[d]));
  return worst;
}

}  // namespace support
