#pragma once

// Continued-fraction detection of rational angle ratios. Internal.

#include <cmath>
#include <cstdint>

namespace pelastica::detail {

struct RationalAngle {
  bool found = false;
  std::int64_t num = 0;
  std::int64_t den = 1;
};

// Best rational approximation num/den to x (in lowest terms) with
// den <= max_den and |x - num/den| <= tol; continued-fraction convergents.
inline RationalAngle detect_rational(double x, std::int64_t max_den, double tol) {
  double v = x;
  std::int64_t h0 = 1, h1 = static_cast<std::int64_t>(std::floor(v));
  std::int64_t k0 = 0, k1 = 1;
  for (int it = 0; it < 64; ++it) {
    if (k1 > max_den) break;
    if (std::fabs(x - static_cast<double>(h1) / static_cast<double>(k1)) <= tol)
      return {true, h1, k1};
    const double frac = v - std::floor(v);
    if (frac < 1e-15) break;
    v = 1.0 / frac;
    const std::int64_t a = static_cast<std::int64_t>(std::floor(v));
    const std::int64_t h2 = a * h1 + h0;
    const std::int64_t k2 = a * k1 + k0;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
  }
  return {};
}

}  // namespace pelastica::detail
