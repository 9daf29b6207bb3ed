#include "amplitude_map.hpp"

#include <algorithm>
#include <cmath>

#include "pelastica/errors.hpp"

namespace pelastica::detail {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = 1.57079632679489661923;
constexpr int kPanels = 600;
}  // namespace

double AmplitudeMap::fprime(double d) const {
  const double ac = (d < 0.7) ? std::sin(d) : std::cos(kHalfPi - d);
  const double om = (1.0 - q_) * (1.0 + q_) + q_ * q_ * ac * ac;
  if (kind_ == 1) return std::pow(ac, 1.0 - 2.0 / p_) / std::sqrt(om);
  return std::pow(om, -1.0 / p_);
}

double AmplitudeMap::companion_f(double d) const {
  const double ac = (d < 0.7) ? std::sin(d) : std::cos(kHalfPi - d);
  const double om = (1.0 - q_) * (1.0 + q_) + q_ * q_ * ac * ac;
  if (kind_ == 1) return std::sqrt(om) * std::pow(ac, 1.0 - 2.0 / p_);
  return std::pow(om, 1.0 / e2_);
}

double AmplitudeMap::panel_integral(double dlo, double dhi, bool companion) const {
  auto f = [this, companion, dlo](double x, double da, double) {
    // The only delicate region is d near 0; da = x - dlo is accurate there.
    const double d = (dlo == 0.0) ? da : x;
    return companion ? companion_f(d) : fprime(d);
  };
  // Panels whose width is not small against their distance from d = 0 see
  // the algebraic point too closely for a fixed Gauss rule.
  if ((dhi - dlo) > 0.05 * std::max(dlo, 1e-300))
    return tanh_sinh(f, dlo, dhi, tol_);
  return gauss_legendre_15(f, dlo, dhi);
}

AmplitudeMap::AmplitudeMap(double p, double q, int kind, double theta_lim,
                           const Tolerance& tol)
    : p_(p), q_(q), e2_(p / (p - 1.0)), kind_(kind), theta_lim_(theta_lim),
      tol_(tol) {
  if (!(theta_lim > 0.0 && theta_lim <= kHalfPi))
    throw DomainError("AmplitudeMap: theta_lim must lie in (0, pi/2]");
  d_min_ = (theta_lim == kHalfPi) ? 0.0 : kHalfPi - theta_lim;
  const int M = kPanels;
  d_.resize(M + 1);
  s_.assign(M + 1, 0.0);
  e_.assign(M + 1, 0.0);
  const double span = kHalfPi - d_min_;
  for (int j = 0; j <= M; ++j) {
    // d_j = d_min + span (1 - sin(pi j / 2M)), evaluated without cancellation.
    const double u = 0.5 * kPi * (1.0 - static_cast<double>(j) / M);
    const double sh = std::sin(0.5 * u);
    d_[j] = d_min_ + span * 2.0 * sh * sh;
  }
  d_[0] = kHalfPi;
  d_[M] = d_min_;
  for (int j = 0; j < M; ++j) {
    s_[j + 1] = s_[j] + panel_integral(d_[j + 1], d_[j], false);
    e_[j + 1] = e_[j] + panel_integral(d_[j + 1], d_[j], true);
  }
}

AmplitudeMap::Point AmplitudeMap::at_s(double s) const {
  const double total = s_total();
  if (s <= total * 1e-15) return {0.0, kHalfPi, 0.0};
  if (s >= total * (1.0 - 1e-14))
    return {theta_lim_, d_min_, companion_total()};

  // Locate the panel: s_[j] <= s < s_[j+1].
  const auto it = std::upper_bound(s_.begin(), s_.end(), s);
  std::size_t j = static_cast<std::size_t>(it - s_.begin()) - 1;
  if (j >= d_.size() - 1) j = d_.size() - 2;

  const double dhi = d_[j];      // lower theta edge
  const double dlo = d_[j + 1];  // upper theta edge
  // Solve s_[j] + int_{d}^{dhi} f = s for d in [dlo, dhi].
  const double target = s - s_[j];
  double lo = dlo, hi = dhi;
  double d = dhi - (dhi - dlo) * std::min(1.0, target / (s_[j + 1] - s_[j]));
  if (!(d > lo && d < hi)) d = 0.5 * (lo + hi);
  const double goal = 1e-13 * std::max(1.0, total);
  double val = 0.0;
  for (int it2 = 0; it2 < 60; ++it2) {
    val = panel_integral(d, dhi, false) - target;
    if (std::fabs(val) <= goal) break;
    if (val > 0.0)
      lo = d;  // too far along the panel (d too small)
    else
      hi = d;
    double next = d + val / fprime(d);  // ds/dd = -f
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    if (hi - lo < 1e-16 * kHalfPi) break;
    d = next;
  }
  const double companion = e_[j] + panel_integral(d, dhi, true);
  return {kHalfPi - d, d, companion};
}

}  // namespace pelastica::detail
