#include "pelastica/pelliptic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "pelastica/errors.hpp"

namespace pelastica {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = 1.57079632679489661923;

// |cos t| on a panel whose upper limit is exactly pi/2: there the distance
// db = pi/2 - t supplied by the quadrature is accurate and |cos t| = sin(db).
inline double abs_cos(double t, double db, bool upper_is_half_pi) {
  return (upper_is_half_pi && db < 0.7) ? std::sin(db) : std::fabs(std::cos(t));
}

// 1 - q^2 sin^2 t, written as (1-q^2) + q^2 cos^2 t to stay positive and
// accurate for q near 1.
inline double one_minus_q2sin2(double q, double c) {
  return (1.0 - q) * (1.0 + q) + q * q * c * c;
}

// Complete first/second-kind integrals carry an algebraic factor |cos t|^a =
// (sin d)^a at the upper limit pi/2 (d = pi/2 - t, a in (-1, 1)). Substituting
// d = v^beta with beta ~ 3/(1+a) and merging the powers of v analytically,
//   (sin d)^a dd = beta (sin(d)/d)^a v^{beta(1+a)-1} dv,
// leaves an exponent >= 2, so the double-exponential tail never has to
// resolve a near -1 power; this keeps full accuracy down to p near 1 (and
// p near 2 for the q = 1 form). `g` is the bounded remaining factor.
double top_substituted(double a, const std::function<double(double d)>& g,
                       const Tolerance& tol) {
  const int beta = std::max(1, static_cast<int>(std::ceil(3.0 / (1.0 + a))));
  const double T = std::pow(kHalfPi, 1.0 / beta);
  const double expo = beta * (1.0 + a) - 1.0;
  return tanh_sinh(
      [=](double v, double, double) {
        const double d = std::pow(v, beta);
        const double ratio = (d > 1e-8) ? std::sin(d) / d : 1.0;
        return beta * std::pow(v, expo) * std::pow(ratio, a) * g(d);
      },
      0.0, T, tol);
}

double integral_F1(double p, double q, double upper, bool upper_is_half_pi,
                   const Tolerance& tol) {
  const double a = 1.0 - 2.0 / p;
  if (upper_is_half_pi) {
    return top_substituted(
        a,
        [=](double d) {
          const double c = std::sin(d);
          return 1.0 / std::sqrt(one_minus_q2sin2(q, c));
        },
        tol);
  }
  return tanh_sinh(
      [=](double t, double, double db) {
        const double c = abs_cos(t, db, false);
        return std::pow(c, a) / std::sqrt(one_minus_q2sin2(q, c));
      },
      0.0, upper, tol);
}

double integral_F_q1(double p, double upper, bool upper_is_half_pi,
                     const Tolerance& tol) {
  const double a = -2.0 / p;
  if (upper_is_half_pi) {
    return top_substituted(a, [](double) { return 1.0; }, tol);
  }
  return tanh_sinh(
      [=](double t, double, double db) {
        return std::pow(abs_cos(t, db, false), a);
      },
      0.0, upper, tol);
}

double integral_F2(double p, double q, double upper, const Tolerance& tol) {
  return tanh_sinh(
      [=](double t, double, double) {
        const double c = std::cos(t);
        return std::pow(one_minus_q2sin2(q, c), -1.0 / p);
      },
      0.0, upper, tol);
}

double integral_E1(double p, double q, double upper, bool upper_is_half_pi,
                   const Tolerance& tol) {
  const double a = 1.0 - 2.0 / p;
  if (upper_is_half_pi) {
    return top_substituted(
        a,
        [=](double d) {
          const double c = std::sin(d);
          return std::sqrt(one_minus_q2sin2(q, c));
        },
        tol);
  }
  return tanh_sinh(
      [=](double t, double, double db) {
        const double c = abs_cos(t, db, false);
        return std::sqrt(one_minus_q2sin2(q, c)) * std::pow(c, a);
      },
      0.0, upper, tol);
}

double integral_E2(double e, double q, double upper, bool upper_is_half_pi,
                   const Tolerance& tol) {
  return tanh_sinh(
      [=](double t, double, double db) {
        const double c = abs_cos(t, db, upper_is_half_pi);
        return std::pow(one_minus_q2sin2(q, c), 1.0 / e);
      },
      0.0, upper, tol);
}

// Reduce x to x0 in [-pi/2, pi/2] with x = x0 + n*pi; returns n.
inline long reduce_half_period(double x, double& x0) {
  const long n = std::lround(x / kPi);
  x0 = x - n * kPi;
  return n;
}

void check_q1_range(double p, double x) {
  if (p <= 2.0 && std::fabs(x) >= kHalfPi)
    throw DomainError("incomplete integral at q = 1 requires |x| < pi/2 for p <= 2");
}

}  // namespace

PQPair::PQPair(double p_, double q_) : p(p_), q(q_) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw DomainError("PQPair: exponent p must lie in (1, inf)");
  if (!(q >= 0.0 && q <= 1.0))
    throw DomainError("PQPair: modulus q must lie in [0, 1]");
}

double incomplete_F1(const PQPair& pq, double x, const Tolerance& tol) {
  if (pq.q == 1.0) {
    if (pq.p <= 2.0) {
      check_q1_range(pq.p, x);
      const double v = integral_F_q1(pq.p, std::fabs(x), false, tol);
      return std::copysign(v, x);
    }
    double x0;
    const long n = reduce_half_period(x, x0);
    double v = integral_F_q1(pq.p, std::fabs(x0), std::fabs(x0) == kHalfPi, tol);
    v = std::copysign(v, x0);
    if (n != 0) v += 2.0 * n * complete_K1(pq, tol);
    return v;
  }
  double x0;
  const long n = reduce_half_period(x, x0);
  double v = integral_F1(pq.p, pq.q, std::fabs(x0), std::fabs(x0) == kHalfPi, tol);
  v = std::copysign(v, x0);
  if (n != 0) v += 2.0 * n * complete_K1(pq, tol);
  return v;
}

double incomplete_F2(const PQPair& pq, double x, const Tolerance& tol) {
  if (pq.q == 1.0) return incomplete_F1(pq, x, tol);
  double x0;
  const long n = reduce_half_period(x, x0);
  double v = integral_F2(pq.p, pq.q, std::fabs(x0), tol);
  v = std::copysign(v, x0);
  if (n != 0) v += 2.0 * n * complete_K2(pq, tol);
  return v;
}

double incomplete_E1(const PQPair& pq, double x, const Tolerance& tol) {
  double x0;
  const long n = reduce_half_period(x, x0);
  double v = integral_E1(pq.p, pq.q, std::fabs(x0), std::fabs(x0) == kHalfPi, tol);
  v = std::copysign(v, x0);
  if (n != 0) v += 2.0 * n * complete_E1(pq, tol);
  return v;
}

double incomplete_E2(double exponent, double q, double x, const Tolerance& tol) {
  if (!(exponent > 1.0)) throw DomainError("incomplete_E2: exponent must exceed 1");
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("incomplete_E2: modulus out of [0,1]");
  double x0;
  const long n = reduce_half_period(x, x0);
  double v = integral_E2(exponent, q, std::fabs(x0), std::fabs(x0) == kHalfPi, tol);
  v = std::copysign(v, x0);
  if (n != 0) v += 2.0 * n * integral_E2(exponent, q, kHalfPi, true, tol);
  return v;
}

double complete_K1(const PQPair& pq, const Tolerance& tol) {
  if (pq.q == 1.0) {
    if (pq.p <= 2.0)
      throw DomainError("complete_K1 diverges at q = 1 for p <= 2");
    return integral_F_q1(pq.p, kHalfPi, true, tol);
  }
  return integral_F1(pq.p, pq.q, kHalfPi, true, tol);
}

double complete_K2(const PQPair& pq, const Tolerance& tol) {
  if (pq.q == 1.0) return complete_K1(pq, tol);
  return integral_F2(pq.p, pq.q, kHalfPi, tol);
}

double complete_E1(const PQPair& pq, const Tolerance& tol) {
  return integral_E1(pq.p, pq.q, kHalfPi, true, tol);
}

double complete_E2(const PQPair& pq, const Tolerance& tol) {
  return integral_E2(pq.p, pq.q, kHalfPi, true, tol);
}

double dK1_dq(const PQPair& pq, const Tolerance& tol) {
  if (!(pq.q > 0.0 && pq.q < 1.0))
    throw DomainError("dK1_dq requires 0 < q < 1");
  const double E = complete_E1(pq, tol);
  const double K = complete_K1(pq, tol);
  const double c = 2.0 - 2.0 / pq.p;
  return (c * E - (c - pq.q * pq.q) * K) / (pq.q * (1.0 - pq.q * pq.q));
}

double dE1_dq(const PQPair& pq, const Tolerance& tol) {
  if (!(pq.q > 0.0 && pq.q < 1.0))
    throw DomainError("dE1_dq requires 0 < q < 1");
  return (complete_E1(pq, tol) - complete_K1(pq, tol)) / pq.q;
}

namespace {

// Solve F(theta) = target for theta in [0, pi/2], F strictly increasing with
// F' = integrand. `complete` is F(pi/2) (infinity when it diverges).
// Targets within rounding of `complete` snap to exactly pi/2.
double invert_amplitude(double target, double complete,
                        const std::function<double(double)>& F,
                        const std::function<double(double)>& deriv,
                        const Tolerance& tol) {
  if (target <= 0.0) return 0.0;
  if (std::isfinite(complete)) {
    if (target >= complete * (1.0 - 1e-14)) return kHalfPi;
  }
  double lo = 0.0, flo = 0.0;
  double hi = kHalfPi, fhi = complete;
  if (!std::isfinite(complete)) {
    // Grow the bracket toward pi/2 until it encloses the target.
    hi = kHalfPi * 0.5;
    fhi = F(hi);
    while (fhi < target) {
      lo = hi;
      flo = fhi;
      hi = kHalfPi - 0.5 * (kHalfPi - hi);
      if (kHalfPi - hi < 1e-15)
        throw ConvergenceError("amplitude inversion: bracket collapsed at pi/2");
      fhi = F(hi);
    }
  }
  double theta = lo + (hi - lo) * std::min(1.0, (target - flo) /
                                                    std::max(fhi - flo, 1e-300));
  if (!(theta > lo && theta < hi)) theta = 0.5 * (lo + hi);
  const double goal = std::max(tol.abs_tol * 10.0, 1e-13 * std::max(1.0, target));
  for (int it = 0; it < 80; ++it) {
    const double fv = F(theta);
    const double res = fv - target;
    if (std::fabs(res) <= goal) return theta;
    if (res > 0.0) {
      hi = theta;
      fhi = fv;
    } else {
      lo = theta;
      flo = fv;
    }
    const double d = deriv(theta);
    double next = theta - res / d;
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    if (hi - lo < 1e-15) return 0.5 * (lo + hi);
    theta = next;
  }
  throw ConvergenceError("amplitude inversion did not converge");
}

}  // namespace

double am1(const PQPair& pq, double x, const Tolerance& tol) {
  const double p = pq.p, q = pq.q;
  if (q == 1.0) {
    if (p > 2.0) {
      const double K = complete_K1(pq, tol);
      if (std::fabs(x) >= K) return std::copysign(kHalfPi, x);  // saturation
      const double th = invert_amplitude(
          std::fabs(x), K,
          [&](double t) { return integral_F_q1(p, t, false, tol); },
          [&](double t) { return std::pow(std::fabs(std::cos(t)), -2.0 / p); },
          tol);
      return std::copysign(th, x);
    }
    const double th = invert_amplitude(
        std::fabs(x), std::numeric_limits<double>::infinity(),
        [&](double t) { return integral_F_q1(p, t, false, tol); },
        [&](double t) { return std::pow(std::fabs(std::cos(t)), -2.0 / p); },
        tol);
    return std::copysign(th, x);
  }
  const double K = complete_K1(pq, tol);
  const long m = static_cast<long>(std::floor((x + K) / (2.0 * K)));
  const double x0 = x - 2.0 * m * K;  // in [-K, K)
  const double a = 1.0 - 2.0 / p;
  const double th0 = invert_amplitude(
      std::fabs(x0), K,
      [&](double t) { return integral_F1(p, q, t, false, tol); },
      [&](double t) {
        const double c = std::fabs(std::cos(t));
        return std::pow(c, a) / std::sqrt(one_minus_q2sin2(q, c));
      },
      tol);
  return std::copysign(th0, x0) + m * kPi;
}

double am2(const PQPair& pq, double x, const Tolerance& tol) {
  const double p = pq.p, q = pq.q;
  if (q == 1.0) return am1(pq, x, tol);
  const double K = complete_K2(pq, tol);
  const long m = static_cast<long>(std::floor((x + K) / (2.0 * K)));
  const double x0 = x - 2.0 * m * K;
  const double th0 = invert_amplitude(
      std::fabs(x0), K, [&](double t) { return integral_F2(p, q, t, tol); },
      [&](double t) {
        const double c = std::cos(t);
        return std::pow(one_minus_q2sin2(q, c), -1.0 / p);
      },
      tol);
  return std::copysign(th0, x0) + m * kPi;
}

double sn_p(const PQPair& pq, double x, const Tolerance& tol) {
  if (pq.q == 1.0) return std::sin(am1(pq, x, tol));
  const double K = complete_K1(pq, tol);
  const long m = static_cast<long>(std::floor((x + K) / (2.0 * K)));
  const double x0 = x - 2.0 * m * K;
  const double sn0 = std::sin(am1(pq, x0, tol));
  return (m % 2 == 0) ? sn0 : -sn0;
}

double cn_p(const PQPair& pq, double x, const Tolerance& tol) {
  const double e = 2.0 / pq.p;
  if (pq.q == 1.0) {
    if (pq.p > 2.0) {
      const double K = complete_K1(pq, tol);
      if (std::fabs(x) >= K) return 0.0;
    }
    const double c = std::cos(am1(pq, x, tol));
    return std::pow(std::fabs(c), e);  // cos(am1) >= 0 on the principal branch
  }
  const double K = complete_K1(pq, tol);
  const long m = static_cast<long>(std::floor((x + K) / (2.0 * K)));
  const double x0 = x - 2.0 * m * K;
  const double th0 = am1(pq, std::fabs(x0), tol);  // in [0, pi/2]
  const double d = kHalfPi - th0;
  const double cn0 = (d <= 0.0) ? 0.0 : std::pow(std::sin(d), e);
  return (m % 2 == 0) ? cn0 : -cn0;
}

double dn_p(const PQPair& pq, double x, const Tolerance& tol) {
  const double th = am2(pq, x, tol);
  const double s = std::sin(th);
  return std::pow(1.0 - pq.q * pq.q * s * s, 1.0 / pq.p);
}

double sech_p(double p, double x, const Tolerance& tol) {
  const PQPair pq(p, 1.0);
  if (p > 2.0) {
    const double K = complete_K1(pq, tol);
    if (std::fabs(x) >= K) return 0.0;
  }
  const double th = am1(pq, std::fabs(x), tol);
  const double d = kHalfPi - th;
  return (d <= 0.0) ? 0.0 : std::pow(std::sin(d), 2.0 / p);
}

double tanh_p(double p, double x, const Tolerance& tol) {
  const PQPair pq(p, 1.0);
  double t = x;
  if (p > 2.0) {
    const double K = complete_K1(pq, tol);
    t = std::clamp(x, -K, K);  // integrand vanishes outside the support
  }
  const double th = am1(pq, t, tol);
  return integral_E1(p, 1.0, std::fabs(th), std::fabs(th) == kHalfPi, tol) *
         (th < 0.0 ? -1.0 : 1.0);
}

}  // namespace pelastica
