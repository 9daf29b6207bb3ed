#include "pelastica/moduli.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "pelastica/errors.hpp"

namespace pelastica {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = 1.57079632679489661923;
constexpr double kQCap = 1.0 - 1e-12;  // q -> 1 evaluation cap where K diverges
constexpr double kInvSqrt2 = 0.70710678118654752440;

// Safeguarded Newton on a strictly decreasing function g over [lo, hi].
// Terminates on |g| <= residual_goal; the bracket guarantees progress.
double solve_decreasing(const std::function<double(double)>& g,
                        const std::function<double(double)>& dg, double lo,
                        double hi, double residual_goal, const char* what) {
  double glo = g(lo);
  double ghi = g(hi);
  if (glo < 0.0 || ghi > 0.0) {
    if (std::fabs(glo) <= residual_goal) return lo;
    if (std::fabs(ghi) <= residual_goal) return hi;
    throw NoSolutionError(std::string(what) + ": root not bracketed");
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double gx = g(x);
    if (std::fabs(gx) <= residual_goal) return x;
    if (gx > 0.0)
      lo = x;
    else
      hi = x;
    double next = x;
    if (dg) {
      const double d = dg(x);
      next = x - gx / d;
    }
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    if (hi - lo < 1e-15) return 0.5 * (lo + hi);
    x = next;
  }
  throw ConvergenceError(std::string(what) + ": residual tolerance not reached");
}

double dQtilde_dq(double p, double q, const Tolerance& tol) {
  const PQPair pq(p, q);
  return 2.0 * dE1_dq(pq, tol) - dK1_dq(pq, tol);
}

}  // namespace

EndpointRatio::EndpointRatio(double r_) : r(r_) {
  if (!(r >= 0.0 && r < 1.0))
    throw DomainError("EndpointRatio: r must lie in [0, 1)");
}

double Q(double p, double q, const Tolerance& tol) {
  if (q == 1.0) {
    if (p <= 2.0) throw DomainError("Q_p(1) is a pole for p <= 2");
    return -1.0 / (p - 1.0);
  }
  const PQPair pq(p, q);
  return 2.0 * complete_E1(pq, tol) / complete_K1(pq, tol) - 1.0;
}

double Q_tilde(double p, double q, const Tolerance& tol) {
  if (q == 1.0) {
    if (p <= 2.0) throw DomainError("Q_tilde(1) diverges for p <= 2");
    const PQPair pq(p, 1.0);
    return -complete_K1(pq, tol) / (p - 1.0);
  }
  const PQPair pq(p, q);
  return 2.0 * complete_E1(pq, tol) - complete_K1(pq, tol);
}

double q_star(double p, const Tolerance& tol) {
  if (!(p > 1.0)) throw DomainError("q_star: p must exceed 1");
  // Root of Q_tilde, bracketed by 1/sqrt(2) < q* < 1.
  return solve_decreasing(
      [&](double q) { return Q_tilde(p, q, tol); },
      [&](double q) { return dQtilde_dq(p, q, tol); }, kInvSqrt2, kQCap, 1e-12,
      "q_star");
}

double phi_star(double p, const Tolerance& tol) {
  return kPi - 2.0 * std::asin(q_star(p, tol));
}

double solve_arc_modulus(double p, EndpointRatio r, const Tolerance& tol) {
  const double qs = q_star(p, tol);
  if (r.r == 0.0) return qs;
  // Q_p decreases from 1 at q = 0 to 0 at q*; solve Q_p(q) = r on (0, q*].
  return solve_decreasing(
      [&](double q) { return Q(p, q, tol) - r.r; },
      [&](double q) {
        const PQPair pq(p, q);
        const double K = complete_K1(pq, tol);
        const double E = complete_E1(pq, tol);
        return 2.0 * (dE1_dq(pq, tol) * K - E * dK1_dq(pq, tol)) / (K * K);
      },
      1e-9, qs, 1e-12, "solve_arc_modulus");
}

double solve_loop_modulus(double p, EndpointRatio r, const Tolerance& tol) {
  const double window = (p > 2.0) ? 1.0 / (p - 1.0) : 1.0;
  if (r.r >= window)
    throw NoSolutionError("solve_loop_modulus: no loop exists for r >= 1/(p-1)");
  const double qs = q_star(p, tol);
  if (r.r == 0.0) return qs;
  return solve_decreasing(
      [&](double q) { return Q(p, q, tol) + r.r; },
      [&](double q) {
        const PQPair pq(p, q);
        const double K = complete_K1(pq, tol);
        const double E = complete_E1(pq, tol);
        return 2.0 * (dE1_dq(pq, tol) * K - E * dK1_dq(pq, tol)) / (K * K);
      },
      qs, kQCap, 1e-12, "solve_loop_modulus");
}

SpecialExponent p_mn(int m, int n, const Tolerance& tol) {
  if (m < 3 || m % 2 == 0)
    throw DomainError("p_mn: m must be an odd integer >= 3");
  if (n < 1 || 2 * n >= m)
    throw DomainError("p_mn: n must satisfy 1 <= n < m/2");
  const double target = n * kPi / m;
  // phi_star is strictly decreasing in p from pi/2 to 0, so the target angle
  // in (0, pi/2) is bracketed a priori; the bracket ends are never evaluated.
  double lo = 1.0 + 1e-6, hi = 1e3;
  double flo = kHalfPi - target;
  double fhi = -target;
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double fx = phi_star(x, tol) - target;
    if (std::fabs(fx) <= 1e-10) return SpecialExponent{m, n, x};
    if (fx > 0.0) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    // Secant proposal, clipped to the bracket.
    double next = x - fx * (hi - lo) / (fhi - flo);
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    if (hi - lo < 1e-13 * x) return SpecialExponent{m, n, 0.5 * (lo + hi)};
    x = next;
  }
  throw ConvergenceError("p_mn: angle residual tolerance not reached");
}

double qpp_at_zero(double p) {
  if (!(p > 1.0)) throw DomainError("qpp_at_zero: p must exceed 1");
  return 4.0 * p / (2.0 - 3.0 * p);
}

}  // namespace pelastica
