#pragma once

#include "pelastica/pelliptic.hpp"

namespace pelastica {

// Ratio of the endpoint distance to the length of a pinned problem.
struct EndpointRatio {
  double r;
  explicit EndpointRatio(double r_);
};

// Exponent p_{m,n} selected by the crossing-angle equation
// phi_star(p) = n pi / m, for odd m >= 3 and 0 < n < m/2.
struct SpecialExponent {
  int m;
  int n;
  double p_value;
};

// Q_p(q) = 2 E1(q)/K1(q) - 1. Strictly decreasing from Q_p(0) = 1; the q -> 1
// limit is -1 for p <= 2 and -1/(p-1) for p > 2 (value attained at q = 1 when
// p > 2).
double Q(double p, double q, const Tolerance& tol = default_tolerance());

// Q_tilde_p(q) = K1(q) Q_p(q) = 2 E1(q) - K1(q); same roots as Q_p, strictly
// decreasing and strictly concave. At q = 1 (p > 2) equals -K1(1)/(p-1).
double Q_tilde(double p, double q, const Tolerance& tol = default_tolerance());

// Figure-eight modulus: the unique root of Q_p in (1/sqrt(2), 1).
double q_star(double p, const Tolerance& tol = default_tolerance());

// Half crossing angle of the half-fold figure-eight:
// phi_star(p) = pi - 2 asin(q_star(p)), strictly decreasing in p.
double phi_star(double p, const Tolerance& tol = default_tolerance());

// Modulus of a (p,r,n)-arc: the unique q in (0, q_star] with Q_p(q) = r.
double solve_arc_modulus(double p, EndpointRatio r,
                         const Tolerance& tol = default_tolerance());

// Modulus of a (p,r,n)-loop: the unique q in [q_star, 1) with Q_p(q) = -r.
// Throws NoSolutionError when r >= 1/(p-1).
double solve_loop_modulus(double p, EndpointRatio r,
                          const Tolerance& tol = default_tolerance());

// Solve phi_star(p) = n pi / m by monotone bracketing in p.
SpecialExponent p_mn(int m, int n, const Tolerance& tol = default_tolerance());

// Second derivative of Q_p at q = 0 in closed form: 4p / (2 - 3p).
double qpp_at_zero(double p);

}  // namespace pelastica
