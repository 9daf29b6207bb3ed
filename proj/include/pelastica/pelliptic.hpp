#pragma once

#include "pelastica/quadrature.hpp"

namespace pelastica {

// Parameter point of the p-elliptic special functions: exponent p in (1,inf)
// and modulus q in [0,1].
struct PQPair {
  double p;
  double q;

  PQPair(double p_, double q_);
};

// Incomplete p-elliptic integrals of the first kind.
//
//   F1(x,q) = int_0^x |cos t|^{1-2/p} / sqrt(1 - q^2 sin^2 t) dt
//   F2(x,q) = int_0^x (1 - q^2 sin^2 t)^{-1/p} dt
//
// At q = 1 both reduce to int_0^x |cos t|^{-2/p} dt, which is finite for all
// x only when p > 2; for p <= 2 the argument is restricted to |x| < pi/2.
double incomplete_F1(const PQPair& pq, double x,
                     const Tolerance& tol = default_tolerance());
double incomplete_F2(const PQPair& pq, double x,
                     const Tolerance& tol = default_tolerance());

// Incomplete p-elliptic integrals of the second kind.
//
//   E1(x,q) = int_0^x sqrt(1 - q^2 sin^2 t) |cos t|^{1-2/p} dt
//   E2(x,q) = int_0^x (1 - q^2 sin^2 t)^{1/exponent} dt
//
// E2 takes the exponent as an independent parameter: the orbitlike curve
// family evaluates it at p/(p-1) rather than p.
double incomplete_E1(const PQPair& pq, double x,
                     const Tolerance& tol = default_tolerance());
double incomplete_E2(double exponent, double q, double x,
                     const Tolerance& tol = default_tolerance());

// Complete integrals: the incomplete values at x = pi/2.
// complete_K1 at q = 1 is finite only for p > 2 (it equals Beta(1/2-1/p,1/2)/2)
// and throws DomainError for p <= 2.
double complete_K1(const PQPair& pq, const Tolerance& tol = default_tolerance());
double complete_K2(const PQPair& pq, const Tolerance& tol = default_tolerance());
double complete_E1(const PQPair& pq, const Tolerance& tol = default_tolerance());
double complete_E2(const PQPair& pq, const Tolerance& tol = default_tolerance());

// Closed-form q-derivatives of the complete integrals, valid for 0 < q < 1:
//   dK1/dq = ((2-2/p) E1 - (2-2/p-q^2) K1) / (q (1-q^2))
//   dE1/dq = (E1 - K1) / q
double dK1_dq(const PQPair& pq, const Tolerance& tol = default_tolerance());
double dE1_dq(const PQPair& pq, const Tolerance& tol = default_tolerance());

// Amplitude functions: inverses of incomplete_F1 / incomplete_F2 in x.
// Odd and strictly increasing. For q = 1 and p > 2 the amplitude saturates
// at +-pi/2 for |x| >= K_p(1), matching the flat extension of sech_p.
double am1(const PQPair& pq, double x, const Tolerance& tol = default_tolerance());
double am2(const PQPair& pq, double x, const Tolerance& tol = default_tolerance());

// p-elliptic sine, cosine and delta amplitude:
//   sn_p = sin(am1),  cn_p = |cos am1|^{2/p-1} cos am1,
//   dn_p = (1 - q^2 sin^2 am2)^{1/p}.
// cn_p takes the value 0 where cos am1 = 0 (continuous extension).
double sn_p(const PQPair& pq, double x, const Tolerance& tol = default_tolerance());
double cn_p(const PQPair& pq, double x, const Tolerance& tol = default_tolerance());
double dn_p(const PQPair& pq, double x, const Tolerance& tol = default_tolerance());

// p-hyperbolic functions. sech_p = cn_p(.,1) on (-K_p(1), K_p(1)) and 0
// outside (the support is the whole line when p <= 2);
// tanh_p x = int_0^x (sech_p t)^p dt.
double sech_p(double p, double x, const Tolerance& tol = default_tolerance());
double tanh_p(double p, double x, const Tolerance& tol = default_tolerance());

}  // namespace pelastica
