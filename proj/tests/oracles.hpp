#pragma once

// Independent classical-elliptic and quadrature oracles for the test suite.
// These deliberately avoid the library's tanh-sinh + Newton implementation
// path: complete integrals use the arithmetic-geometric mean, Jacobi
// functions use the descending Landen transformation, and incomplete
// integrals use recursive adaptive Simpson quadrature.

#include <functional>

namespace oracle {

// Adaptive Simpson integration on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12);

// Complete elliptic integrals of modulus k (AGM).
double complete_K(double k);
double complete_E(double k);

// Classical incomplete integrals of modulus k (adaptive Simpson), for
// |phi| <= pi/2.
double incomplete_F(double phi, double k);
double incomplete_E(double phi, double k);

// Jacobi elliptic functions of modulus k (descending Landen).
struct Jacobi {
  double sn, cn, dn;
};
Jacobi sncndn(double u, double k);

// Jacobi amplitude for |u| <= K(k).
double amplitude(double u, double k);

}  // namespace oracle
