#pragma once

#include <functional>

namespace pelastica {

struct Tolerance {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_subdivisions = 60;
};

// Library-wide default tolerance. The environment variable PELASTICA_TOL,
// when set to a positive real, overrides abs_tol and rel_tol.
const Tolerance& default_tolerance();

// Integrand callback. `dist_a` and `dist_b` are the distances from x to the
// lower and upper limits of integration, computed without cancellation, so
// integrands with endpoint singularities can evaluate |b - x| accurately
// even when x is within a few ulp of b.
using Integrand = std::function<double(double x, double dist_a, double dist_b)>;

// Tanh-sinh (double-exponential) quadrature of f over the finite interval
// [a, b]. Handles integrable algebraic endpoint singularities. Refines the
// node spacing until the requested tolerance is met; throws ConvergenceError
// when the refinement limit is exceeded or the integrand is not finite.
double tanh_sinh(const Integrand& f, double a, double b,
                 const Tolerance& tol = default_tolerance());

// Convenience overload for integrands that do not need endpoint distances.
double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 const Tolerance& tol = default_tolerance());

// Fixed-order Gauss-Legendre rule on [a, b]; no error control.
// Used for cumulative tables over panels known to be smooth.
double gauss_legendre_15(const Integrand& f, double a, double b);

// Fourth-order integration of sampled data: trapezoid with an end-corrected
// derivative term (Hermite/Euler-Maclaurin correction). The abscissae must
// be strictly increasing but need not be uniform.
double integrate_samples(const double* s, const double* f, std::size_t n);

}  // namespace pelastica
