#pragma once

// Internal batched inversion of the p-elliptic arclength maps used by the
// curve samplers. Not part of the public API.

#include <vector>

#include "pelastica/quadrature.hpp"

namespace pelastica::detail {

// Cumulative table of s(theta) = F_{kind,p}(theta, q) together with a
// companion second-kind cumulative, on theta in [0, theta_lim].
//
// The table works in the variable d = pi/2 - theta so that integrands with
// algebraic behavior at theta = pi/2 can be evaluated through sin(d) without
// cancellation; this matters both for q = 1 and for sampling close to the
// curvature zeros of wavelike curves.
class AmplitudeMap {
public:
  // kind 1: dF1 = |cos t|^{1-2/p} / sqrt(1 - q^2 sin^2 t), companion E1.
  // kind 2: dF2 = (1 - q^2 sin^2 t)^{-1/p}, companion E2 at exponent p/(p-1).
  AmplitudeMap(double p, double q, int kind, double theta_lim,
               const Tolerance& tol);

  double theta_lim() const { return theta_lim_; }
  double s_total() const { return s_.back(); }
  double companion_total() const { return e_.back(); }

  struct Point {
    double theta;      // amplitude in [0, theta_lim]
    double dist;       // pi/2 - theta, accurate near the top
    double companion;  // cumulative companion integral at theta
  };

  // Invert the arclength map at s in [0, s_total]; values within rounding of
  // the endpoints snap exactly.
  Point at_s(double s) const;

private:
  double fprime(double d) const;     // integrand as a function of d
  double companion_f(double d) const;
  double panel_integral(double dlo, double dhi, bool companion) const;

  double p_, q_, e2_;
  int kind_;
  double theta_lim_, d_min_;
  Tolerance tol_;
  std::vector<double> d_;  // decreasing: d_[0] = pi/2 ... d_[M] = d_min
  std::vector<double> s_;  // increasing cumulative arclength
  std::vector<double> e_;  // increasing cumulative companion
};

}  // namespace pelastica::detail
