#pragma once

#include <json.hpp>

#include "pelastica/curve.hpp"

namespace pelastica {

enum class EnergyMethod { closed_form, quadrature };

// Length, p-bending energy B_p = int |k|^p ds, and the scale-invariant
// normalized energy L^{p-1} B_p.
struct EnergyReport {
  double length = 0.0;
  double bending = 0.0;
  double normalized = 0.0;
  EnergyMethod method = EnergyMethod::quadrature;
  double p = 0.0;
};

nlohmann::json to_json(const EnergyReport& r);

// Composite quadrature of |k|^p over the sample grid.
EnergyReport bending_quadrature(const SampledCurve& curve, double p);

// b(q) = q^p ( E1(q)/q^2 + (1 - 1/q^2) K1(q) ) and its q-derivative
// (p-1) q^{p-1} K1 + (p-1)(1-2/p) q^{p-3} (E1 - K1); b is strictly
// increasing, with b(1) = E1(1) for p > 2.
double b_of_q(double p, double q, const Tolerance& tol = default_tolerance());
double db_dq(double p, double q, const Tolerance& tol = default_tolerance());

// int_0^{K1(q)} |cn_p(s,q)|^p ds = E1(q)/q^2 + (1 - 1/q^2) K1(q).
double int_cnp_pow_p(double p, double q, const Tolerance& tol = default_tolerance());

enum class WaveKind { arc, loop };

// Closed-form normalized energy of a (p,r,n)-arc or loop:
//   2^{2p} n^p K1(q)^{p-1} b(q)  with q from the corresponding modulus.
double normalized_energy_wave(double p, EndpointRatio r, int n, WaveKind kind,
                              const Tolerance& tol = default_tolerance());

// Closed-form normalized energy of a (p,r,n,sigma,L)-flat-core (independent
// of sigma and L): 2^{2p} n^p K1(1)^{p-1} E1(1) ((1-1/(p-1))/(1-r))^{p-1}.
double normalized_energy_flat(double p, EndpointRatio r, int n,
                              const Tolerance& tol = default_tolerance());

// Normalized energy of a half-fold figure-eight:
//   2^{3p-1} q*^{p-2} (2 q*^2 - 1) E1(q*)^p.
double varpi_star(double p, const Tolerance& tol = default_tolerance());

// int |k| ds.
double total_curvature(const SampledCurve& curve);

// Numeric first-variation test: evaluates the fixed-length criticality
// integral against sin(j pi s / L) test fields in each coordinate direction
// (vanishing at the endpoints), fits the multiplier lambda by least squares
// and returns the normalized residual over the basis.
struct FirstVariation {
  double lambda = 0.0;
  double residual = 0.0;
};

FirstVariation first_variation_residual(const SampledCurve& curve, double p,
                                        int n_test = 8);

}  // namespace pelastica
