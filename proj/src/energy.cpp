#include "pelastica/energy.hpp"

#include <cmath>
#include <vector>

#include "pelastica/errors.hpp"

namespace pelastica {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_curve_arg(const SampledCurve& c) {
  if (c.size() < 2) throw DomainError("energy: curve has fewer than 2 samples");
  if (!(c.length() > 0.0)) throw DomainError("energy: degenerate curve of length 0");
}

}  // namespace

nlohmann::json to_json(const EnergyReport& r) {
  nlohmann::json j;
  j["length"] = r.length;
  j["bending"] = r.bending;
  j["normalized"] = r.normalized;
  j["method"] = (r.method == EnergyMethod::closed_form) ? "closed_form" : "quadrature";
  j["p"] = r.p;
  return j;
}

EnergyReport bending_quadrature(const SampledCurve& curve, double p) {
  check_curve_arg(curve);
  std::vector<double> f(curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i)
    f[i] = std::pow(std::fabs(curve.k[i]), p);
  EnergyReport r;
  r.p = p;
  r.method = EnergyMethod::quadrature;
  r.length = curve.length();
  r.bending = integrate_samples(curve.s.data(), f.data(), curve.size());
  r.normalized = std::pow(r.length, p - 1.0) * r.bending;
  return r;
}

double int_cnp_pow_p(double p, double q, const Tolerance& tol) {
  if (!(q > 0.0 && q <= 1.0))
    throw DomainError("int_cnp_pow_p requires 0 < q <= 1");
  if (q == 1.0) {
    if (p <= 2.0) throw DomainError("int_cnp_pow_p at q = 1 requires p > 2");
    return complete_E1(PQPair(p, 1.0), tol);
  }
  const PQPair pq(p, q);
  const double E = complete_E1(pq, tol);
  const double K = complete_K1(pq, tol);
  return E / (q * q) + (1.0 - 1.0 / (q * q)) * K;
}

double b_of_q(double p, double q, const Tolerance& tol) {
  if (!(q > 0.0 && q <= 1.0)) throw DomainError("b_of_q requires 0 < q <= 1");
  if (q == 1.0) {
    if (p <= 2.0) throw DomainError("b_of_q at q = 1 requires p > 2");
    return complete_E1(PQPair(p, 1.0), tol);
  }
  return std::pow(q, p) * int_cnp_pow_p(p, q, tol);
}

double db_dq(double p, double q, const Tolerance& tol) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("db_dq requires 0 < q < 1");
  const PQPair pq(p, q);
  const double E = complete_E1(pq, tol);
  const double K = complete_K1(pq, tol);
  return (p - 1.0) * std::pow(q, p - 1.0) * K +
         (p - 1.0) * (1.0 - 2.0 / p) * std::pow(q, p - 3.0) * (E - K);
}

double normalized_energy_wave(double p, EndpointRatio r, int n, WaveKind kind,
                              const Tolerance& tol) {
  if (n < 1) throw DomainError("normalized_energy_wave: n must be >= 1");
  const double q = (kind == WaveKind::arc) ? solve_arc_modulus(p, r, tol)
                                           : solve_loop_modulus(p, r, tol);
  const double K = complete_K1(PQPair(p, q), tol);
  return std::pow(2.0, 2.0 * p) * std::pow(n, p) * std::pow(K, p - 1.0) *
         b_of_q(p, q, tol);
}

double normalized_energy_flat(double p, EndpointRatio r, int n,
                              const Tolerance& tol) {
  if (n < 1) throw DomainError("normalized_energy_flat: n must be >= 1");
  if (!(p > 2.0)) throw DomainError("normalized_energy_flat requires p > 2");
  if (r.r < 1.0 / (p - 1.0) - 1e-12)
    throw DomainError("normalized_energy_flat requires r >= 1/(p-1)");
  const PQPair pq(p, 1.0);
  const double K = complete_K1(pq, tol);
  const double E = complete_E1(pq, tol);
  const double factor = (1.0 - 1.0 / (p - 1.0)) / (1.0 - r.r);
  return std::pow(2.0, 2.0 * p) * std::pow(n, p) * std::pow(K, p - 1.0) * E *
         std::pow(factor, p - 1.0);
}

double varpi_star(double p, const Tolerance& tol) {
  const double qs = q_star(p, tol);
  const double E = complete_E1(PQPair(p, qs), tol);
  return std::pow(2.0, 3.0 * p - 1.0) * std::pow(qs, p - 2.0) *
         (2.0 * qs * qs - 1.0) * std::pow(E, p);
}

double total_curvature(const SampledCurve& curve) {
  check_curve_arg(curve);
  std::vector<double> f(curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) f[i] = std::fabs(curve.k[i]);
  return integrate_samples(curve.s.data(), f.data(), curve.size());
}

FirstVariation first_variation_residual(const SampledCurve& curve, double p,
                                        int n_test) {
  check_curve_arg(curve);
  if (curve.size() < 8)
    throw DomainError("first_variation_residual: curve too coarse for the test basis");
  if (n_test < 1) throw DomainError("first_variation_residual: n_test must be >= 1");

  const std::size_t N = curve.size();
  const double L = curve.length();
  const double s0 = curve.s.front();

  // gamma' = (cos theta, sin theta), gamma'' = k (-sin theta, cos theta).
  // Test fields eta_{j,d}(s) = sin(j pi (s-s0)/L) e_d vanish at the endpoints.
  // The criticality integral splits as A(eta) + lambda B(eta) with
  //   A = int ( (1-2p) |k|^p (gamma', eta') + p |k|^{p-2} (gamma'', eta'') )
  //   B = int ( gamma', eta' ).
  const int n_fields = 2 * n_test;
  std::vector<double> A(n_fields, 0.0), B(n_fields, 0.0);
  std::vector<double> integrand(N);

  for (int j = 1; j <= n_test; ++j) {
    const double w = j * kPi / L;
    for (int d = 0; d < 2; ++d) {
      const int idx = (j - 1) * 2 + d;
      for (std::size_t i = 0; i < N; ++i) {
        const double u = w * (curve.s[i] - s0);
        const double eta1 = w * std::cos(u);       // eta'
        const double eta2 = -w * w * std::sin(u);  // eta''
        const double ct = std::cos(curve.theta[i]);
        const double st = std::sin(curve.theta[i]);
        const double k = curve.k[i];
        const double t_dot_eta1 = (d == 0 ? ct : st) * eta1;
        const double n_dot_eta2 = (d == 0 ? -st : ct) * eta2;
        const double kp = std::pow(std::fabs(k), p);
        const double kp2k = std::copysign(std::pow(std::fabs(k), p - 1.0), k);
        integrand[i] = (1.0 - 2.0 * p) * kp * t_dot_eta1 + p * kp2k * n_dot_eta2;
      }
      A[idx] = integrate_samples(curve.s.data(), integrand.data(), N);
      for (std::size_t i = 0; i < N; ++i) {
        const double u = w * (curve.s[i] - s0);
        const double eta1 = w * std::cos(u);
        integrand[i] = (d == 0 ? std::cos(curve.theta[i]) : std::sin(curve.theta[i])) * eta1;
      }
      B[idx] = integrate_samples(curve.s.data(), integrand.data(), N);
    }
  }

  double ab = 0.0, bb = 0.0, aa = 0.0;
  for (int i = 0; i < n_fields; ++i) {
    ab += A[i] * B[i];
    bb += B[i] * B[i];
    aa += A[i] * A[i];
  }
  FirstVariation out;
  out.lambda = (bb > 1e-30 * std::max(1.0, aa)) ? -ab / bb : 0.0;
  double rr = 0.0, lb = 0.0;
  for (int i = 0; i < n_fields; ++i) {
    const double res = A[i] + out.lambda * B[i];
    rr += res * res;
    lb += out.lambda * B[i] * out.lambda * B[i];
  }
  const double denom = std::sqrt(aa) + std::sqrt(lb);
  out.residual = (denom > 0.0) ? std::sqrt(rr) / denom : 0.0;
  return out;
}

}  // namespace pelastica
