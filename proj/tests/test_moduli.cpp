#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pelastica/errors.hpp"
#include "pelastica/moduli.hpp"

using namespace pelastica;

namespace {
constexpr double kPi = 3.14159265358979323846;
// q*(2), root of 2E(q) = K(q), frozen from an independent classical solver.
constexpr double kQStar2 = 0.90890855754854148;
}  // namespace

TEST_CASE("Q values and limits") {
  for (double p : {1.3, 2.0, 6.0})
    CHECK(Q(p, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  // q -> 1 limit for p > 2 (loose tolerance, evaluated just inside).
  CHECK(Q(4, 1.0 - 1e-8) == doctest::Approx(-1.0 / 3.0).epsilon(1e-3));
  CHECK(Q(4, 1.0) == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(Q(2, 1.0), DomainError);
  // Classical root check: Q vanishes at the classical q*(2).
  CHECK(Q(2, kQStar2) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("Q_tilde values, q = 1 limit, and concavity") {
  for (double p : {1.5, 3.0})
    CHECK(Q_tilde(p, 0.0) == doctest::Approx(complete_K1(PQPair(p, 0.0))).epsilon(1e-12));
  CHECK(Q_tilde(5, 1.0) ==
        doctest::Approx(-complete_K1(PQPair(5, 1.0)) / 4.0).epsilon(1e-12));
  CHECK_THROWS_AS(Q_tilde(1.7, 1.0), DomainError);
  // Second differences negative on a grid at p = 3.
  const double h = 0.05;
  for (double q = 0.1; q < 0.9; q += 0.1) {
    const double d2 = Q_tilde(3, q + h) - 2.0 * Q_tilde(3, q) + Q_tilde(3, q - h);
    CHECK(d2 < 0.0);
  }
}

TEST_CASE("q_star: location, residual, classical value, monotonicity") {
  CHECK(q_star(2) == doctest::Approx(kQStar2).epsilon(1e-9));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  double prev = 0.0;
  for (double p : {1.1, 1.5728, 2.0, 4.0, 20.0}) {
    const double qs = q_star(p);
    CHECK(qs > inv_sqrt2);
    CHECK(qs < 1.0);
    CHECK(std::fabs(Q_tilde(p, qs)) < 1e-10);
    CHECK(qs > prev);  // strictly increasing in p
    prev = qs;
  }
}

TEST_CASE("phi_star: value at p3, range, monotonicity") {
  // phi*(p3) = pi/3 for the frozen p3 (independent high-precision solve).
  CHECK(phi_star(1.5728812930892083) == doctest::Approx(kPi / 3.0).epsilon(1e-9));
  for (double p : {1.2, 2.0, 5.0, 40.0}) {
    const double phi = phi_star(p);
    CHECK(phi > 0.0);
    CHECK(phi < kPi / 2.0);
  }
  CHECK(phi_star(1.5) > phi_star(2.5));
}

TEST_CASE("solve_arc_modulus") {
  CHECK(solve_arc_modulus(3, EndpointRatio(0.0)) ==
        doctest::Approx(q_star(3)).epsilon(1e-12));
  // Frozen classical root of 2E/K - 1 = 0.5.
  CHECK(solve_arc_modulus(2, EndpointRatio(0.5)) ==
        doctest::Approx(0.68118266652504402).epsilon(1e-9));
  // Monotone: larger r gives smaller q at p = 4.
  CHECK(solve_arc_modulus(4, EndpointRatio(0.2)) >
        solve_arc_modulus(4, EndpointRatio(0.6)));
  // Residuals.
  for (double r : {0.1, 0.5, 0.9}) {
    const double q = solve_arc_modulus(2.5, EndpointRatio(r));
    CHECK(std::fabs(Q(2.5, q) - r) < 1e-9);
  }
}

TEST_CASE("solve_loop_modulus and its existence window") {
  CHECK(solve_loop_modulus(1.5, EndpointRatio(0.0)) ==
        doctest::Approx(q_star(1.5)).epsilon(1e-12));
  CHECK_THROWS_AS(solve_loop_modulus(4, EndpointRatio(0.4)), NoSolutionError);
  // Frozen classical root of 2E/K - 1 = -0.3.
  CHECK(solve_loop_modulus(2, EndpointRatio(0.3)) ==
        doctest::Approx(0.97929220164588306).epsilon(1e-9));
  for (double r : {0.05, 0.2}) {
    const double q = solve_loop_modulus(4, EndpointRatio(r));
    CHECK(std::fabs(Q(4, q) + r) < 1e-9);
  }
}

TEST_CASE("arc modulus <= q_star <= loop modulus where both exist") {
  for (double p : {1.6, 2.0, 3.0}) {
    const double window = (p > 2.0) ? 1.0 / (p - 1.0) : 1.0;
    for (double r : {0.05, 0.25}) {
      if (r >= window) continue;
      const double qa = solve_arc_modulus(p, EndpointRatio(r));
      const double ql = solve_loop_modulus(p, EndpointRatio(r));
      const double qs = q_star(p);
      CHECK(qa <= qs);
      CHECK(qs <= ql);
    }
  }
}

TEST_CASE("p_mn: p3 and friends") {
  const SpecialExponent p3 = p_mn(3, 1);
  CHECK(p3.p_value == doctest::Approx(1.5728).epsilon(5e-4));
  CHECK(p3.p_value == doctest::Approx(1.5728812930892083).epsilon(1e-7));
  CHECK(p_mn(5, 2).p_value < p_mn(5, 1).p_value);
  CHECK(phi_star(p_mn(7, 1).p_value) == doctest::Approx(kPi / 7.0).epsilon(1e-9));
  CHECK_THROWS_AS(p_mn(4, 1), DomainError);
  CHECK_THROWS_AS(p_mn(3, 2), DomainError);
  CHECK_THROWS_AS(p_mn(3, 0), DomainError);
}

TEST_CASE("qpp_at_zero closed form and finite-difference cross-check") {
  CHECK(qpp_at_zero(2) == doctest::Approx(-2.0));
  CHECK(qpp_at_zero(1.5) < qpp_at_zero(4.0));  // strictly increasing in p
  // 5-point second-difference stencil of Q_p at q = 0 (even in q).
  const double h = 1e-3;
  for (double p : {1.5, 2.0, 3.0}) {
    const double q0 = Q(p, 0.0), q1 = Q(p, h), q2 = Q(p, 2.0 * h);
    const double d2 = (-q2 + 16.0 * q1 - 15.0 * q0) / (6.0 * h * h);
    CHECK(d2 == doctest::Approx(qpp_at_zero(p)).epsilon(1e-3));
  }
}

TEST_CASE("layering: Q_p1 < Q_p2 pointwise for p1 < p2") {
  const double ps[] = {1.2, 1.5728, 2.0, 3.0, 8.0};
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (double q = 0.1; q < 0.95; q += 0.1)
        CHECK(Q(ps[i], q) < Q(ps[j], q));
}

TEST_CASE("EndpointRatio validates its range") {
  CHECK_THROWS_AS(EndpointRatio(-0.1), DomainError);
  CHECK_THROWS_AS(EndpointRatio(1.0), DomainError);
  CHECK_NOTHROW(EndpointRatio(0.0));
  CHECK_NOTHROW(EndpointRatio(0.999));
}
