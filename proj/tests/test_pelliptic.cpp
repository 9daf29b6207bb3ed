#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pelastica/errors.hpp"
#include "pelastica/pelliptic.hpp"

using namespace pelastica;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = 1.57079632679489661923;
}  // namespace

TEST_CASE("PQPair validates its invariants") {
  CHECK_THROWS_AS(PQPair(1.0, 0.5), DomainError);
  CHECK_THROWS_AS(PQPair(0.5, 0.5), DomainError);
  CHECK_THROWS_AS(PQPair(2.0, -0.1), DomainError);
  CHECK_THROWS_AS(PQPair(2.0, 1.1), DomainError);
  CHECK_NOTHROW(PQPair(1.0001, 1.0));
}

TEST_CASE("incomplete_F1: classical values and quasiperiodicity") {
  CHECK(incomplete_F1(PQPair(2, 0), kHalfPi) == doctest::Approx(kHalfPi).epsilon(1e-13));
  // p = 2 complete value against the classical K(0.5).
  CHECK(incomplete_F1(PQPair(2, 0.5), kHalfPi) ==
        doctest::Approx(1.6857503548125960).epsilon(1e-12));
  // F(x + pi) = F(x) + 2K with x = 0, n = 1.
  const PQPair pq(3, 0.3);
  CHECK(incomplete_F1(pq, kPi) ==
        doctest::Approx(2.0 * incomplete_F1(pq, kHalfPi)).epsilon(1e-12));
  // Odd in x.
  CHECK(incomplete_F1(pq, -0.8) == doctest::Approx(-incomplete_F1(pq, 0.8)));
}

TEST_CASE("incomplete_F1 at q = 1 restricts the domain for p <= 2") {
  CHECK_THROWS_AS(incomplete_F1(PQPair(2, 1), 1.6), DomainError);
  CHECK_THROWS_AS(incomplete_F1(PQPair(1.5, 1), -kHalfPi), DomainError);
  CHECK(incomplete_F1(PQPair(2, 1), 1.0) > 0.0);
  // p > 2: defined for all x through quasiperiodicity.
  const double K = complete_K1(PQPair(3, 1));
  CHECK(incomplete_F1(PQPair(3, 1), kPi) == doctest::Approx(2.0 * K).epsilon(1e-12));
}

TEST_CASE("incomplete_F2 examples") {
  // Integrands coincide at p = 2.
  for (double xq : {0.3, 0.7}) {
    CHECK(incomplete_F2(PQPair(2, xq), 1.1) ==
          doctest::Approx(incomplete_F1(PQPair(2, xq), 1.1)).epsilon(1e-12));
  }
  CHECK(incomplete_F2(PQPair(4, 0), 1.0) == doctest::Approx(1.0).epsilon(1e-13));
  // Frozen from an independent high-precision quadrature.
  CHECK(incomplete_F2(PQPair(3, 0.9), kHalfPi) ==
        doctest::Approx(1.9952543871186648).epsilon(1e-12));
}

TEST_CASE("incomplete_E1 examples") {
  for (double p : {1.2, 2.0, 7.0}) {
    CHECK(incomplete_E1(PQPair(p, 0), kHalfPi) ==
          doctest::Approx(complete_K1(PQPair(p, 0))).epsilon(1e-12));
  }
  CHECK(incomplete_E1(PQPair(2, 0.7), kHalfPi) ==
        doctest::Approx(1.3556611355719555).epsilon(1e-12));
  CHECK(incomplete_E1(PQPair(5, 1), kHalfPi) ==
        doctest::Approx(complete_E1(PQPair(5, 1))).epsilon(1e-13));
}

TEST_CASE("incomplete_E2 examples") {
  CHECK(incomplete_E2(2, 0, 2.0) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(incomplete_E2(2, 0.5, kHalfPi) ==
        doctest::Approx(1.4674622093394272).epsilon(1e-12));
  // int_0^{pi/2} sqrt(cos) dtheta, frozen from independent quadrature.
  CHECK(incomplete_E2(4, 1, kHalfPi) ==
        doctest::Approx(1.1981402347355922).epsilon(1e-12));
  CHECK_THROWS_AS(incomplete_E2(1.0, 0.5, 1.0), DomainError);
}

TEST_CASE("complete integrals") {
  CHECK(complete_K1(PQPair(2, 0)) == doctest::Approx(kHalfPi).epsilon(1e-14));
  // K_{1,p}(1) = Beta(1/2 - 1/p, 1/2) / 2, via the C++17 std::beta as an
  // independent implementation.
  CHECK(complete_K1(PQPair(4, 1)) ==
        doctest::Approx(0.5 * std::beta(0.25, 0.5)).epsilon(1e-12));
  CHECK(complete_K1(PQPair(4, 1)) == doctest::Approx(2.6220575542921198).epsilon(1e-12));
  CHECK(complete_K1(PQPair(3, 1)) ==
        doctest::Approx(0.5 * std::beta(0.5 - 1.0 / 3.0, 0.5)).epsilon(1e-12));
  for (double p : {1.2, 2.0, 7.0}) {
    CHECK(complete_E1(PQPair(p, 0)) ==
          doctest::Approx(complete_K1(PQPair(p, 0))).epsilon(1e-13));
  }
  CHECK_THROWS_AS(complete_K1(PQPair(2, 1)), DomainError);
  CHECK_THROWS_AS(complete_K1(PQPair(1.5, 1)), DomainError);
  CHECK_THROWS_AS(complete_K2(PQPair(2, 1)), DomainError);
  CHECK(complete_K2(PQPair(4, 1)) == doctest::Approx(complete_K1(PQPair(4, 1))));
}

TEST_CASE("derivative formulas match central finite differences") {
  const double h = 1e-5;
  for (double p : {1.3, 2.0, 3.0, 8.0}) {
    for (double q : {0.05, 0.5, 0.95}) {
      const double dK = dK1_dq(PQPair(p, q));
      const double dE = dE1_dq(PQPair(p, q));
      const double dK_fd = (complete_K1(PQPair(p, q + h)) -
                            complete_K1(PQPair(p, q - h))) /
                           (2.0 * h);
      const double dE_fd = (complete_E1(PQPair(p, q + h)) -
                            complete_E1(PQPair(p, q - h))) /
                           (2.0 * h);
      CHECK(dK == doctest::Approx(dK_fd).epsilon(1e-6));
      CHECK(dE == doctest::Approx(dE_fd).epsilon(1e-6));
    }
  }
  CHECK_THROWS_AS(dK1_dq(PQPair(2, 0)), DomainError);
  CHECK_THROWS_AS(dE1_dq(PQPair(2, 1)), DomainError);
}

TEST_CASE("derivative signs and the q -> 0 limit") {
  // dK1/dq -> 0 as q -> 0 (the integrand derivative vanishes at q = 0).
  CHECK(std::fabs(dK1_dq(PQPair(3, 1e-6))) < 1e-4);
  for (double p : {1.5, 2.0, 3.0, 10.0}) {
    for (double q = 0.1; q < 0.95; q += 0.1) {
      CHECK(dK1_dq(PQPair(p, q)) > 0.0);
      CHECK(dE1_dq(PQPair(p, q)) < 0.0);
    }
  }
}

TEST_CASE("monotonicity of the complete integrals in q") {
  for (double p : {1.4, 2.0, 5.0}) {
    double prevK = complete_K1(PQPair(p, 0.0));
    double prevE = complete_E1(PQPair(p, 0.0));
    for (double q = 0.1; q < 1.0; q += 0.1) {
      const double K = complete_K1(PQPair(p, q));
      const double E = complete_E1(PQPair(p, q));
      CHECK(K > prevK);
      CHECK(E < prevE);
      prevK = K;
      prevE = E;
    }
  }
}

TEST_CASE("amplitudes invert the first-kind integrals") {
  const PQPair pq(3, 0.6);
  CHECK(am1(pq, complete_K1(pq)) == doctest::Approx(kHalfPi).epsilon(1e-12));
  // Classical Jacobi amplitude at p = 2 (modulus convention).
  CHECK(am1(PQPair(2, 0.5), 1.0) ==
        doctest::Approx(0.96603105263661392).epsilon(1e-11));
  // Round trips on a grid, both kinds.
  for (double x : {-3.0, -0.7, 0.2, 1.4, 5.0}) {
    CHECK(incomplete_F1(pq, am1(pq, x)) == doctest::Approx(x).epsilon(1e-10));
    CHECK(incomplete_F2(pq, am2(pq, x)) == doctest::Approx(x).epsilon(1e-10));
  }
  CHECK(am1(pq, 0.0) == 0.0);
  CHECK(am1(pq, -0.9) == doctest::Approx(-am1(pq, 0.9)));
  // Strictly increasing.
  double prev = am1(pq, -2.0);
  for (double x = -1.5; x < 2.5; x += 0.5) {
    const double v = am1(pq, x);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("am1 saturates at q = 1 for p > 2") {
  const PQPair pq(4, 1.0);
  const double K = complete_K1(pq);
  CHECK(am1(pq, K + 0.5) == doctest::Approx(kHalfPi));
  CHECK(am1(pq, -K - 2.0) == doctest::Approx(-kHalfPi));
  CHECK(am1(pq, 0.7 * K) < kHalfPi);
}

TEST_CASE("sn, cn, dn basic values and identities") {
  const PQPair pq(3.5, 0.8);
  CHECK(sn_p(pq, 0.0) == 0.0);
  CHECK(cn_p(pq, 0.0) == doctest::Approx(1.0));
  CHECK(dn_p(pq, 0.0) == doctest::Approx(1.0));
  const double sn = sn_p(pq, 0.7), cn = cn_p(pq, 0.7);
  CHECK(sn * sn + std::pow(std::fabs(cn), 3.5) == doctest::Approx(1.0).epsilon(1e-10));
  const double dn = dn_p(pq, 0.7);
  const double s2 = std::sin(am2(pq, 0.7));
  CHECK(std::pow(dn, 3.5) + 0.64 * s2 * s2 == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("cn_p is even and 2K-antiperiodic") {
  const PQPair pq(4, 0.3);
  const double K = complete_K1(pq);
  CHECK(cn_p(pq, 0.2 + 2.0 * K) == doctest::Approx(-cn_p(pq, 0.2)).epsilon(1e-10));
  CHECK(cn_p(pq, -0.8) == doctest::Approx(cn_p(pq, 0.8)).epsilon(1e-12));
  CHECK(cn_p(pq, K) == doctest::Approx(0.0));
}

TEST_CASE("pointwise identities hold on a parameter grid") {
  for (double p : {1.5, 2.0, 3.5, 6.0}) {
    for (double q : {0.1, 0.5, 0.9}) {
      const PQPair pq(p, q);
      for (double x : {-1.7, 0.3, 2.2}) {
        const double sn = sn_p(pq, x);
        const double cn = cn_p(pq, x);
        CHECK(sn * sn + std::pow(std::fabs(cn), p) == doctest::Approx(1.0).epsilon(1e-10));
        const double dn = dn_p(pq, x);
        const double s2 = std::sin(am2(pq, x));
        CHECK(std::pow(dn, p) + q * q * s2 * s2 == doctest::Approx(1.0).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("quasiperiodicity of E and F for n in {-2..2}") {
  const PQPair pq(2.7, 0.3);
  const double E = complete_E1(pq);
  const double K = complete_K1(pq);
  const double x = 0.45;
  for (int n = -2; n <= 2; ++n) {
    CHECK(incomplete_E1(pq, x + n * kPi) ==
          doctest::Approx(incomplete_E1(pq, x) + 2.0 * n * E).epsilon(1e-11));
    CHECK(incomplete_F1(pq, x + n * kPi) ==
          doctest::Approx(incomplete_F1(pq, x) + 2.0 * n * K).epsilon(1e-11));
  }
}

TEST_CASE("p-hyperbolic functions") {
  for (double p : {1.5, 2.0, 4.0}) CHECK(sech_p(p, 0.0) == doctest::Approx(1.0));
  const double K4 = complete_K1(PQPair(4, 1));
  CHECK(sech_p(4, K4 + 0.1) == 0.0);
  CHECK(sech_p(4, -K4) == 0.0);
  CHECK(sech_p(4, 0.5 * K4) > 0.0);
  // Classical reduction at p = 2.
  CHECK(tanh_p(2, 1.3) == doctest::Approx(std::tanh(1.3)).epsilon(1e-10));
  CHECK(sech_p(2, 0.9) == doctest::Approx(1.0 / std::cosh(0.9)).epsilon(1e-10));
  // tanh_p saturates at E1(1) beyond the support for p > 2.
  CHECK(tanh_p(4, K4 + 3.0) ==
        doctest::Approx(complete_E1(PQPair(4, 1))).epsilon(1e-12));
  CHECK(tanh_p(4, -K4 - 3.0) ==
        doctest::Approx(-complete_E1(PQPair(4, 1))).epsilon(1e-12));
}

TEST_CASE("p = 2 reduction against the classical oracle") {
  for (double q : {0.15, 0.45, 0.85}) {
    const PQPair pq(2, q);
    const double K = complete_K1(pq);
    CHECK(K == doctest::Approx(oracle::complete_K(q)).epsilon(1e-12));
    CHECK(complete_E1(pq) == doctest::Approx(oracle::complete_E(q)).epsilon(1e-12));
    for (double x : {0.2, 0.8, 1.2}) {
      if (x >= K) continue;
      const oracle::Jacobi j = oracle::sncndn(x, q);
      CHECK(sn_p(pq, x) == doctest::Approx(j.sn).epsilon(1e-10));
      CHECK(cn_p(pq, x) == doctest::Approx(j.cn).epsilon(1e-10));
      CHECK(dn_p(pq, x) == doctest::Approx(j.dn).epsilon(1e-10));
      CHECK(am1(pq, x) == doctest::Approx(oracle::amplitude(x, q)).epsilon(1e-10));
      CHECK(incomplete_E1(pq, am1(pq, x)) ==
            doctest::Approx(oracle::incomplete_E(oracle::amplitude(x, q), q))
                .epsilon(1e-10));
    }
  }
}
