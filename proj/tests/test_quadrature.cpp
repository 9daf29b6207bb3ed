#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "pelastica/errors.hpp"
#include "pelastica/quadrature.hpp"

using namespace pelastica;

TEST_CASE("tanh_sinh on smooth integrands") {
  CHECK(tanh_sinh([](double x) { return std::sin(x); }, 0.0, 3.14159265358979323846) ==
        doctest::Approx(2.0).epsilon(1e-13));
  CHECK(tanh_sinh([](double x) { return 4.0 / (1.0 + x * x); }, 0.0, 1.0) ==
        doctest::Approx(3.14159265358979323846).epsilon(1e-13));
}

TEST_CASE("tanh_sinh resolves endpoint singularities through the distance arguments") {
  // int_0^1 x^{-1/2} = 2, with the singular endpoint at the lower limit.
  const double v = tanh_sinh(
      [](double, double da, double) { return 1.0 / std::sqrt(da); }, 0.0, 1.0);
  CHECK(v == doctest::Approx(2.0).epsilon(1e-12));
  // Upper-limit singularity: int_0^1 (1-x)^{-1/3} = 3/2.
  const double w = tanh_sinh(
      [](double, double, double db) { return std::pow(db, -1.0 / 3.0); }, 0.0, 1.0);
  CHECK(w == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("tanh_sinh rejects non-finite limits and integrands") {
  CHECK_THROWS_AS(tanh_sinh([](double x) { return x; }, 0.0,
                            std::numeric_limits<double>::infinity()),
                  DomainError);
  CHECK_THROWS_AS(tanh_sinh([](double) { return std::nan(""); }, 0.0, 1.0),
                  ConvergenceError);
}

TEST_CASE("tanh_sinh respects orientation and empty intervals") {
  const double fwd = tanh_sinh([](double x) { return x * x; }, 0.0, 2.0);
  const double bwd = tanh_sinh([](double x) { return x * x; }, 2.0, 0.0);
  CHECK(fwd == doctest::Approx(8.0 / 3.0).epsilon(1e-13));
  CHECK(bwd == doctest::Approx(-8.0 / 3.0).epsilon(1e-13));
  CHECK(tanh_sinh([](double x) { return x; }, 1.0, 1.0) == 0.0);
}

TEST_CASE("integrate_samples is exact on cubics and 4th order on sine") {
  std::vector<double> s, f;
  for (int i = 0; i <= 50; ++i) {
    const double x = i / 50.0;
    s.push_back(x);
    f.push_back(((2.0 * x - 3.0) * x + 0.5) * x + 1.0);
  }
  // int_0^1 (2x^3 - 3x^2 + x/2 + 1) dx = 0.75
  CHECK(integrate_samples(s.data(), f.data(), s.size()) ==
        doctest::Approx(0.75).epsilon(1e-13));

  auto sine_err = [](int n) {
    std::vector<double> ss(n), ff(n);
    for (int i = 0; i < n; ++i) {
      ss[i] = 3.0 * i / (n - 1);
      ff[i] = std::sin(ss[i]);
    }
    return std::fabs(integrate_samples(ss.data(), ff.data(), n) -
                     (1.0 - std::cos(3.0)));
  };
  const double e1 = sine_err(101), e2 = sine_err(201);
  CHECK(e1 / e2 > 10.0);  // better than O(h^3)
}

TEST_CASE("gauss_legendre_15 integrates high-degree polynomials exactly") {
  const double v = gauss_legendre_15(
      [](double x, double, double) { return std::pow(x, 20); }, 0.0, 1.0);
  CHECK(v == doctest::Approx(1.0 / 21.0).epsilon(1e-13));
}

TEST_CASE("oracle self-check against externally computed constants") {
  // Classical complete integrals (modulus convention).
  CHECK(oracle::complete_K(0.5) == doctest::Approx(1.6857503548125960).epsilon(1e-13));
  CHECK(oracle::complete_E(0.7) == doctest::Approx(1.3556611355719555).epsilon(1e-13));
  CHECK(oracle::complete_E(0.5) == doctest::Approx(1.4674622093394272).epsilon(1e-13));
  // Jacobi functions at u = 1, k = 0.5: am = 0.96603105263661392.
  const oracle::Jacobi j = oracle::sncndn(1.0, 0.5);
  CHECK(std::asin(j.sn) == doctest::Approx(0.96603105263661392).epsilon(1e-12));
  CHECK(j.sn * j.sn + j.cn * j.cn == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(j.dn == doctest::Approx(std::sqrt(1.0 - 0.25 * j.sn * j.sn)).epsilon(1e-13));
  // Round trip F(am(u)) = u.
  CHECK(oracle::incomplete_F(std::asin(j.sn), 0.5) == doctest::Approx(1.0).epsilon(1e-12));
}
