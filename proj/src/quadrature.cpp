#include "pelastica/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <vector>

#include "pelastica/errors.hpp"

namespace pelastica {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Nodes are truncated where the unit complementary abscissa 2e^{-2u} would
// approach the denormal range; contributions beyond are below any double
// tolerance even for integrable endpoint singularities.
constexpr double kTMax = 6.0;
constexpr int kMaxLevels = 12;

struct TsNode {
  double xc;  // 1 - |x| on the unit interval, computed without cancellation
  double w;   // weight
};

// Positive-t nodes for one refinement level (t = odd multiples of h at
// level >= 1; all multiples at level 0).
const std::vector<std::vector<TsNode>>& ts_levels() {
  static const std::vector<std::vector<TsNode>> levels = [] {
    std::vector<std::vector<TsNode>> lv(kMaxLevels + 1);
    for (int level = 0; level <= kMaxLevels; ++level) {
      const double h = std::ldexp(1.0, -level);
      const int stride = (level == 0) ? 1 : 2;
      for (int j = 1;; j += stride) {
        const double t = j * h;
        if (t > kTMax) break;
        const double u = 0.5 * kPi * std::sinh(t);
        const double ec = std::exp(-2.0 * u);
        const double xc = 2.0 * ec / (1.0 + ec);
        const double ch = std::cosh(u);
        const double w = 0.5 * kPi * std::cosh(t) / (ch * ch);
        if (xc <= 0.0 || w <= 0.0) break;
        lv[level].push_back({xc, w});
      }
    }
    return lv;
  }();
  return levels;
}

}  // namespace

const Tolerance& default_tolerance() {
  static const Tolerance tol = [] {
    Tolerance t;
    if (const char* env = std::getenv("PELASTICA_TOL")) {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end != env && v > 0.0 && std::isfinite(v)) {
        t.abs_tol = v;
        t.rel_tol = v;
      }
    }
    return t;
  }();
  return tol;
}

double tanh_sinh(const Integrand& f, double a, double b, const Tolerance& tol) {
  if (!(std::isfinite(a) && std::isfinite(b)))
    throw DomainError("tanh_sinh: limits must be finite");
  if (a == b) return 0.0;
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  const double r = 0.5 * (b - a);
  const double len = b - a;

  const auto& levels = ts_levels();
  const int max_level = std::min({tol.max_subdivisions, kMaxLevels});

  // Center node t = 0: x at the midpoint.
  double sum = 0.5 * kPi * f(a + r, r, r);
  double h = 1.0;
  double prev = sum * h * r;
  double result = prev;
  double err = std::numeric_limits<double>::infinity();

  for (int level = 0; level <= max_level; ++level) {
    if (level > 0) h *= 0.5;
    for (const TsNode& nd : levels[level]) {
      const double da = r * nd.xc;  // distance of the lower node from a
      const double xlo = a + da;
      const double xhi = b - da;
      sum += nd.w * (f(xlo, da, len - da) + f(xhi, len - da, da));
    }
    result = sum * h * r;
    if (!std::isfinite(result))
      throw ConvergenceError("tanh_sinh: integrand produced a non-finite value");
    err = std::fabs(result - prev);
    const double goal = std::max(tol.abs_tol, tol.rel_tol * std::fabs(result));
    if (level >= 2 && err <= goal) return sign * result;
    prev = result;
  }
  // Accept machine-precision stagnation on the last refinement.
  if (err <= 1e-14 * std::max(1.0, std::fabs(result))) return sign * result;
  throw ConvergenceError("tanh_sinh: tolerance not reached within refinement limit");
}

double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 const Tolerance& tol) {
  return tanh_sinh([&f](double x, double, double) { return f(x); }, a, b, tol);
}

namespace {

struct GlRule {
  std::vector<double> x;  // nodes on [-1, 1]
  std::vector<double> w;
};

// Gauss-Legendre nodes by Newton iteration on P_n; generated once.
const GlRule& gl_rule(int n) {
  static const GlRule rule15 = [] {
    const int n = 15;
    GlRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
      double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-16) break;
      }
      r.x[i] = x;
      r.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
  }();
  (void)n;
  return rule15;
}

}  // namespace

double gauss_legendre_15(const Integrand& f, double a, double b) {
  const GlRule& r = gl_rule(15);
  const double c = 0.5 * (a + b);
  const double hw = 0.5 * (b - a);
  const double len = b - a;
  double sum = 0.0;
  for (std::size_t i = 0; i < r.x.size(); ++i) {
    const double x = c + hw * r.x[i];
    sum += r.w[i] * f(x, x - a, len - (x - a));
  }
  return sum * hw;
}

double integrate_samples(const double* s, const double* f, std::size_t n) {
  if (n < 2) return 0.0;
  // Derivative estimates from 3-point stencils on a possibly nonuniform grid.
  std::vector<double> d(n);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double hl = s[i] - s[i - 1];
    const double hr = s[i + 1] - s[i];
    d[i] = (hl * hl * f[i + 1] - hr * hr * f[i - 1] + (hr * hr - hl * hl) * f[i]) /
           (hl * hr * (hl + hr));
  }
  if (n == 2) {
    d[0] = d[1] = (f[1] - f[0]) / (s[1] - s[0]);
  } else {
    const double h0 = s[1] - s[0], h1 = s[2] - s[1];
    d[0] = (-(2.0 * h0 + h1) * f[0] + (h0 + h1) * (h0 + h1) / h1 * f[1] -
            h0 * h0 / h1 * f[2]) /
           (h0 * (h0 + h1));
    const std::size_t m = n - 1;
    const double g0 = s[m] - s[m - 1], g1 = s[m - 1] - s[m - 2];
    d[m] = ((2.0 * g0 + g1) * f[m] - (g0 + g1) * (g0 + g1) / g1 * f[m - 1] +
            g0 * g0 / g1 * f[m - 2]) /
           (g0 * (g0 + g1));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double h = s[i + 1] - s[i];
    sum += 0.5 * h * (f[i] + f[i + 1]) - h * h / 12.0 * (d[i + 1] - d[i]);
  }
  return sum;
}

}  // namespace pelastica
