#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle {

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa,
               double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& f, double a, double fa,
                double b, double fb, double fm, double whole, double tol,
                int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, fa, m, fm, flm);
  const double right = simpson(f, m, fm, b, fb, frm);
  if (depth > 60) return left + right;
  if (std::fabs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive(f, a, fa, m, fm, flm, left, 0.5 * tol, depth + 1) +
         adaptive(f, m, fm, b, fb, frm, right, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = simpson(f, a, fa, b, fb, fm);
  return adaptive(f, a, fa, b, fb, fm, whole, tol, 0);
}

double complete_K(double k) {
  if (!(k >= 0.0 && k < 1.0)) throw std::domain_error("complete_K: k in [0,1)");
  double a = 1.0, b = std::sqrt(1.0 - k * k);
  for (int i = 0; i < 60 && std::fabs(a - b) > 1e-17 * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return 1.5707963267948966 / a;
}

double complete_E(double k) {
  if (!(k >= 0.0 && k < 1.0)) throw std::domain_error("complete_E: k in [0,1)");
  double a = 1.0, b = std::sqrt(1.0 - k * k), c = k;
  double sum = 0.5 * c * c;
  double pow2 = 1.0;
  for (int i = 0; i < 60 && std::fabs(c) > 1e-17; ++i) {
    const double an = 0.5 * (a + b);
    c = 0.5 * (a - b);
    b = std::sqrt(a * b);
    a = an;
    pow2 *= 2.0;
    sum += 0.5 * pow2 * c * c;
  }
  return complete_K(k) * (1.0 - sum);
}

double incomplete_F(double phi, double k) {
  return integrate(
      [k](double t) {
        const double s = std::sin(t);
        return 1.0 / std::sqrt(1.0 - k * k * s * s);
      },
      0.0, phi);
}

double incomplete_E(double phi, double k) {
  return integrate(
      [k](double t) {
        const double s = std::sin(t);
        return std::sqrt(1.0 - k * k * s * s);
      },
      0.0, phi);
}

Jacobi sncndn(double u, double k) {
  // Descending Landen / AGM scale, modulus k in [0, 1).
  constexpr double kAcc = 1e-15;
  if (!(k >= 0.0 && k < 1.0)) throw std::domain_error("sncndn: k in [0,1)");
  Jacobi out;
  double emc = 1.0 - k * k;
  if (emc == 1.0) {  // k = 0
    out.sn = std::sin(u);
    out.cn = std::cos(u);
    out.dn = 1.0;
    return out;
  }
  double a = 1.0, dn = 1.0;
  double em[16], en[16];
  int l = 0;
  double c = 0.0;
  for (int i = 0; i < 14; ++i) {
    l = i;
    em[i] = a;
    emc = std::sqrt(emc);
    en[i] = emc;
    c = 0.5 * (a + emc);
    if (std::fabs(a - emc) <= kAcc * a) break;
    emc *= a;
    a = c;
  }
  u *= c;
  double sn = std::sin(u), cn = std::cos(u);
  if (sn != 0.0) {
    a = cn / sn;
    c *= a;
    for (int i = l; i >= 0; --i) {
      const double b = em[i];
      a *= c;
      c *= dn;
      dn = (en[i] + a) / (b + a);
      a = c / b;
    }
    a = 1.0 / std::sqrt(c * c + 1.0);
    sn = (sn >= 0.0) ? a : -a;
    cn = c * sn;
  }
  out.sn = sn;
  out.cn = cn;
  out.dn = dn;
  return out;
}

double amplitude(double u, double k) { return std::asin(sncndn(u, k).sn); }

}  // namespace oracle
