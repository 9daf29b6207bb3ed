#include "pelastica/curve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "amplitude_map.hpp"
#include "pelastica/errors.hpp"
#include "rational_angle.hpp"

namespace pelastica {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = 1.57079632679489661923;

double wrap_to_pi(double a) {
  double w = std::remainder(a, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

int resolve_samples(int n_samples, double length, double period) {
  if (n_samples > 1) return n_samples;
  const double density = kSamplesPerPeriod / period;
  const int n = static_cast<int>(std::lround(length * density)) + 1;
  return std::max(n, 16);
}

std::vector<double> uniform_grid(double a, double b, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i)
    g[i] = a + (b - a) * (static_cast<double>(i) / (n - 1));
  g.front() = a;
  g.back() = b;
  return g;
}

}  // namespace

const char* to_string(CurveFamily f) {
  switch (f) {
    case CurveFamily::linear: return "linear";
    case CurveFamily::wavelike: return "wavelike";
    case CurveFamily::borderline: return "borderline";
    case CurveFamily::flatcore: return "flatcore";
    case CurveFamily::orbitlike: return "orbitlike";
    case CurveFamily::circular: return "circular";
    case CurveFamily::composite: return "composite";
  }
  return "unknown";
}

double SampledCurve::max_abs_curvature() const {
  double m = 0.0;
  for (double v : k) m = std::max(m, std::fabs(v));
  return m;
}

double SampledCurve::diameter() const {
  if (xy.empty()) return 0.0;
  double xmin = xy[0].x, xmax = xy[0].x, ymin = xy[0].y, ymax = xy[0].y;
  for (const Vec2& v : xy) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  return std::hypot(xmax - xmin, ymax - ymin);
}

bool SampledCurve::is_closed(double tol_factor) const {
  if (xy.size() < 2) return false;
  const double scale = std::max(diameter(), 1e-300);
  return norm(xy.back() - xy.front()) <= tol_factor * scale;
}

// ---------------------------------------------------------------------------
// Wavelike evaluation through the amplitude table.

namespace {

struct WaveEval {
  double x, y, theta, k;
};

class WavelikeSampler {
public:
  WavelikeSampler(double p, double q, const Tolerance& tol)
      : p_(p), q_(q), map_(p, q, 1, kHalfPi, tol) {
    K_ = map_.s_total();
    Ec_ = map_.companion_total();
  }

  double K() const { return K_; }

  WaveEval eval(double t) const {
    const long m = static_cast<long>(std::floor((t + K_) / (2.0 * K_)));
    const double t0 = t - 2.0 * m * K_;  // in [-K, K)
    const double sgn = (t0 < 0.0) ? -1.0 : 1.0;
    const auto pt = map_.at_s(std::fabs(t0));
    const double parity = (m % 2 == 0) ? 1.0 : -1.0;
    const double sd = std::sin(pt.dist);      // = cos(am) >= 0 on [0, K]
    const double cn = parity * std::pow(sd, 2.0 / p_);
    const double sn = parity * sgn * std::sin(pt.theta);
    const double E = sgn * pt.companion + 2.0 * m * Ec_;
    WaveEval w;
    w.x = 2.0 * E - t;
    w.y = -q_ * p_ / (p_ - 1.0) * parity * std::pow(sd, 2.0 * (p_ - 1.0) / p_);
    w.theta = 2.0 * std::asin(q_ * sn);
    w.k = 2.0 * q_ * cn;
    return w;
  }

private:
  double p_, q_, K_, Ec_;
  detail::AmplitudeMap map_;
};

SampledCurve sample_wavelike(const WavelikeSampler& smp, double p, double q,
                             SRange range, int n_samples) {
  const int n = resolve_samples(n_samples, range.s1 - range.s0, 2.0 * smp.K());
  SampledCurve c;
  c.family = CurveFamily::wavelike;
  c.params.p = p;
  c.params.q = q;
  c.s = uniform_grid(range.s0, range.s1, n);
  c.xy.resize(n);
  c.theta.resize(n);
  c.k.resize(n);
  for (int i = 0; i < n; ++i) {
    const WaveEval w = smp.eval(c.s[i]);
    c.xy[i] = {w.x, w.y};
    c.theta[i] = w.theta;
    c.k[i] = w.k;
  }
  return c;
}

}  // namespace

SampledCurve wavelike(double p, double q, SRange range, int n_samples,
                      const Tolerance& tol) {
  if (!(p > 1.0)) throw DomainError("wavelike: p must exceed 1");
  if (!(q > 0.0 && q < 1.0)) throw DomainError("wavelike: q must lie in (0,1)");
  if (!(range.s1 > range.s0)) throw DomainError("wavelike: empty range");
  WavelikeSampler smp(p, q, tol);
  return sample_wavelike(smp, p, q, range, n_samples);
}

// ---------------------------------------------------------------------------
// Borderline (q = 1); also serves the flat-core loop pieces for p > 2.

namespace {

class BorderlineSampler {
public:
  BorderlineSampler(double p, double smax_abs, const Tolerance& tol)
      : p_(p),
        map_(p, 1.0, 1,
             (p > 2.0) ? kHalfPi
                       : am1(PQPair(p, 1.0), std::max(smax_abs, 1e-8), tol),
             tol) {}

  double K() const { return map_.s_total(); }

  WaveEval eval(double t) const {
    const double u = std::min(std::fabs(t), map_.s_total());
    const double sgn = (t < 0.0) ? -1.0 : 1.0;
    const auto pt = map_.at_s(u);
    const double sd = std::sin(pt.dist);  // = cos(am)
    WaveEval w;
    w.x = 2.0 * sgn * pt.companion - t;  // 2 tanh_p(t) - t
    w.y = -p_ / (p_ - 1.0) * std::pow(sd, 2.0 * (p_ - 1.0) / p_);
    w.theta = 2.0 * sgn * pt.theta;
    w.k = 2.0 * std::pow(sd, 2.0 / p_);
    return w;
  }

private:
  double p_;
  detail::AmplitudeMap map_;
};

}  // namespace

SampledCurve borderline(double p, SRange range, int n_samples,
                        const Tolerance& tol) {
  if (!(p > 1.0)) throw DomainError("borderline: p must exceed 1");
  if (!(range.s1 > range.s0)) throw DomainError("borderline: empty range");
  const double smax = std::max(std::fabs(range.s0), std::fabs(range.s1));
  if (p > 2.0) {
    const double K = complete_K1(PQPair(p, 1.0), tol);
    if (smax > K * (1.0 + 1e-9))
      throw DomainError("borderline: range exceeds [-K_p(1), K_p(1)] for p > 2");
  }
  BorderlineSampler smp(p, smax, tol);
  const double period = (p > 2.0) ? 2.0 * smp.K() : (range.s1 - range.s0);
  const int n = resolve_samples(n_samples, range.s1 - range.s0, period);
  SampledCurve c;
  c.family = CurveFamily::borderline;
  c.params.p = p;
  c.params.q = 1.0;
  c.s = uniform_grid(range.s0, range.s1, n);
  c.xy.resize(n);
  c.theta.resize(n);
  c.k.resize(n);
  for (int i = 0; i < n; ++i) {
    const WaveEval w = smp.eval(c.s[i]);
    c.xy[i] = {w.x, w.y};
    c.theta[i] = w.theta;
    c.k[i] = w.k;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Orbitlike.

SampledCurve orbitlike(double p, double q, SRange range, int n_samples,
                       const Tolerance& tol) {
  if (!(p > 1.0)) throw DomainError("orbitlike: p must exceed 1");
  if (!(q > 0.0 && q < 1.0)) throw DomainError("orbitlike: q must lie in (0,1)");
  if (!(range.s1 > range.s0)) throw DomainError("orbitlike: empty range");
  detail::AmplitudeMap map(p, q, 2, kHalfPi, tol);
  const double K2 = map.s_total();
  const double E2c = map.companion_total();
  const int n = resolve_samples(n_samples, range.s1 - range.s0, 2.0 * K2);
  SampledCurve c;
  c.family = CurveFamily::orbitlike;
  c.params.p = p;
  c.params.q = q;
  c.s = uniform_grid(range.s0, range.s1, n);
  c.xy.resize(n);
  c.theta.resize(n);
  c.k.resize(n);
  const double q2 = q * q;
  for (int i = 0; i < n; ++i) {
    const double t = c.s[i];
    const long m = static_cast<long>(std::floor((t + K2) / (2.0 * K2)));
    const double t0 = t - 2.0 * m * K2;
    const double sgn = (t0 < 0.0) ? -1.0 : 1.0;
    const auto pt = map.at_s(std::fabs(t0));
    const double sd = std::sin(pt.dist);  // cos(am2)
    const double om = (1.0 - q) * (1.0 + q) + q2 * sd * sd;  // 1 - q^2 sin^2
    const double dn = std::pow(om, 1.0 / p);
    const double E2v = sgn * pt.companion + 2.0 * m * E2c;
    c.xy[i] = {(2.0 * E2v + (q2 - 2.0) * t) / q2,
               -p / (p - 1.0) * std::pow(dn, p - 1.0) / q2};
    c.theta[i] = 2.0 * (sgn * pt.theta + m * kPi);
    c.k[i] = 2.0 * dn;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Circular and linear.

SampledCurve circular(SRange range, int n_samples) {
  if (!(range.s1 > range.s0)) throw DomainError("circular: empty range");
  const int n = resolve_samples(n_samples, range.s1 - range.s0, 2.0 * kPi);
  SampledCurve c;
  c.family = CurveFamily::circular;
  c.s = uniform_grid(range.s0, range.s1, n);
  c.xy.resize(n);
  c.theta.resize(n);
  c.k.resize(n);
  for (int i = 0; i < n; ++i) {
    c.xy[i] = {std::cos(c.s[i]), std::sin(c.s[i])};
    c.theta[i] = c.s[i] + kHalfPi;
    c.k[i] = 1.0;
  }
  return c;
}

SampledCurve linear(SRange range, int n_samples) {
  if (!(range.s1 > range.s0)) throw DomainError("linear: empty range");
  const int n = resolve_samples(n_samples, range.s1 - range.s0,
                                range.s1 - range.s0);
  SampledCurve c;
  c.family = CurveFamily::linear;
  c.s = uniform_grid(range.s0, range.s1, n);
  c.xy.resize(n);
  c.theta.assign(n, 0.0);
  c.k.assign(n, 0.0);
  for (int i = 0; i < n; ++i) c.xy[i] = {c.s[i], 0.0};
  return c;
}

// ---------------------------------------------------------------------------
// Concatenation and rigid motions.

SampledCurve concat(const std::vector<SampledCurve>& pieces) {
  if (pieces.empty()) throw DomainError("concat: empty curve list");
  SampledCurve out;
  bool first = true;
  for (const SampledCurve& piece : pieces) {
    if (piece.size() < 2) throw DomainError("concat: degenerate piece");
    if (first) {
      out = piece;
      const double s0 = out.s.front();
      for (double& v : out.s) v -= s0;
      first = false;
      continue;
    }
    const Vec2 shift = out.xy.back() - piece.xy.front();
    const double s_off = out.s.back() - piece.s.front();
    const double jump = wrap_to_pi(piece.theta.front() - out.theta.back());
    const double th_off = out.theta.back() + jump - piece.theta.front();
    for (std::size_t i = 1; i < piece.size(); ++i) {
      out.s.push_back(piece.s[i] + s_off);
      out.xy.push_back(piece.xy[i] + shift);
      out.theta.push_back(piece.theta[i] + th_off);
      out.k.push_back(piece.k[i]);
    }
  }
  if (pieces.size() > 1) {
    out.family = CurveFamily::composite;
    out.params = CurveParams{};
    out.params.p = pieces.front().params.p;
  }
  return out;
}

SampledCurve translated(const SampledCurve& c, const Vec2& delta) {
  SampledCurve out = c;
  for (Vec2& v : out.xy) v += delta;
  return out;
}

SampledCurve rotated(const SampledCurve& c, double angle) {
  SampledCurve out = c;
  for (Vec2& v : out.xy) v = rotate(v, angle);
  for (double& t : out.theta) t += angle;
  return out;
}

SampledCurve reflected_x(const SampledCurve& c) {
  SampledCurve out = c;
  for (Vec2& v : out.xy) v.y = -v.y;
  for (double& t : out.theta) t = -t;
  for (double& v : out.k) v = -v;
  return out;
}

SampledCurve scaled(const SampledCurve& c, double factor) {
  if (!(factor > 0.0)) throw DomainError("scaled: factor must be positive");
  SampledCurve out = c;
  for (double& v : out.s) v *= factor;
  for (Vec2& v : out.xy) v = factor * v;
  for (double& v : out.k) v /= factor;
  return out;
}

// ---------------------------------------------------------------------------
// Pinned families.

namespace {

// gamma(s) = gamma_w(s - K, q) on [0, 2nK], translated to start at the origin.
SampledCurve pinned_wavelike(double p, double q, int n, int n_samples,
                             const Tolerance& tol) {
  WavelikeSampler smp(p, q, tol);
  const double K = smp.K();
  const double L = 2.0 * n * K;
  const int N = resolve_samples(n_samples, L, 2.0 * K);
  SampledCurve c;
  c.family = CurveFamily::wavelike;
  c.params.p = p;
  c.params.q = q;
  c.params.n = n;
  c.s = uniform_grid(0.0, L, N);
  c.xy.resize(N);
  c.theta.resize(N);
  c.k.resize(N);
  const WaveEval origin = smp.eval(-K);
  for (int i = 0; i < N; ++i) {
    const WaveEval w = smp.eval(c.s[i] - K);
    c.xy[i] = {w.x - origin.x, w.y - origin.y};
    c.theta[i] = w.theta;
    c.k[i] = w.k;
  }
  return c;
}

}  // namespace

SampledCurve build_arc(double p, EndpointRatio r, int n, int n_samples,
                       const Tolerance& tol) {
  if (n < 1) throw DomainError("build_arc: n must be >= 1");
  const double q = solve_arc_modulus(p, r, tol);
  SampledCurve c = pinned_wavelike(p, q, n, n_samples, tol);
  c.params.r = r.r;
  return c;
}

SampledCurve build_loop(double p, EndpointRatio r, int n, int n_samples,
                        const Tolerance& tol) {
  if (n < 1) throw DomainError("build_loop: n must be >= 1");
  const double q = solve_loop_modulus(p, r, tol);
  SampledCurve c = pinned_wavelike(p, q, n, n_samples, tol);
  c.params.r = r.r;
  return c;
}

SampledCurve build_figure_eight(double p, int n_halves, int n_samples,
                                const Tolerance& tol) {
  if (n_halves < 1) throw DomainError("build_figure_eight: n_halves must be >= 1");
  return build_arc(p, EndpointRatio(0.0), n_halves, n_samples, tol);
}

// ---------------------------------------------------------------------------
// Flat-core.

double FlatCoreSpec::required_segment_sum(const Tolerance& tol) const {
  const double K = complete_K1(PQPair(p, 1.0), tol);
  return 2.0 * n * (r.r - 1.0 / (p - 1.0)) / (1.0 - r.r) * K;
}

FlatCoreSpec FlatCoreSpec::with_equal_segments(double p, EndpointRatio r, int n,
                                               const Tolerance& tol) {
  FlatCoreSpec spec{p, r, n, {}, {}};
  spec.sigma.resize(n);
  for (int i = 0; i < n; ++i) spec.sigma[i] = (i % 2 == 0) ? 1 : -1;
  const double total = spec.required_segment_sum(tol);
  spec.L_vec.assign(n + 1, total / (n + 1));
  return spec;
}

void FlatCoreSpec::validate(const Tolerance& tol) const {
  if (!(p > 2.0)) throw DomainError("flat-core requires p > 2");
  if (r.r < 1.0 / (p - 1.0) - 1e-12)
    throw DomainError("flat-core requires r >= 1/(p-1)");
  if (n < 1) throw DomainError("flat-core requires n >= 1");
  if (static_cast<int>(sigma.size()) != n)
    throw DomainError("flat-core: sigma must have n entries");
  for (int s : sigma)
    if (s != 1 && s != -1) throw DomainError("flat-core: sigma entries must be +-1");
  if (static_cast<int>(L_vec.size()) != n + 1)
    throw DomainError("flat-core: L_vec must have n+1 entries");
  double sum = 0.0;
  for (double L : L_vec) {
    if (L < 0.0) throw DomainError("flat-core: segment lengths must be nonnegative");
    sum += L;
  }
  const double required = required_segment_sum(tol);
  if (std::fabs(sum - required) > 1e-9 * std::max(1.0, required))
    throw DomainError(
        "flat-core: segment lengths must sum to 2n (r - 1/(p-1))/(1-r) K_p(1)");
}

SampledCurve build_flatcore(const FlatCoreSpec& spec, int n_samples,
                            const Tolerance& tol) {
  spec.validate(tol);
  BorderlineSampler smp(spec.p, 0.0, tol);
  const double K = smp.K();
  const double total_len =
      std::accumulate(spec.L_vec.begin(), spec.L_vec.end(), 0.0) +
      2.0 * spec.n * K;
  const int N = resolve_samples(n_samples, total_len, 2.0 * K);
  const double h = total_len / (N - 1);

  auto make_segment = [&](double L) -> SampledCurve {
    const int ns = std::max(2, static_cast<int>(std::lround(L / h)) + 1);
    SampledCurve seg;
    seg.family = CurveFamily::linear;
    seg.s = uniform_grid(0.0, L, ns);
    seg.xy.resize(ns);
    seg.theta.assign(ns, kPi);  // canonical flat piece runs in -x direction
    seg.k.assign(ns, 0.0);
    for (int i = 0; i < ns; ++i) seg.xy[i] = {-seg.s[i], 0.0};
    return seg;
  };
  auto make_loop = [&](int sign) -> SampledCurve {
    const int ns = std::max(2, static_cast<int>(std::lround(2.0 * K / h)) + 1);
    SampledCurve lp;
    lp.family = CurveFamily::borderline;
    lp.s = uniform_grid(0.0, 2.0 * K, ns);
    lp.xy.resize(ns);
    lp.theta.resize(ns);
    lp.k.resize(ns);
    for (int i = 0; i < ns; ++i) {
      const WaveEval w = smp.eval(lp.s[i] - K);
      lp.xy[i] = {w.x, sign * w.y};
      lp.theta[i] = sign * w.theta;
      lp.k[i] = sign * w.k;
    }
    return lp;
  };

  std::vector<SampledCurve> pieces;
  for (int j = 0; j < spec.n; ++j) {
    if (spec.L_vec[j] > 0.0) pieces.push_back(make_segment(spec.L_vec[j]));
    pieces.push_back(make_loop(spec.sigma[j]));
  }
  if (spec.L_vec[spec.n] > 0.0) pieces.push_back(make_segment(spec.L_vec[spec.n]));

  SampledCurve c = concat(pieces);
  c = translated(c, {-c.xy.front().x, -c.xy.front().y});
  c = rotated(c, -kPi);  // initial tangent along +x
  c.family = CurveFamily::flatcore;
  c.params = CurveParams{};
  c.params.p = spec.p;
  c.params.q = 1.0;
  c.params.r = spec.r.r;
  c.params.n = spec.n;
  c.params.sigma = spec.sigma;
  c.params.L_vec = spec.L_vec;
  return c;
}

// ---------------------------------------------------------------------------
// Leafed curves.

LeafTuple leaf_tuple(double p, int m, bool closed,
                     const std::vector<int>& sign_pattern, const Tolerance& tol) {
  if (m < 2) throw DomainError("leaf_tuple: m must be >= 2");
  const double phi = phi_star(p, tol);
  std::vector<int> pattern = sign_pattern;
  if (pattern.empty()) {
    if (m % 2 == 0) {
      pattern.resize(m);
      for (int i = 0; i < m; ++i) pattern[i] = (i % 2 == 0) ? 1 : -1;
    } else if (!closed) {
      pattern.assign(m, -1);
    } else {
      // Need sum sigma_i * phi in pi Z: with phi/pi = l/j in lowest terms and
      // j odd this is achieved by sum sigma_i = j, possible iff j <= m.
      const auto rat = detail::detect_rational(phi / kPi, 1000000, 1e-9);
      if (!rat.found || rat.den % 2 == 0 || rat.den > m)
        throw DomainError("leaf_tuple: no closed m-leafed tuple exists at this p "
                          "for odd m (phi*/pi admits no odd denominator <= m)");
      const int plus = (m + static_cast<int>(rat.den)) / 2;
      pattern.assign(m, -1);
      for (int i = 0; i < plus; ++i) pattern[i] = 1;
    }
  }
  if (static_cast<int>(pattern.size()) != m)
    throw DomainError("leaf_tuple: sign pattern must have m entries");
  int sum = 0;
  for (int s : pattern) {
    if (s != 1 && s != -1)
      throw DomainError("leaf_tuple: sign entries must be +-1");
    sum += s;
  }
  if (closed) {
    const double turns = sum * phi / kPi;  // must be an integer
    if (std::fabs(turns - std::lround(turns)) > 1e-8)
      throw DomainError("leaf_tuple: sign pattern does not close (sum of "
                        "tangent rotations is not a multiple of 2 pi)");
  }
  LeafTuple tuple;
  tuple.m = m;
  tuple.omegas.resize(m);
  Vec2 w{1.0, 0.0};
  for (int i = 0; i < m; ++i) {
    w = rotate(w, pattern[i] * 2.0 * phi);
    tuple.omegas[i] = w;
  }
  return tuple;
}

SampledCurve build_leafed(double p, const LeafTuple& tuple, double leaf_length,
                          int n_samples, const Tolerance& tol) {
  const int m = tuple.m;
  if (m < 2 || static_cast<int>(tuple.omegas.size()) != m)
    throw DomainError("build_leafed: invalid tuple");
  if (!(leaf_length > 0.0))
    throw DomainError("build_leafed: leaf_length must be positive");
  const double phi = phi_star(p, tol);
  const int per_leaf = (n_samples > 1) ? std::max(16, n_samples / m) : 0;
  SampledCurve canon = build_figure_eight(p, 1, per_leaf, tol);
  canon = scaled(canon, leaf_length / canon.length());
  const double th_start_canon = canon.theta.front();  // = phi* - pi
  const SampledCurve mirror = reflected_x(canon);     // starts at pi - phi*

  std::vector<SampledCurve> leaves;
  leaves.reserve(m);
  for (int i = 0; i < m; ++i) {
    const Vec2 from = tuple.omegas[(i + m - 1) % m];
    const Vec2 to = tuple.omegas[i];
    const double delta = wrap_to_pi(angle_of(to) - angle_of(from));
    if (std::fabs(std::fabs(delta) - 2.0 * phi) > 1e-7)
      throw DomainError("build_leafed: consecutive tuple tangents are not "
                        "related by a rotation through 2 phi*");
    if (delta < 0.0)
      leaves.push_back(rotated(canon, angle_of(from) - th_start_canon));
    else
      leaves.push_back(rotated(mirror, angle_of(from) + th_start_canon));
  }
  SampledCurve c = concat(leaves);
  c.family = CurveFamily::composite;
  c.params.p = p;
  c.params.q = canon.params.q;
  c.params.n = m;
  return c;
}

// ---------------------------------------------------------------------------
// Reconstruction from points.

SampledCurve from_points(const std::vector<Vec2>& pts, CurveFamily family) {
  const std::size_t n = pts.size();
  if (n < 3) throw DomainError("from_points: need at least 3 points");
  SampledCurve c;
  c.family = family;
  c.xy = pts;
  c.s.resize(n);
  c.theta.resize(n);
  c.k.resize(n);
  c.s[0] = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double d = norm(pts[i] - pts[i - 1]);
    if (!(d > 0.0)) throw DomainError("from_points: coincident samples");
    c.s[i] = c.s[i - 1] + d;
  }
  auto raw_angle = [&](std::size_t i) {
    if (i == 0) return angle_of(pts[1] - pts[0]);
    if (i == n - 1) return angle_of(pts[n - 1] - pts[n - 2]);
    return angle_of(pts[i + 1] - pts[i - 1]);
  };
  c.theta[0] = raw_angle(0);
  for (std::size_t i = 1; i < n; ++i)
    c.theta[i] = c.theta[i - 1] + wrap_to_pi(raw_angle(i) - c.theta[i - 1]);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double hl = c.s[i] - c.s[i - 1];
    const double hr = c.s[i + 1] - c.s[i];
    c.k[i] = (hl * hl * c.theta[i + 1] - hr * hr * c.theta[i - 1] +
              (hr * hr - hl * hl) * c.theta[i]) /
             (hl * hr * (hl + hr));
  }
  c.k[0] = (c.theta[1] - c.theta[0]) / (c.s[1] - c.s[0]);
  c.k[n - 1] = (c.theta[n - 1] - c.theta[n - 2]) / (c.s[n - 1] - c.s[n - 2]);
  return c;
}

// ---------------------------------------------------------------------------
// Exports.

namespace {

void append_g17(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

}  // namespace

std::string to_csv(const SampledCurve& c) {
  std::string out = "s,x,y,theta,k\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    append_g17(out, c.s[i]);
    out += ',';
    append_g17(out, c.xy[i].x);
    out += ',';
    append_g17(out, c.xy[i].y);
    out += ',';
    append_g17(out, c.theta[i]);
    out += ',';
    append_g17(out, c.k[i]);
    out += '\n';
  }
  return out;
}

namespace {

std::string svg_document(const std::vector<const SampledCurve*>& curves) {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const SampledCurve* c : curves)
    for (const Vec2& v : c->xy) {
      xmin = std::min(xmin, v.x);
      xmax = std::max(xmax, v.x);
      ymin = std::min(ymin, -v.y);  // y flipped for screen coordinates
      ymax = std::max(ymax, -v.y);
    }
  const double w = std::max(xmax - xmin, 1e-12);
  const double h = std::max(ymax - ymin, 1e-12);
  const double pad = 0.05 * std::max(w, h);
  const double stroke = 0.005 * std::max(w, h);
  char head[256];
  std::snprintf(head, sizeof head,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%.8g %.8g "
                "%.8g %.8g\">\n",
                xmin - pad, ymin - pad, w + 2 * pad, h + 2 * pad);
  std::string out = head;
  for (const SampledCurve* c : curves) {
    char open[128];
    std::snprintf(open, sizeof open,
                  "<polyline fill=\"none\" stroke=\"black\" "
                  "stroke-width=\"%.8g\" points=\"",
                  stroke);
    out += open;
    for (std::size_t i = 0; i < c->size(); ++i) {
      char pt[64];
      std::snprintf(pt, sizeof pt, "%.8g,%.8g ", c->xy[i].x, -c->xy[i].y);
      out += pt;
    }
    out += "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace

std::string to_svg(const SampledCurve& c) { return svg_document({&c}); }

nlohmann::json to_json(const SampledCurve& c) {
  nlohmann::json j;
  j["family"] = to_string(c.family);
  nlohmann::json params;
  params["p"] = c.params.p;
  if (c.family != CurveFamily::linear && c.family != CurveFamily::circular)
    params["q"] = c.params.q;
  if (c.params.n > 0) params["n"] = c.params.n;
  if (c.params.r > 0.0) params["r"] = c.params.r;
  if (!c.params.sigma.empty()) params["sigma"] = c.params.sigma;
  if (!c.params.L_vec.empty()) params["L_vec"] = c.params.L_vec;
  j["params"] = params;
  j["s"] = c.s;
  std::vector<double> xs(c.size()), ys(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    xs[i] = c.xy[i].x;
    ys[i] = c.xy[i].y;
  }
  j["x"] = xs;
  j["y"] = ys;
  j["theta"] = c.theta;
  j["k"] = c.k;
  return j;
}

// Internal hook for the network module: expose the svg multi-curve renderer.
namespace detail {
std::string svg_multi(const std::vector<const SampledCurve*>& curves) {
  return svg_document(curves);
}
}  // namespace detail

}  // namespace pelastica
