#include "pelastica/network.hpp"

#include <algorithm>
#include <cmath>

#include "pelastica/errors.hpp"
#include "render_detail.hpp"

namespace pelastica {

namespace {

constexpr double kPi = 3.14159265358979323846;

double wrap_to_pi(double a) {
  double w = std::remainder(a, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

double network_scale(const ThetaNetwork& net) {
  double d = 0.0;
  for (const SampledCurve& c : net.curves) d = std::max(d, c.diameter());
  return std::max(d, 1e-300);
}

}  // namespace

void ThetaNetwork::validate(double tol_factor) const {
  const double scale = network_scale(*this);
  for (const SampledCurve& c : curves) {
    if (c.size() < 2 || !(c.length() > tol_factor * scale))
      throw DomainError("ThetaNetwork: degenerate component");
  }
  for (int j = 0; j < 3; ++j) {
    if (norm(curves[j].xy.front() - curves[0].xy.front()) > tol_factor * scale ||
        norm(curves[j].xy.back() - curves[0].xy.back()) > tol_factor * scale)
      throw DomainError("ThetaNetwork: components do not share both junctions");
  }
  const double want[3] = {std::cos(alpha), std::cos(alpha),
                          std::cos(2.0 * kPi - 2.0 * alpha)};
  for (int end = 0; end < 2; ++end) {
    for (int j = 0; j < 3; ++j) {
      const SampledCurve& a = curves[j];
      const SampledCurve& b = curves[(j + 1) % 3];
      const double ta = end == 0 ? a.theta.front() : a.theta.back();
      const double tb = end == 0 ? b.theta.front() : b.theta.back();
      if (std::fabs(std::cos(ta - tb) - want[j]) > tol_factor)
        throw DomainError("ThetaNetwork: junction angle condition violated");
    }
  }
}

EnergyReport network_energy(const ThetaNetwork& net, double p) {
  double length = 0.0, bending = 0.0;
  for (const SampledCurve& c : net.curves) {
    const EnergyReport r = bending_quadrature(c, p);
    length += r.length;
    bending += r.bending;
  }
  EnergyReport out;
  out.p = p;
  out.method = EnergyMethod::quadrature;
  out.length = length;
  out.bending = bending;
  out.normalized = std::pow(length, p - 1.0) * bending;
  return out;
}

ThetaNetwork build_test_network(double p, double alpha, int n_samples,
                                const Tolerance& tol) {
  if (!(alpha > 0.0 && alpha < kPi))
    throw DomainError("build_test_network: alpha must lie in (0, pi)");
  const double phi = phi_star(p, tol);
  if (!(alpha < kPi - phi))
    throw NoSolutionError(
        "build_test_network: requires 0 < alpha < pi - phi_star(p) "
        "(the straight component degenerates otherwise)");
  const double q = std::sin(0.5 * alpha);

  SampledCurve half = wavelike(p, q, SRange{-1.0, 1.0}, 2, tol);
  {
    // Rebuild over the exact half period [-K, K].
    const PQPair pq(p, q);
    const double K = complete_K1(pq, tol);
    half = wavelike(p, q, SRange{-K, K}, n_samples, tol);
  }
  const Vec2 j0 = half.xy.front();
  const Vec2 j1 = half.xy.back();
  const double seg_len = norm(j1 - j0);
  SampledCurve seg = linear(SRange{0.0, seg_len}, n_samples);
  seg = translated(seg, j0);  // runs along +x from j0 to j1 by construction
  SampledCurve mirror = reflected_x(half);

  ThetaNetwork net;
  net.alpha = alpha;
  net.curves = {half, seg, mirror};
  return net;
}

double test_network_energy(double p, double alpha, const Tolerance& tol) {
  if (!(alpha > 0.0 && alpha < kPi))
    throw DomainError("test_network_energy: alpha must lie in (0, pi)");
  const double phi = phi_star(p, tol);
  if (!(alpha < kPi - phi))
    throw NoSolutionError("test_network_energy: alpha outside the window");
  const double q = std::sin(0.5 * alpha);
  const PQPair pq(p, q);
  const double E = complete_E1(pq, tol);
  const double K = complete_K1(pq, tol);
  return std::pow(2.0, 2.0 * p + 1.0) * std::pow(2.0 * E + K, p - 1.0) *
         b_of_q(p, q, tol);
}

double degenerate_bound(double p, const Tolerance& tol) {
  return std::pow(2.0, p) * varpi_star(p, tol);
}

// ---------------------------------------------------------------------------
// Discretized minimizer.

namespace {

// Clamped cubic spline on uniform index parameterization.
struct ClampedSpline {
  std::vector<double> y, sig;

  ClampedSpline(const std::vector<double>& values, double d0, double d1)
      : y(values), sig(values.size(), 0.0) {
    const std::size_t n = y.size();
    std::vector<double> diag(n), rhs(n), off(n, 1.0);
    diag[0] = 2.0;
    rhs[0] = 6.0 * (y[1] - y[0] - d0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      diag[i] = 4.0;
      rhs[i] = 6.0 * (y[i - 1] - 2.0 * y[i] + y[i + 1]);
    }
    diag[n - 1] = 2.0;
    rhs[n - 1] = 6.0 * (d1 - (y[n - 1] - y[n - 2]));
    for (std::size_t i = 1; i < n; ++i) {
      const double m = off[i] / diag[i - 1];
      diag[i] -= m * off[i - 1];
      rhs[i] -= m * rhs[i - 1];
    }
    sig[n - 1] = rhs[n - 1] / diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;)
      sig[i] = (rhs[i] - off[i] * sig[i + 1]) / diag[i];
  }

  double operator()(double t) const {
    const std::size_t n = y.size();
    double ti = std::clamp(t, 0.0, static_cast<double>(n - 1));
    std::size_t i = std::min(static_cast<std::size_t>(ti), n - 2);
    const double u = ti - i;
    const double v = 1.0 - u;
    return v * y[i] + u * y[i + 1] +
           ((v * v * v - v) * sig[i] + (u * u * u - u) * sig[i + 1]) / 6.0;
  }
};

struct ControlNet {
  // Per component: control points including both junctions. Junctions are
  // shared (index 0 and P-1 of every component are the same points).
  int P;
  std::array<std::vector<Vec2>, 3> ctrl;

  Vec2& junction(int end, int comp) {
    return end == 0 ? ctrl[comp].front() : ctrl[comp].back();
  }
};

std::vector<double> pack(const ControlNet& net) {
  std::vector<double> x;
  x.push_back(net.ctrl[0].front().x);
  x.push_back(net.ctrl[0].front().y);
  x.push_back(net.ctrl[0].back().x);
  x.push_back(net.ctrl[0].back().y);
  for (int c = 0; c < 3; ++c)
    for (int i = 1; i + 1 < net.P; ++i) {
      x.push_back(net.ctrl[c][i].x);
      x.push_back(net.ctrl[c][i].y);
    }
  return x;
}

void unpack(const std::vector<double>& x, ControlNet& net) {
  const Vec2 J0{x[0], x[1]}, J1{x[2], x[3]};
  std::size_t k = 4;
  for (int c = 0; c < 3; ++c) {
    net.ctrl[c].front() = J0;
    net.ctrl[c].back() = J1;
    for (int i = 1; i + 1 < net.P; ++i) {
      net.ctrl[c][i] = {x[k], x[k + 1]};
      k += 2;
    }
  }
}

SampledCurve dense_component(const std::vector<Vec2>& ctrl, int resample) {
  const std::size_t P = ctrl.size();
  std::vector<double> xs(P), ys(P);
  for (std::size_t i = 0; i < P; ++i) {
    xs[i] = ctrl[i].x;
    ys[i] = ctrl[i].y;
  }
  // Clamped end derivatives along the first/last control offsets keep the
  // realized junction tangents aligned with the control directions.
  const ClampedSpline sx(xs, xs[1] - xs[0], xs[P - 1] - xs[P - 2]);
  const ClampedSpline sy(ys, ys[1] - ys[0], ys[P - 1] - ys[P - 2]);
  std::vector<Vec2> pts(resample);
  for (int i = 0; i < resample; ++i) {
    const double t = (P - 1) * static_cast<double>(i) / (resample - 1);
    pts[i] = {sx(t), sy(t)};
  }
  return from_points(pts);
}

double discrete_energy(const ControlNet& net, double p, int resample,
                       double* min_len = nullptr) {
  double length = 0.0, bending = 0.0, shortest = 1e300;
  for (int c = 0; c < 3; ++c) {
    const SampledCurve curve = dense_component(net.ctrl[c], resample);
    const EnergyReport r = bending_quadrature(curve, p);
    length += r.length;
    bending += r.bending;
    shortest = std::min(shortest, r.length);
  }
  if (min_len) *min_len = shortest;
  return std::pow(length, p - 1.0) * bending;
}

// Rotate the first/last control offsets so the junction tangents meet at the
// prescribed angles, keeping the middle component as the reference direction.
void project_angles(ControlNet& net, double alpha) {
  for (int end = 0; end < 2; ++end) {
    const int j = (end == 0) ? 1 : net.P - 2;
    const Vec2 J = (end == 0) ? net.ctrl[0].front() : net.ctrl[0].back();
    Vec2 v[3];
    double len[3];
    for (int c = 0; c < 3; ++c) {
      v[c] = net.ctrl[c][j] - J;
      len[c] = std::max(norm(v[c]), 1e-12);
    }
    const double base = angle_of(v[1]);
    double s0 = wrap_to_pi(angle_of(v[0]) - base) < 0.0 ? -1.0 : 1.0;
    double s2 = wrap_to_pi(angle_of(v[2]) - base) < 0.0 ? -1.0 : 1.0;
    if (s0 == s2) {
      s0 = -1.0;
      s2 = 1.0;
    }
    net.ctrl[0][j] = J + len[0] * unit_from_angle(base + s0 * alpha);
    net.ctrl[2][j] = J + len[2] * unit_from_angle(base + s2 * alpha);
  }
}

}  // namespace

MinimizeResult minimize_network(double p, double alpha, const ThetaNetwork& init,
                                const MinimizeOptions& options) {
  init.validate(1e-6);
  if (options.control_points < 6)
    throw DomainError("minimize_network: need at least 6 control points");

  const double scale = network_scale(init);
  const int P = options.control_points;
  ControlNet net;
  net.P = P;
  for (int c = 0; c < 3; ++c) {
    const SampledCurve& curve = init.curves[c];
    net.ctrl[c].resize(P);
    for (int i = 0; i < P; ++i) {
      const std::size_t idx =
          static_cast<std::size_t>(std::lround(static_cast<double>(i) *
                                               (curve.size() - 1) / (P - 1)));
      net.ctrl[c][i] = curve.xy[idx];
    }
  }
  // Components must share the junction control points exactly.
  for (int c = 1; c < 3; ++c) {
    net.ctrl[c].front() = net.ctrl[0].front();
    net.ctrl[c].back() = net.ctrl[0].back();
  }
  project_angles(net, alpha);

  std::vector<double> x = pack(net);
  double min_len = 0.0;
  double energy = discrete_energy(net, p, options.resample, &min_len);

  MinimizeResult result;
  result.length_floor_hit = false;
  const double floor = options.min_length_factor * scale;
  double step = 0.05 * scale;
  int iter = 0;
  const double fd_eps = 1e-6 * scale;

  for (; iter < options.max_iterations; ++iter) {
    if (min_len < floor) {
      result.length_floor_hit = true;
      break;
    }
    // Forward-difference gradient of the unconstrained discrete energy.
    std::vector<double> g(x.size());
    {
      ControlNet probe = net;
      for (std::size_t i = 0; i < x.size(); ++i) {
        std::vector<double> xp = x;
        xp[i] += fd_eps;
        unpack(xp, probe);
        g[i] = (discrete_energy(probe, p, options.resample) - energy) / fd_eps;
      }
    }
    double gnorm = 0.0;
    for (double v : g) gnorm = std::max(gnorm, std::fabs(v));
    if (gnorm == 0.0) {
      result.converged = true;
      break;
    }

    bool accepted = false;
    while (step > options.step_tolerance * scale) {
      std::vector<double> xn = x;
      for (std::size_t i = 0; i < x.size(); ++i) xn[i] -= step / gnorm * g[i];
      ControlNet cand = net;
      unpack(xn, cand);
      project_angles(cand, alpha);
      double cand_min_len = 0.0;
      const double cand_energy =
          discrete_energy(cand, p, options.resample, &cand_min_len);
      if (cand_energy < energy - 1e-14 * std::fabs(energy)) {
        net = cand;
        x = pack(net);
        energy = cand_energy;
        min_len = cand_min_len;
        step = std::min(step * 1.5, 0.2 * scale);
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      result.converged = true;
      break;
    }
  }

  ThetaNetwork out;
  out.alpha = alpha;
  for (int c = 0; c < 3; ++c)
    out.curves[c] = dense_component(net.ctrl[c], options.resample);
  // Honor the descent contract against the dense init energy; discretization
  // noise must not hand back a worse network.
  const double final_dense = network_energy(out, p).normalized;
  const double init_dense = network_energy(init, p).normalized;
  if (final_dense <= init_dense) {
    result.network = out;
    result.energy = final_dense;
  } else {
    result.network = init;
    result.energy = init_dense;
  }
  result.iterations = iter;
  result.min_component_length = min_len;
  return result;
}

nlohmann::json to_json(const ThetaNetwork& net, double p) {
  nlohmann::json j;
  j["alpha"] = net.alpha;
  j["p"] = p;
  j["curves"] = nlohmann::json::array();
  for (const SampledCurve& c : net.curves) j["curves"].push_back(to_json(c));
  j["energy"] = to_json(network_energy(net, p));
  return j;
}

std::string to_svg(const ThetaNetwork& net) {
  return detail::svg_multi({&net.curves[0], &net.curves[1], &net.curves[2]});
}

}  // namespace pelastica
