#pragma once

#include <array>
#include <string>

#include <json.hpp>

#include "pelastica/energy.hpp"

namespace pelastica {

// Theta-network: three curves sharing both endpoints (triple junctions) with
// junction angles (alpha, alpha, 2 pi - 2 alpha) between consecutive tangents.
struct ThetaNetwork {
  std::array<SampledCurve, 3> curves;
  double alpha = 0.0;

  // Throws DomainError when junctions or angle conditions fail at the given
  // relative tolerance.
  void validate(double tol_factor = 1e-8) const;
};

// Sum of component lengths and bending energies; normalized combination.
EnergyReport network_energy(const ThetaNetwork& net, double p);

// The explicit competitor: a wavelike half-period, a straight segment and the
// reflected half-period, meeting at angles (alpha, alpha, 2 pi - 2 alpha) with
// modulus q = sin(alpha/2). Requires 0 < alpha < pi - phi_star(p), which is
// exactly the window where the segment length 2(2 E1 - K1) stays positive.
ThetaNetwork build_test_network(double p, double alpha, int n_samples = 0,
                                const Tolerance& tol = default_tolerance());

// Closed-form normalized energy of the test network:
//   2^{2p+1} (2 E1(q) + K1(q))^{p-1} b(q)  at q = sin(alpha/2).
double test_network_energy(double p, double alpha,
                           const Tolerance& tol = default_tolerance());

// Energy floor of degenerate (two-component) configurations: 2^p varpi*_p.
double degenerate_bound(double p, const Tolerance& tol = default_tolerance());

struct MinimizeOptions {
  int max_iterations = 200;
  int control_points = 32;   // per component, including the junctions
  int resample = 257;        // dense samples per component for the energy
  double min_length_factor = 1e-3;  // floor relative to the network scale
  double step_tolerance = 1e-10;
};

struct MinimizeResult {
  ThetaNetwork network;
  double energy = 0.0;
  int iterations = 0;
  bool converged = false;
  double min_component_length = 0.0;
  bool length_floor_hit = false;
};

// Local descent on the discretized normalized energy over junction positions
// and interior spline control points, with the junction angle constraint
// enforced by projection after each step. Deterministic; the final energy
// never exceeds the initial one.
MinimizeResult minimize_network(double p, double alpha, const ThetaNetwork& init,
                                const MinimizeOptions& options = {});

nlohmann::json to_json(const ThetaNetwork& net, double p);
std::string to_svg(const ThetaNetwork& net);

}  // namespace pelastica
