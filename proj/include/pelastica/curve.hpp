#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pelastica/geometry.hpp"
#include "pelastica/moduli.hpp"

namespace pelastica {

enum class CurveFamily {
  linear,
  wavelike,
  borderline,
  flatcore,
  orbitlike,
  circular,
  composite
};

const char* to_string(CurveFamily f);

// Family parameters attached to a sampled curve; fields are meaningful only
// where the family uses them.
struct CurveParams {
  double p = 0.0;
  double q = 0.0;
  double r = 0.0;
  int n = 0;
  std::vector<int> sigma;     // flat-core loop signs (+1 / -1)
  std::vector<double> L_vec;  // flat-core segment lengths
};

// Arclength-sampled planar curve. s is strictly increasing with s[0] = 0 for
// constructed curves; theta is a continuous lift of the tangential angle and
// k the signed curvature, so that gamma' = (cos theta, sin theta) and
// k = dtheta/ds up to discretization error.
struct SampledCurve {
  std::vector<double> s;
  std::vector<Vec2> xy;
  std::vector<double> theta;
  std::vector<double> k;
  CurveFamily family = CurveFamily::composite;
  CurveParams params;

  std::size_t size() const { return s.size(); }
  double length() const { return s.empty() ? 0.0 : s.back() - s.front(); }
  double max_abs_curvature() const;
  double diameter() const;
  bool is_closed(double tol_factor = 1e-6) const;
};

struct SRange {
  double s0;
  double s1;
};

// Pass n_samples = 0 to the builders below for the default sampling density
// of 4096 points per full period 2 K_{1,p}(q) (or per unit length for the
// families without a period).
inline constexpr int kSamplesPerPeriod = 4096;

// Canonical arclength parameterizations of the five p-elastica families.
// These return the formulas as-is, with no rigid-motion normalization.
SampledCurve wavelike(double p, double q, SRange range, int n_samples = 0,
                      const Tolerance& tol = default_tolerance());
SampledCurve borderline(double p, SRange range, int n_samples = 0,
                        const Tolerance& tol = default_tolerance());
SampledCurve orbitlike(double p, double q, SRange range, int n_samples = 0,
                       const Tolerance& tol = default_tolerance());
SampledCurve circular(SRange range, int n_samples = 0);
SampledCurve linear(SRange range, int n_samples = 0);

// Concatenation: each subsequent curve is translated so the pieces join
// continuously; the tangential-angle lift is continued with the jump taken
// in (-pi, pi]. Duplicate junction samples are dropped.
SampledCurve concat(const std::vector<SampledCurve>& pieces);

// Pinned critical-point families. Each construction starts at the origin;
// the chord direction and tangential angles follow the canonical wavelike
// frame, in which the endpoints of arcs and loops lie on the x-axis.
SampledCurve build_arc(double p, EndpointRatio r, int n, int n_samples = 0,
                       const Tolerance& tol = default_tolerance());
SampledCurve build_loop(double p, EndpointRatio r, int n, int n_samples = 0,
                        const Tolerance& tol = default_tolerance());
SampledCurve build_figure_eight(double p, int n_halves, int n_samples = 0,
                                const Tolerance& tol = default_tolerance());

// Flat-core specification (p > 2): n borderline loops with signs sigma,
// separated by n+1 straight segments of lengths L_vec subject to
//   sum L_vec = 2 n (r - 1/(p-1)) / (1 - r) * K_p(1).
struct FlatCoreSpec {
  double p;
  EndpointRatio r;
  int n;
  std::vector<int> sigma;     // entries +1 or -1, size n
  std::vector<double> L_vec;  // nonnegative, size n+1

  // The segment-length sum required by the constraint above.
  double required_segment_sum(const Tolerance& tol = default_tolerance()) const;
  // Equal-length segments, alternating signs starting with +.
  static FlatCoreSpec with_equal_segments(double p, EndpointRatio r, int n,
                                          const Tolerance& tol = default_tolerance());
  void validate(const Tolerance& tol = default_tolerance()) const;
};

SampledCurve build_flatcore(const FlatCoreSpec& spec, int n_samples = 0,
                            const Tolerance& tol = default_tolerance());

// Unit tangent directions at the junction of an m-leafed curve; consecutive
// entries differ by a rotation through +-2 phi_star(p).
struct LeafTuple {
  int m;
  std::vector<Vec2> omegas;
};

// Construct a leaf tuple for the given sign pattern (sigma_i in {+1,-1},
// omega_i = R_{sigma_i 2 phi*} omega_{i-1}). An empty pattern selects a
// default: alternating signs for even m; for odd m a closed pattern derived
// from the rational angle phi*/pi when one exists. Closed tuples require
// sum sigma_i * 2 phi* in 2 pi Z; inadmissible patterns throw.
LeafTuple leaf_tuple(double p, int m, bool closed,
                     const std::vector<int>& sign_pattern = {},
                     const Tolerance& tol = default_tolerance());

// C^1 concatenation of m half-fold figure-eights of length leaf_length whose
// junction tangents realize the tuple. The junction is a point of
// multiplicity m.
SampledCurve build_leafed(double p, const LeafTuple& tuple, double leaf_length,
                          int n_samples = 0,
                          const Tolerance& tol = default_tolerance());

// Geometric transforms (preserve the sampling).
SampledCurve translated(const SampledCurve& c, const Vec2& delta);
SampledCurve rotated(const SampledCurve& c, double angle);
SampledCurve reflected_x(const SampledCurve& c);  // across the x-axis
SampledCurve scaled(const SampledCurve& c, double factor);

// Rebuild (s, theta, k) from a point polyline: chordal arclength, central
// tangents, unwrapped angle lift. Used for perturbation studies and the
// network minimizer.
SampledCurve from_points(const std::vector<Vec2>& pts,
                         CurveFamily family = CurveFamily::composite);

// Exports. CSV columns: s,x,y,theta,k with 17 significant digits and LF line
// endings. SVG draws the polyline with an auto-fit viewBox.
std::string to_csv(const SampledCurve& c);
std::string to_svg(const SampledCurve& c);
nlohmann::json to_json(const SampledCurve& c);

}  // namespace pelastica
