#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pelastica/energy.hpp"

namespace pelastica {

// Multiplicity lower bound for the normalized p-bending energy:
// varpi*_p m^p for closed curves, varpi*_p (m-1)^p for open curves.
double liyau_bound(double p, int m, bool closed,
                   const Tolerance& tol = default_tolerance());

// Numeric multiplicity detection plus bound comparison for a sampled curve.
struct CurveCheck {
  int multiplicity = 1;
  double normalized_energy = 0.0;
  bool closed = false;
  bool satisfies_bound = false;
  double gap = 0.0;  // (B - bound) / bound
};

// Detects the maximum number of parameter passes through a common point
// (single-linkage clustering at the given spatial tolerance; default
// 1e-6 times the curve diameter) and compares the curve energy with the
// applicable bound. Throws DomainError when the tolerance merges distinct
// point clusters instead of guessing.
CurveCheck check_curve(const SampledCurve& curve, double p,
                       double point_tolerance = 0.0);

enum class Witness { figure_eight, rotational_leafed, mixed_leafed, none };
const char* to_string(Witness w);

struct LeafedExistence {
  bool exists = false;
  Witness witness = Witness::none;
};

// Existence of a closed m-leafed p-elastica. Even m always admits the
// alternating figure-eight witness. Odd m requires phi*(p)/pi to match a
// rational with odd denominator j <= m; rationality is detected by
// continued fractions truncated at denominator 1e6 within 1e-9, so a
// negative answer means "no match at that tolerance".
LeafedExistence leafed_exists(double p, int m,
                              const Tolerance& tol = default_tolerance());

// Exact-arithmetic variant for exponents produced by p_mn, where
// phi*/pi = n/m by construction.
LeafedExistence leafed_exists(const SpecialExponent& pe, int m);

struct OptimalityRow {
  int m;
  double bound;
  bool attainable;
  Witness witness;
};

struct OptimalityTable {
  double p = 0.0;
  std::vector<OptimalityRow> rows;
};

// Attainability table at p = p_mn(m_odd, 1) for multiplicities 2..m_max:
// attainable exactly when m is even or m >= m_odd.
OptimalityTable thresholding_table(int m_odd, int m_max,
                                   const Tolerance& tol = default_tolerance());

nlohmann::json to_json(const OptimalityTable& table);
std::string to_text(const OptimalityTable& table);

}  // namespace pelastica
