#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "pelastica/energy.hpp"

namespace pelastica {

// Pinned boundary data: endpoints, total length and exponent. Admissible
// when |P0 - P1| < L.
struct PinnedProblem {
  Vec2 P0;
  Vec2 P1;
  double L;
  double p;

  double r() const { return norm(P1 - P0) / L; }
  void validate() const;
};

enum class Regime { r_zero, r_small, r_large };
enum class FamilyKind { figure_eight, arc, loop, flatcore_family };

const char* to_string(Regime r);
const char* to_string(FamilyKind k);

struct FamilyEntry {
  FamilyKind kind;
  int n = 0;
  std::optional<double> q;  // wavelike modulus; absent for flat-core families
  double energy = 0.0;      // normalized p-bending energy
  bool countable = true;
  // Flat-core families are parametric (uncountable): the segment-length sum
  // fixed by the constraint, realized by any nonnegative split.
  std::optional<double> flat_segment_sum;
};

// All pinned critical-point families for (p, r) up to half-period count
// n_max, with closed-form energies and the designated minimizer (always the
// (p,r,1)-arc; at r = 0 the half-fold figure-eight).
struct ClassificationReport {
  double p = 0.0;
  double r = 0.0;
  Regime regime = Regime::r_zero;
  std::vector<FamilyEntry> families;
  FamilyEntry minimizer;
};

ClassificationReport classify(const PinnedProblem& problem, int n_max = 5,
                              const Tolerance& tol = default_tolerance());

// Construct the curve of a report entry and place it by a similarity
// transform so that it runs from P0 to P1 with length L. Flat-core entries
// use the equal-segment default unless a spec is supplied.
SampledCurve realize(const FamilyEntry& entry, const PinnedProblem& problem,
                     int sample_density = 0,
                     const std::optional<FlatCoreSpec>& flat = std::nullopt,
                     const Tolerance& tol = default_tolerance());

nlohmann::json to_json(const ClassificationReport& report);

}  // namespace pelastica
