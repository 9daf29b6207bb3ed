#include "pelastica/classify.hpp"

#include <cmath>

#include "pelastica/errors.hpp"

namespace pelastica {

void PinnedProblem::validate() const {
  if (!(p > 1.0)) throw DomainError("PinnedProblem: p must exceed 1");
  if (!(L > 0.0)) throw DomainError("PinnedProblem: length must be positive");
  if (!(norm(P1 - P0) < L * (1.0 - 1e-12)))
    throw DomainError("PinnedProblem: requires |P0 - P1| < L");
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::r_zero: return "r_zero";
    case Regime::r_small: return "r_small";
    case Regime::r_large: return "r_large";
  }
  return "unknown";
}

const char* to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::figure_eight: return "figure_eight";
    case FamilyKind::arc: return "arc";
    case FamilyKind::loop: return "loop";
    case FamilyKind::flatcore_family: return "flatcore_family";
  }
  return "unknown";
}

ClassificationReport classify(const PinnedProblem& problem, int n_max,
                              const Tolerance& tol) {
  problem.validate();
  if (n_max < 1) throw DomainError("classify: n_max must be >= 1");
  const double p = problem.p;
  const double r = problem.r();
  const double loop_window = (p > 2.0) ? 1.0 / (p - 1.0) : 1.0;

  ClassificationReport report;
  report.p = p;
  report.r = r;
  report.regime = (r == 0.0) ? Regime::r_zero
                  : (r < loop_window) ? Regime::r_small
                                      : Regime::r_large;

  const EndpointRatio ratio(r);
  if (report.regime == Regime::r_zero) {
    const double qs = q_star(p, tol);
    for (int n = 1; n <= n_max; ++n) {
      FamilyEntry e;
      e.kind = FamilyKind::figure_eight;
      e.n = n;
      e.q = qs;
      e.energy = normalized_energy_wave(p, ratio, n, WaveKind::arc, tol);
      report.families.push_back(e);
    }
  } else {
    const double q_arc = solve_arc_modulus(p, ratio, tol);
    for (int n = 1; n <= n_max; ++n) {
      FamilyEntry e;
      e.kind = FamilyKind::arc;
      e.n = n;
      e.q = q_arc;
      e.energy = normalized_energy_wave(p, ratio, n, WaveKind::arc, tol);
      report.families.push_back(e);
    }
    if (report.regime == Regime::r_small) {
      const double q_loop = solve_loop_modulus(p, ratio, tol);
      for (int n = 1; n <= n_max; ++n) {
        FamilyEntry e;
        e.kind = FamilyKind::loop;
        e.n = n;
        e.q = q_loop;
        e.energy = normalized_energy_wave(p, ratio, n, WaveKind::loop, tol);
        report.families.push_back(e);
      }
    } else {
      const double K1 = complete_K1(PQPair(p, 1.0), tol);
      for (int n = 1; n <= n_max; ++n) {
        FamilyEntry e;
        e.kind = FamilyKind::flatcore_family;
        e.n = n;
        e.energy = normalized_energy_flat(p, ratio, n, tol);
        e.countable = false;
        e.flat_segment_sum = 2.0 * n * (r - 1.0 / (p - 1.0)) / (1.0 - r) * K1;
        report.families.push_back(e);
      }
    }
  }

  report.minimizer = report.families.front();  // n = 1 arc / figure-eight
  return report;
}

SampledCurve realize(const FamilyEntry& entry, const PinnedProblem& problem,
                     int sample_density, const std::optional<FlatCoreSpec>& flat,
                     const Tolerance& tol) {
  problem.validate();
  const double p = problem.p;
  const EndpointRatio ratio(problem.r());

  SampledCurve canonical;
  switch (entry.kind) {
    case FamilyKind::figure_eight:
      canonical = build_figure_eight(p, entry.n, sample_density, tol);
      break;
    case FamilyKind::arc:
      canonical = build_arc(p, ratio, entry.n, sample_density, tol);
      break;
    case FamilyKind::loop:
      canonical = build_loop(p, ratio, entry.n, sample_density, tol);
      break;
    case FamilyKind::flatcore_family: {
      const FlatCoreSpec spec =
          flat ? *flat
               : FlatCoreSpec::with_equal_segments(p, ratio, entry.n, tol);
      canonical = build_flatcore(spec, sample_density, tol);
      break;
    }
  }

  // Similarity transform onto the data: scale to length L, rotate the chord
  // onto P1 - P0, translate to P0.
  SampledCurve placed = scaled(canonical, problem.L / canonical.length());
  const Vec2 chord = placed.xy.back() - placed.xy.front();
  const Vec2 target = problem.P1 - problem.P0;
  if (norm(chord) > 1e-9 * problem.L && norm(target) > 0.0)
    placed = rotated(placed, angle_of(target) - angle_of(chord));
  placed = translated(placed, problem.P0 - placed.xy.front());
  return placed;
}

nlohmann::json to_json(const ClassificationReport& report) {
  nlohmann::json j;
  j["p"] = report.p;
  j["r"] = report.r;
  j["regime"] = to_string(report.regime);
  auto entry_json = [](const FamilyEntry& e) {
    nlohmann::json je;
    je["kind"] = to_string(e.kind);
    je["n"] = e.n;
    if (e.q)
      je["q"] = *e.q;
    else
      je["q"] = nullptr;
    je["energy"] = e.energy;
    je["countable"] = e.countable;
    if (e.flat_segment_sum) je["flat_segment_sum"] = *e.flat_segment_sum;
    return je;
  };
  j["families"] = nlohmann::json::array();
  for (const FamilyEntry& e : report.families) j["families"].push_back(entry_json(e));
  j["minimizer"] = entry_json(report.minimizer);
  return j;
}

}  // namespace pelastica
