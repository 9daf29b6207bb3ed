#include "pelastica/liyau.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>

#include "pelastica/errors.hpp"
#include "rational_angle.hpp"

namespace pelastica {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double liyau_bound(double p, int m, bool closed, const Tolerance& tol) {
  if (m < 2) throw DomainError("liyau_bound: multiplicity must be >= 2");
  const double base = closed ? static_cast<double>(m) : static_cast<double>(m - 1);
  return varpi_star(p, tol) * std::pow(base, p);
}

namespace {

// Union-find for single-linkage spatial clustering.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

CurveCheck check_curve(const SampledCurve& curve, double p,
                       double point_tolerance) {
  if (curve.size() < 4) throw DomainError("check_curve: curve too coarse");
  const double diam = curve.diameter();
  const double tol = (point_tolerance > 0.0) ? point_tolerance : 1e-6 * diam;
  if (!(tol > 0.0)) throw DomainError("check_curve: degenerate curve");

  const std::size_t n = curve.size();
  // Spatial hash with cell size = tol; candidate pairs live in the 3x3
  // neighborhood.
  const double cell = tol;
  std::map<std::pair<long, long>, std::vector<int>> grid;
  for (std::size_t i = 0; i < n; ++i) {
    const long cx = static_cast<long>(std::floor(curve.xy[i].x / cell));
    const long cy = static_cast<long>(std::floor(curve.xy[i].y / cell));
    grid[{cx, cy}].push_back(static_cast<int>(i));
  }
  UnionFind uf(n);
  for (const auto& [key, members] : grid) {
    for (long dx = -1; dx <= 1; ++dx)
      for (long dy = -1; dy <= 1; ++dy) {
        const auto it = grid.find({key.first + dx, key.second + dy});
        if (it == grid.end()) continue;
        for (int a : members)
          for (int b : it->second) {
            if (b <= a) continue;
            if (norm(curve.xy[a] - curve.xy[b]) <= tol) uf.unite(a, b);
          }
      }
  }

  std::map<int, std::vector<int>> clusters;
  for (std::size_t i = 0; i < n; ++i)
    clusters[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));

  const bool closed = curve.is_closed();
  const double mean_ds = curve.length() / static_cast<double>(n - 1);
  const double run_break = std::max(10.0 * tol, 5.0 * mean_ds);

  int best = 1;
  for (const auto& [root, members] : clusters) {
    if (members.size() < 2) continue;
    // Parameter runs: consecutive samples within the cluster belong to the
    // same pass; a gap in arclength larger than run_break starts a new pass.
    int runs = 1;
    bool starts_at_0 = (members.front() == 0);
    bool ends_at_L = (members.back() == static_cast<int>(n) - 1);
    for (std::size_t j = 1; j < members.size(); ++j)
      if (curve.s[members[j]] - curve.s[members[j - 1]] > run_break) ++runs;
    if (closed && starts_at_0 && ends_at_L && runs > 1) --runs;  // wrap pass
    if (runs >= 2) {
      // Guard against chained clusters that merge distinct points.
      double cd = 0.0;
      for (std::size_t a = 0; a < members.size(); ++a)
        cd = std::max(cd, norm(curve.xy[members[a]] - curve.xy[members[0]]));
      if (cd > 3.0 * tol)
        throw DomainError("check_curve: point tolerance too coarse, distinct "
                          "clusters merged; decrease it");
      best = std::max(best, runs);
    }
  }

  CurveCheck out;
  out.multiplicity = best;
  out.closed = closed;
  const EnergyReport er = bending_quadrature(curve, p);
  out.normalized_energy = er.normalized;
  if (best >= 2) {
    const double bound = liyau_bound(p, best, closed);
    out.gap = (er.normalized - bound) / bound;
    out.satisfies_bound = er.normalized >= bound * (1.0 - 1e-9);
  } else {
    out.gap = 0.0;
    out.satisfies_bound = true;
  }
  return out;
}

namespace {

LeafedExistence odd_leafed_from_fraction(std::int64_t den, int m) {
  LeafedExistence out;
  if (den % 2 == 1 && den <= m) {
    out.exists = true;
    out.witness = (m % den == 0) ? Witness::rotational_leafed : Witness::mixed_leafed;
  }
  return out;
}

}  // namespace

LeafedExistence leafed_exists(double p, int m, const Tolerance& tol) {
  if (m < 2) throw DomainError("leafed_exists: m must be >= 2");
  if (m % 2 == 0) return {true, Witness::figure_eight};
  const double x = phi_star(p, tol) / kPi;
  const auto rat = detail::detect_rational(x, 1000000, 1e-9);
  if (!rat.found) return {false, Witness::none};
  return odd_leafed_from_fraction(rat.den, m);
}

LeafedExistence leafed_exists(const SpecialExponent& pe, int m) {
  if (m < 2) throw DomainError("leafed_exists: m must be >= 2");
  if (m % 2 == 0) return {true, Witness::figure_eight};
  const std::int64_t g = std::gcd(static_cast<std::int64_t>(pe.m),
                                  static_cast<std::int64_t>(pe.n));
  return odd_leafed_from_fraction(pe.m / g, m);
}

const char* to_string(Witness w) {
  switch (w) {
    case Witness::figure_eight: return "figure_eight";
    case Witness::rotational_leafed: return "rotational_leafed";
    case Witness::mixed_leafed: return "mixed_leafed";
    case Witness::none: return "none";
  }
  return "unknown";
}

OptimalityTable thresholding_table(int m_odd, int m_max, const Tolerance& tol) {
  if (m_odd < 3 || m_odd % 2 == 0)
    throw DomainError("thresholding_table: m_odd must be an odd integer >= 3");
  if (m_max < 2) throw DomainError("thresholding_table: m_max must be >= 2");
  const SpecialExponent pe = p_mn(m_odd, 1, tol);
  const double vp = varpi_star(pe.p_value, tol);
  OptimalityTable table;
  table.p = pe.p_value;
  for (int m = 2; m <= m_max; ++m) {
    OptimalityRow row;
    row.m = m;
    row.bound = vp * std::pow(m, pe.p_value);
    if (m % 2 == 0) {
      row.attainable = true;
      row.witness = Witness::figure_eight;
    } else if (m >= m_odd) {
      row.attainable = true;
      row.witness = (m % m_odd == 0) ? Witness::rotational_leafed
                                     : Witness::mixed_leafed;
    } else {
      row.attainable = false;
      row.witness = Witness::none;
    }
    table.rows.push_back(row);
  }
  return table;
}

nlohmann::json to_json(const OptimalityTable& table) {
  nlohmann::json j;
  j["p"] = table.p;
  j["rows"] = nlohmann::json::array();
  for (const OptimalityRow& r : table.rows) {
    nlohmann::json jr;
    jr["m"] = r.m;
    jr["bound"] = r.bound;
    jr["attainable"] = r.attainable;
    jr["witness"] = to_string(r.witness);
    j["rows"].push_back(jr);
  }
  return j;
}

std::string to_text(const OptimalityTable& table) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "p = %.12g\n", table.p);
  std::string out = buf;
  out += "   m            bound  attainable  witness\n";
  for (const OptimalityRow& r : table.rows) {
    std::snprintf(buf, sizeof buf, "%4d %16.9e  %-10s  %s\n", r.m, r.bound,
                  r.attainable ? "yes" : "no", to_string(r.witness));
    out += buf;
  }
  return out;
}

}  // namespace pelastica
