// Command-line front end: special-function values, curve construction and
// export, pinned-problem classification, energies, multiplicity tables and
// theta-networks, with deterministic text/JSON/CSV/SVG output.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pelastica/classify.hpp"
#include "pelastica/errors.hpp"
#include "pelastica/liyau.hpp"
#include "pelastica/network.hpp"

using nlohmann::json;
using namespace pelastica;

namespace {

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string g12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Atomic output: write to a temporary in the target directory, then rename.
void emit(const std::string& content, const std::string& output_path) {
  if (output_path.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(output_path);
  const fs::path tmp = target.parent_path() / (target.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file: " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::vector<int> parse_signs(const std::string& s) {
  std::vector<int> out;
  for (char c : s) {
    if (c == '+')
      out.push_back(1);
    else if (c == '-')
      out.push_back(-1);
    else if (c != ',' && c != ' ')
      throw DomainError("sign pattern must consist of + and - characters");
  }
  return out;
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    out.push_back(std::stod(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

struct CommonOpts {
  std::string format = "text";
  std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts,
                const std::string& formats = "text,json") {
  cmd->add_option("--format", opts.format, "output format (" + formats + ")");
  cmd->add_option("--output,-o", opts.output, "write to file (atomic)");
}

void check_format(const CommonOpts& opts, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (opts.format == f) return;
  throw DomainError("format '" + opts.format + "' not supported by this subcommand");
}

std::string scalar_out(const std::string& name, double value, const CommonOpts& o) {
  if (o.format == "json") {
    json j;
    j[name] = value;
    return j.dump(2) + "\n";
  }
  return name + " = " + g12(value) + "\n";
}

SampledCurve build_named_curve(const std::string& kind, double p, double q,
                               double r, int n, int halves, int m, bool closed,
                               const std::string& pattern, const std::string& sigma,
                               const std::string& lvec, double leaf_length,
                               double s0, double s1, int samples) {
  if (kind == "arc") return build_arc(p, EndpointRatio(r), n, samples);
  if (kind == "loop") return build_loop(p, EndpointRatio(r), n, samples);
  if (kind == "fig8") return build_figure_eight(p, halves, samples);
  if (kind == "flatcore") {
    if (sigma.empty() && lvec.empty()) {
      return build_flatcore(
          FlatCoreSpec::with_equal_segments(p, EndpointRatio(r), n), samples);
    }
    FlatCoreSpec spec{p, EndpointRatio(r), n, parse_signs(sigma),
                      parse_doubles(lvec)};
    return build_flatcore(spec, samples);
  }
  if (kind == "leafed") {
    const LeafTuple tuple = leaf_tuple(p, m, closed, parse_signs(pattern));
    return build_leafed(p, tuple, leaf_length, samples);
  }
  if (kind == "wavelike") return wavelike(p, q, SRange{s0, s1}, samples);
  if (kind == "borderline") return borderline(p, SRange{s0, s1}, samples);
  if (kind == "orbitlike") return orbitlike(p, q, SRange{s0, s1}, samples);
  if (kind == "circular") return circular(SRange{s0, s1}, samples);
  if (kind == "linear") return linear(SRange{s0, s1}, samples);
  throw DomainError("unknown curve kind: " + kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pinned planar p-elastica toolkit"};
  app.require_subcommand(1);

  // --- special ------------------------------------------------------------
  auto* special = app.add_subcommand("special", "special functions and moduli");
  special->require_subcommand(1);
  double p = 2.0, q = 0.5, r = 0.0, x = 0.0, alpha = 2.0943951023931953;
  int m = 3, n = 1;

  CommonOpts so;
  auto add_scalar_sub = [&](const char* name, const char* help, bool needs_q,
                            bool needs_r) {
    auto* c = special->add_subcommand(name, help);
    c->add_option("--p", p, "exponent p")->required();
    if (needs_q) c->add_option("--q", q, "modulus q")->required();
    if (needs_r) c->add_option("--r", r, "endpoint ratio r")->required();
    add_common(c, so);
    return c;
  };
  auto* sp_phistar = add_scalar_sub("phistar", "crossing half-angle phi*(p)", false, false);
  auto* sp_qstar = add_scalar_sub("qstar", "figure-eight modulus q*(p)", false, false);
  auto* sp_q = add_scalar_sub("q", "Q_p(q) = 2E1/K1 - 1", true, false);
  auto* sp_qtilde = add_scalar_sub("qtilde", "2E1(q) - K1(q)", true, false);
  auto* sp_arcmod = add_scalar_sub("arcmod", "arc modulus for ratio r", false, true);
  auto* sp_loopmod = add_scalar_sub("loopmod", "loop modulus for ratio r", false, true);
  auto* sp_varpi = add_scalar_sub("varpi", "Li-Yau constant varpi*_p", false, false);
  auto* sp_pmn = special->add_subcommand("pmn", "exponent with phi* = n pi / m");
  sp_pmn->add_option("--m", m, "odd m >= 3")->required();
  sp_pmn->add_option("--n", n, "1 <= n < m/2")->required();
  add_common(sp_pmn, so);
  auto* sp_eval = special->add_subcommand("eval", "p-elliptic values at (p,q,x)");
  sp_eval->add_option("--p", p)->required();
  sp_eval->add_option("--q", q)->required();
  sp_eval->add_option("--x", x)->required();
  add_common(sp_eval, so);

  // --- curve ---------------------------------------------------------------
  auto* curve = app.add_subcommand("curve", "construct and export curves");
  std::string curve_kind;
  curve->add_option("kind", curve_kind,
                    "arc|loop|fig8|flatcore|leafed|wavelike|borderline|"
                    "orbitlike|circular|linear")
      ->required();
  int ncurve = 1, halves = 1, samples = 0, mleaf = 2;
  double s0 = 0.0, s1 = 1.0, leaf_length = 1.0;
  bool closed = false;
  std::string sigma_str, lvec_str, pattern_str;
  curve->add_option("--p", p, "exponent p");
  curve->add_option("--q", q, "modulus q");
  curve->add_option("--r", r, "endpoint ratio r");
  curve->add_option("--n", ncurve, "half-period count / loop count");
  curve->add_option("--halves", halves, "figure-eight half-fold count");
  curve->add_option("--m", mleaf, "leaf count");
  curve->add_flag("--closed", closed, "require a closed leafed curve");
  curve->add_option("--pattern", pattern_str, "leaf sign pattern, e.g. ++-");
  curve->add_option("--sigma", sigma_str, "flat-core loop signs, e.g. +-+");
  curve->add_option("--lvec", lvec_str, "flat-core segment lengths a,b,...");
  curve->add_option("--leaf-length", leaf_length, "length of each leaf");
  curve->add_option("--s0", s0, "range start");
  curve->add_option("--s1", s1, "range end");
  curve->add_option("--samples", samples, "sample count (0 = auto)");
  CommonOpts co;
  co.format = "csv";
  add_common(curve, co, "csv,json,svg");

  // --- classify -------------------------------------------------------------
  auto* classify_cmd = app.add_subcommand("classify", "pinned critical points");
  int nmax = 5;
  double length = 1.0;
  classify_cmd->add_option("--p", p)->required();
  classify_cmd->add_option("--r", r, "endpoint ratio |P0-P1|/L")->required();
  classify_cmd->add_option("--L", length, "total length");
  classify_cmd->add_option("--nmax", nmax, "largest half-period count");
  CommonOpts clo;
  clo.format = "json";
  add_common(classify_cmd, clo, "json,text");

  // --- energy ----------------------------------------------------------------
  auto* energy_cmd = app.add_subcommand("energy", "normalized p-bending energies");
  std::string energy_kind;
  energy_cmd->add_option("kind", energy_kind, "arc|loop|flatcore|fig8|varpi")
      ->required();
  bool use_quadrature = false;
  energy_cmd->add_option("--p", p)->required();
  energy_cmd->add_option("--r", r, "endpoint ratio");
  energy_cmd->add_option("--n", ncurve, "half-period count");
  energy_cmd->add_option("--halves", halves, "figure-eight half-fold count");
  energy_cmd->add_option("--samples", samples, "samples for --quadrature");
  energy_cmd->add_flag("--quadrature", use_quadrature,
                       "integrate a sampled curve instead of the closed form");
  CommonOpts eo;
  eo.format = "json";
  add_common(energy_cmd, eo, "json,text");

  // --- liyau -----------------------------------------------------------------
  auto* liyau = app.add_subcommand("liyau", "Li-Yau multiplicity machinery");
  liyau->require_subcommand(1);
  CommonOpts lo;
  int modd = 5, mmax = 9;
  bool open_curve = false;
  auto* ly_table = liyau->add_subcommand("table", "thresholding table at p_modd");
  ly_table->add_option("--modd", modd, "odd threshold multiplicity")->required();
  ly_table->add_option("--mmax", mmax, "largest multiplicity")->required();
  add_common(ly_table, lo, "json,text");
  auto* ly_bound = liyau->add_subcommand("bound", "varpi*_p m^p (or (m-1)^p open)");
  ly_bound->add_option("--p", p)->required();
  ly_bound->add_option("--m", m)->required();
  ly_bound->add_flag("--open", open_curve, "open-curve bound");
  add_common(ly_bound, lo);
  auto* ly_exists = liyau->add_subcommand("exists", "closed m-leafed existence");
  ly_exists->add_option("--p", p)->required();
  ly_exists->add_option("--m", m)->required();
  add_common(ly_exists, lo);
  auto* ly_check = liyau->add_subcommand("check", "build an m-leafed witness and check");
  ly_check->add_option("--p", p)->required();
  ly_check->add_option("--m", m)->required();
  ly_check->add_option("--samples", samples, "sample count (0 = auto)");
  add_common(ly_check, lo);

  // --- network -----------------------------------------------------------------
  auto* network = app.add_subcommand("network", "theta-networks");
  network->require_subcommand(1);
  CommonOpts no;
  int iters = 200, controls = 32;
  auto* nw_test = network->add_subcommand("test", "explicit wavelike competitor");
  nw_test->add_option("--p", p)->required();
  nw_test->add_option("--alpha", alpha, "junction angle")->required();
  nw_test->add_option("--samples", samples);
  add_common(nw_test, no, "json,svg,text");
  auto* nw_bound = network->add_subcommand("bound", "degenerate bound 2^p varpi*_p");
  nw_bound->add_option("--p", p)->required();
  add_common(nw_bound, no);
  auto* nw_min = network->add_subcommand("minimize", "descend from the competitor");
  nw_min->add_option("--p", p)->required();
  nw_min->add_option("--alpha", alpha)->required();
  nw_min->add_option("--iters", iters, "max iterations");
  nw_min->add_option("--controls", controls, "control points per component");
  nw_min->add_option("--samples", samples);
  add_common(nw_min, no, "json,svg,text");

  // --- tables --------------------------------------------------------------------
  auto* tables = app.add_subcommand("tables", "special-function table dump (CSV)");
  double x0t = 0.0, x1t = 3.0;
  int count = 25;
  tables->add_option("--p", p)->required();
  tables->add_option("--q", q)->required();
  tables->add_option("--x0", x0t, "first abscissa");
  tables->add_option("--x1", x1t, "last abscissa");
  tables->add_option("--count", count, "row count");
  CommonOpts to;
  to.format = "csv";
  add_common(tables, to, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
      return app.exit(e);
    json err;
    err["error"] = {{"type", "domain"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  }

  try {
    if (special->parsed()) {
      check_format(so, {"text", "json"});
      if (sp_phistar->parsed()) emit(scalar_out("phi_star", phi_star(p), so), so.output);
      if (sp_qstar->parsed()) emit(scalar_out("q_star", q_star(p), so), so.output);
      if (sp_q->parsed()) emit(scalar_out("Q", Q(p, q), so), so.output);
      if (sp_qtilde->parsed()) emit(scalar_out("Q_tilde", Q_tilde(p, q), so), so.output);
      if (sp_arcmod->parsed())
        emit(scalar_out("arc_modulus", solve_arc_modulus(p, EndpointRatio(r)), so),
             so.output);
      if (sp_loopmod->parsed())
        emit(scalar_out("loop_modulus", solve_loop_modulus(p, EndpointRatio(r)), so),
             so.output);
      if (sp_varpi->parsed()) emit(scalar_out("varpi_star", varpi_star(p), so), so.output);
      if (sp_pmn->parsed()) {
        const SpecialExponent pe = p_mn(m, n);
        if (so.format == "json") {
          json j{{"m", pe.m}, {"n", pe.n}, {"p", pe.p_value}};
          emit(j.dump(2) + "\n", so.output);
        } else {
          emit("p_" + std::to_string(m) + "," + std::to_string(n) + " = " +
                   g12(pe.p_value) + "\n",
               so.output);
        }
      }
      if (sp_eval->parsed()) {
        const PQPair pq(p, q);
        json j;
        j["p"] = p;
        j["q"] = q;
        j["x"] = x;
        j["F1"] = incomplete_F1(pq, x);
        j["F2"] = incomplete_F2(pq, x);
        j["E1"] = incomplete_E1(pq, x);
        j["E2"] = incomplete_E2(p, q, x);
        j["am1"] = am1(pq, x);
        j["am2"] = am2(pq, x);
        j["sn"] = sn_p(pq, x);
        j["cn"] = cn_p(pq, x);
        j["dn"] = dn_p(pq, x);
        if (so.format == "json") {
          emit(j.dump(2) + "\n", so.output);
        } else {
          std::string out;
          for (const char* key : {"F1", "F2", "E1", "E2", "am1", "am2", "sn", "cn", "dn"})
            out += std::string(key) + " = " + g17(j[key].get<double>()) + "\n";
          emit(out, so.output);
        }
      }
      return 0;
    }

    if (curve->parsed()) {
      check_format(co, {"csv", "json", "svg"});
      const SampledCurve c =
          build_named_curve(curve_kind, p, q, r, ncurve, halves, mleaf, closed,
                            pattern_str, sigma_str, lvec_str, leaf_length, s0, s1,
                            samples);
      if (co.format == "csv") emit(to_csv(c), co.output);
      if (co.format == "json") emit(to_json(c).dump() + "\n", co.output);
      if (co.format == "svg") emit(to_svg(c), co.output);
      return 0;
    }

    if (classify_cmd->parsed()) {
      check_format(clo, {"json", "text"});
      PinnedProblem problem{{0.0, 0.0}, {r * length, 0.0}, length, p};
      const ClassificationReport report = classify(problem, nmax);
      if (clo.format == "json") {
        emit(to_json(report).dump(2) + "\n", clo.output);
      } else {
        std::string out = "regime: " + std::string(to_string(report.regime)) + "\n";
        for (const FamilyEntry& e : report.families) {
          out += std::string(to_string(e.kind)) + " n=" + std::to_string(e.n);
          if (e.q) out += " q=" + g12(*e.q);
          out += " energy=" + g12(e.energy);
          out += e.countable ? "" : " (uncountable family)";
          out += "\n";
        }
        out += "minimizer: " + std::string(to_string(report.minimizer.kind)) +
               " n=1 energy=" + g12(report.minimizer.energy) + "\n";
        emit(out, clo.output);
      }
      return 0;
    }

    if (energy_cmd->parsed()) {
      check_format(eo, {"json", "text"});
      EnergyReport report;
      report.p = p;
      if (energy_kind == "varpi") {
        emit(scalar_out("varpi_star", varpi_star(p), eo), eo.output);
        return 0;
      }
      if (use_quadrature) {
        SampledCurve c;
        if (energy_kind == "arc")
          c = build_arc(p, EndpointRatio(r), ncurve, samples);
        else if (energy_kind == "loop")
          c = build_loop(p, EndpointRatio(r), ncurve, samples);
        else if (energy_kind == "fig8")
          c = build_figure_eight(p, halves, samples);
        else if (energy_kind == "flatcore")
          c = build_flatcore(
              FlatCoreSpec::with_equal_segments(p, EndpointRatio(r), ncurve),
              samples);
        else
          throw DomainError("unknown energy kind: " + energy_kind);
        report = bending_quadrature(c, p);
      } else {
        report.method = EnergyMethod::closed_form;
        if (energy_kind == "arc")
          report.normalized = normalized_energy_wave(p, EndpointRatio(r), ncurve,
                                                     WaveKind::arc);
        else if (energy_kind == "loop")
          report.normalized = normalized_energy_wave(p, EndpointRatio(r), ncurve,
                                                     WaveKind::loop);
        else if (energy_kind == "fig8")
          report.normalized =
              normalized_energy_wave(p, EndpointRatio(0.0), halves, WaveKind::arc);
        else if (energy_kind == "flatcore")
          report.normalized = normalized_energy_flat(p, EndpointRatio(r), ncurve);
        else
          throw DomainError("unknown energy kind: " + energy_kind);
      }
      if (eo.format == "json")
        emit(to_json(report).dump(2) + "\n", eo.output);
      else
        emit("normalized = " + g17(report.normalized) + "\n", eo.output);
      return 0;
    }

    if (liyau->parsed()) {
      if (ly_table->parsed()) {
        check_format(lo, {"json", "text"});
        const OptimalityTable table = thresholding_table(modd, mmax);
        emit(lo.format == "json" ? to_json(table).dump(2) + "\n" : to_text(table),
             lo.output);
      }
      if (ly_bound->parsed())
        emit(scalar_out("bound", liyau_bound(p, m, !open_curve), lo), lo.output);
      if (ly_exists->parsed()) {
        const LeafedExistence e = leafed_exists(p, m);
        json j{{"exists", e.exists}, {"witness", to_string(e.witness)}};
        emit(lo.format == "json" ? j.dump(2) + "\n"
                                 : std::string("exists = ") +
                                       (e.exists ? "yes" : "no") + " (witness " +
                                       to_string(e.witness) + ")\n",
             lo.output);
      }
      if (ly_check->parsed()) {
        const LeafTuple tuple = leaf_tuple(p, m, true);
        const SampledCurve c = build_leafed(p, tuple, 1.0, samples);
        const CurveCheck chk = check_curve(c, p);
        json j;
        j["multiplicity"] = chk.multiplicity;
        j["normalized_energy"] = chk.normalized_energy;
        j["closed"] = chk.closed;
        j["satisfies_bound"] = chk.satisfies_bound;
        j["gap"] = chk.gap;
        emit(j.dump(2) + "\n", lo.output);
      }
      return 0;
    }

    if (network->parsed()) {
      if (nw_bound->parsed()) {
        emit(scalar_out("degenerate_bound", degenerate_bound(p), no), no.output);
        return 0;
      }
      check_format(no, {"json", "svg", "text"});
      if (nw_test->parsed()) {
        const ThetaNetwork net = build_test_network(p, alpha, samples);
        if (no.format == "svg")
          emit(to_svg(net), no.output);
        else if (no.format == "json")
          emit(to_json(net, p).dump() + "\n", no.output);
        else
          emit("normalized = " + g17(network_energy(net, p).normalized) + "\n",
               no.output);
      }
      if (nw_min->parsed()) {
        const ThetaNetwork init = build_test_network(p, alpha, samples);
        MinimizeOptions opts;
        opts.max_iterations = iters;
        opts.control_points = controls;
        const MinimizeResult res = minimize_network(p, alpha, init, opts);
        if (no.format == "svg") {
          emit(to_svg(res.network), no.output);
        } else {
          json j;
          j["energy"] = res.energy;
          j["initial_energy"] = network_energy(init, p).normalized;
          j["iterations"] = res.iterations;
          j["converged"] = res.converged;
          j["min_component_length"] = res.min_component_length;
          j["length_floor_hit"] = res.length_floor_hit;
          emit(j.dump(2) + "\n", no.output);
        }
      }
      return 0;
    }

    if (tables->parsed()) {
      check_format(to, {"csv"});
      if (count < 2) throw DomainError("tables: count must be >= 2");
      const PQPair pq(p, q);
      std::string out = "p,q,x,F1,E1,sn,cn,dn\n";
      for (int i = 0; i < count; ++i) {
        const double xi = x0t + (x1t - x0t) * i / (count - 1);
        out += g17(p) + "," + g17(q) + "," + g17(xi) + "," +
               g17(incomplete_F1(pq, xi)) + "," + g17(incomplete_E1(pq, xi)) +
               "," + g17(sn_p(pq, xi)) + "," + g17(cn_p(pq, xi)) + "," +
               g17(dn_p(pq, xi)) + "\n";
      }
      emit(out, to.output);
      return 0;
    }
  } catch (const DomainError& e) {
    json err;
    err["error"] = {{"type", "domain"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    json err;
    err["error"] = {{"type", "domain"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    json err;
    err["error"] = {{"type", "internal"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 0;
}
