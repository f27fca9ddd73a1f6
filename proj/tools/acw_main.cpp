#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "acw/calculus.hpp"
#include "acw/error.hpp"
#include "acw/fourier.hpp"
#include "acw/io.hpp"
#include "acw/limits.hpp"
#include "acw/ruzsa.hpp"
#include "acw/scenario.hpp"

using namespace acw;

namespace {

struct Globals {
  std::string group_path;
  std::uint64_t seed = 1;
  std::uint64_t cap_order = 0;
  std::string out;
  std::string format = "json";
};

void flatten(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), os);
  } else {
    os << prefix << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void emit(const Globals& g, const json& j) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!g.out.empty()) {
    file.open(g.out);
    if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + g.out);
    os = &file;
  }
  if (g.format == "tsv")
    flatten(j, "", *os);
  else
    *os << j.dump(2) << '\n';
}

// Positional arguments, with the group file optionally supplied by --group.
struct Inputs {
  GroupSpec group;
  std::vector<std::string> rest;
};

Inputs resolve(const Globals& g, const std::vector<std::string>& pos, std::size_t need) {
  Inputs in;
  std::size_t k = 0;
  if (!g.group_path.empty()) {
    in.group = read_group_file(g.group_path);
  } else {
    if (pos.empty()) throw Error(ErrorKind::InvalidArgument, "a group file is required (positional or --group)");
    in.group = read_group_file(pos[0]);
    k = 1;
  }
  in.rest.assign(pos.begin() + static_cast<std::ptrdiff_t>(k), pos.end());
  if (in.rest.size() < need)
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(need) + " input file(s) after the group");
  return in;
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy and Fourier tools for sets and distributions on finite abelian groups", "acw"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--group", gl.group_path, "Group file {\"moduli\": [...]}");
  app.add_option("--seed", gl.seed, "Random seed");
  app.add_option("--cap-order", gl.cap_order, "Largest group order enumerated or transformed");
  app.add_option("--out", gl.out, "Write output to this file instead of stdout");
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));

  std::vector<std::string> pos;
  int exit_code = 0;

  auto* entropy_cmd = app.add_subcommand("entropy", "Shannon and Renyi entropies of a distribution");
  entropy_cmd->add_option("inputs", pos, "[group.json] dist.txt");

  auto* dist_cmd = app.add_subcommand("dist", "Operations on distributions");
  std::string op = "convolve";
  int n = 2;
  dist_cmd->add_option("inputs", pos, "[group.json] p.txt [q.txt]");
  dist_cmd->add_option("--op", op, "convolve | difference | ruzsa | kl | l1 | iterate | fibers")
      ->check(CLI::IsMember({"convolve", "difference", "ruzsa", "kl", "l1", "iterate", "fibers"}));
  dist_cmd->add_option("--n", n, "Number of summands for iterate / fibers");

  auto* tau_cmd = app.add_subcommand("tau-minimize", "Minimize tau over fiber moves starting at (U_A, U_A)");
  MinimizeOptions mo;
  int growth_scale = 32;
  tau_cmd->add_option("inputs", pos, "[group.json] set.txt");
  tau_cmd->add_option("--n-hi", mo.n_hi, "Largest n searched (0: from K)");
  tau_cmd->add_option("--max-steps", mo.max_steps, "Step limit");
  tau_cmd->add_flag("--polish", mo.polish, "Projected-gradient refinement when fiber moves stall");
  tau_cmd->add_option("--growth-scale", growth_scale, "Scale of the growth certificate of the terminal X");

  auto* growth_cmd = app.add_subcommand("growth", "Growth certificate H(nX) for n <= scale");
  growth_cmd->add_option("inputs", pos, "[group.json] dist.txt");
  growth_cmd->add_option("--scale", growth_scale, "Largest n");

  auto* dft_cmd = app.add_subcommand("dft", "Fourier transform and large spectra");
  double lspec_eps = 0.0, spec_eps = 0.0;
  dft_cmd->add_option("inputs", pos, "[group.json] dist.txt");
  dft_cmd->add_option("--lspec", lspec_eps, "Report {|p^|^2 >= 1 - eps^2/2}");
  dft_cmd->add_option("--spec", spec_eps, "Report {|p^| >= eps}");

  auto* bohr_cmd = app.add_subcommand("bohr", "Enumerate a Bohr set and check its size bounds");
  double regular_eps = 0.0;
  int prog_r = -1;
  bohr_cmd->add_option("inputs", pos, "[group.json] bohr.json");
  bohr_cmd->add_option("--regular", regular_eps, "Also find a regular radius in [eps, 2 eps]");
  bohr_cmd->add_option("--progression", prog_r, "Progression certificate for this r");

  auto* bog_cmd = app.add_subcommand("bogolyubov", "Bohr set inside kA - kA");
  std::string local_path;
  bog_cmd->add_option("inputs", pos, "[group.json] set.txt");
  bog_cmd->add_option("--local", local_path, "Regular Bohr set containing A");

  auto* cover_cmd = app.add_subcommand("cover", "Covering certificate for a set");
  CoverOptions co;
  cover_cmd->add_option("inputs", pos, "[group.json] set.txt");
  cover_cmd->add_option("--C", co.C, "Constant in l m <= C d^5");
  cover_cmd->add_option("--growth-scale", co.growth_scale, "Scale of the growth certificate");
  cover_cmd->add_option("--n-hi", co.tau.n_hi, "Largest n in the decrement search");
  cover_cmd->add_option("--max-steps", co.tau.max_steps, "Step limit of the minimization");

  auto* calc_cmd = app.add_subcommand("verify-calculus", "Randomized check of the entropy inequalities");
  std::size_t cases = 100;
  std::uint64_t group_max = 512;
  calc_cmd->add_option("--cases", cases, "Number of random triples");
  calc_cmd->add_option("--group-max", group_max, "Largest group order");

  auto* scen_cmd = app.add_subcommand("scenario", "Generate a test set or distribution");
  std::string kind;
  std::int64_t N = 101, length = 10, step = 1, interval = 8, M = 4096, spacing = 64;
  std::vector<std::int64_t> dims{4, 4};
  std::size_t noise = 4, K = 4, count = 4, dd = 1;
  std::vector<std::int64_t> moduli{8, 8};
  std::vector<std::string> gens{"1,0"};
  scen_cmd->add_option("kind", kind, "ap | box | coset | subgroup-noise | a2 | spaced-aps | binomial")
      ->required()
      ->check(CLI::IsMember(scenario_kinds()));
  scen_cmd->add_option("--N", N, "Modulus");
  scen_cmd->add_option("--length", length, "Progression length");
  scen_cmd->add_option("--step", step, "Progression step");
  scen_cmd->add_option("--dims", dims, "Box side lengths");
  scen_cmd->add_option("--moduli", moduli, "Group moduli (coset, subgroup-noise)");
  scen_cmd->add_option("--gens", gens, "Subgroup generators \"r1,...,rk\"");
  scen_cmd->add_option("--noise", noise, "Extra random elements");
  scen_cmd->add_option("--interval", interval, "Interval length (a2)");
  scen_cmd->add_option("--M", M, "Second modulus (a2)");
  scen_cmd->add_option("--K", K, "Spread set size (a2)");
  scen_cmd->add_option("--count", count, "Number of progressions (spaced-aps)");
  scen_cmd->add_option("--spacing", spacing, "Gap between progressions (spaced-aps)");
  scen_cmd->add_option("--n", n, "Binomial trials");
  scen_cmd->add_option("--d", dd, "Binomial dimension");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gl.cap_order > 0) {
      Limits l = limits();
      l.enumeration = gl.cap_order;
      l.dft_order = std::min<std::uint64_t>(l.dft_order, gl.cap_order);
      set_limits(l);
    }
    json out;
    if (entropy_cmd->parsed()) {
      auto in = resolve(gl, pos, 1);
      const Dist p = read_dist_file(in.group, in.rest[0]);
      out = {{"support", p.support_size()}, {"H", entropy(p)}, {"H2", renyi(p, 2)}, {"H0", renyi(p, 0)}};
    } else if (dist_cmd->parsed()) {
      const bool binary = op == "convolve" || op == "difference" || op == "ruzsa" || op == "kl" || op == "l1";
      auto in = resolve(gl, pos, binary ? 2 : 1);
      const Dist p = read_dist_file(in.group, in.rest[0]);
      if (op == "iterate") {
        out = dist_to_json(iterate_sum(p, n));
      } else if (op == "fibers") {
        const auto f = fiber_family(p, n);
        json fibers = json::array();
        for (const auto& x : f.fibers)
          fibers.push_back({{"t", element_to_json(in.group, x.key)}, {"weight", x.weight}, {"law", dist_to_json(x.law)["atoms"]}});
        out = {{"n", n}, {"fibers", fibers}};
      } else {
        const Dist q = read_dist_file(in.group, in.rest[1]);
        if (op == "convolve") out = dist_to_json(convolve(p, q));
        if (op == "difference") out = dist_to_json(convolve(p, q, Sign::minus));
        if (op == "ruzsa") out = {{"d", ruzsa_dist(p, q)}};
        if (op == "kl") out = {{"kl", kl_divergence(p, q)}};
        if (op == "l1") out = {{"l1", l1_distance(p, q)}};
      }
    } else if (tau_cmd->parsed()) {
      auto in = resolve(gl, pos, 1);
      const auto a = read_set_file(in.group, in.rest[0]);
      const auto stats = doubling_constant(in.group, a);
      const auto r = minimize_tau(in.group, stats.A, stats, mo);
      out = trace_to_json(in.group, r.trace);
      out["K"] = stats.K;
      out["growth"] = growth_to_json(growth_certificate(r.x, growth_scale));
    } else if (growth_cmd->parsed()) {
      auto in = resolve(gl, pos, 1);
      const Dist p = read_dist_file(in.group, in.rest[0]);
      const auto c = growth_certificate(p, growth_scale);
      out = growth_to_json(c);
      if (c.d_hat > 1.0) {
        const auto sg = small_growth_check(p, c.d_hat);
        out["small_growth"] = {{"n", sg.n}, {"delta", sg.delta}, {"ok", sg.delta <= 1.0 / 16.0 + 1e-9}};
      }
    } else if (dft_cmd->parsed()) {
      auto in = resolve(gl, pos, 1);
      const Dist p = read_dist_file(in.group, in.rest[0]);
      const auto t = dft(p);
      json vals = json::array();
      for (Index c = 0; c < in.group.order(); ++c) vals.push_back({{"chi", element_to_json(in.group, c)}, {"value", complex_json(t.values[c])}});
      out = {{"values", vals}};
      if (lspec_eps > 0.0) out["lspec"] = elements_to_json(in.group, lspec(t, lspec_eps));
      if (spec_eps > 0.0) out["spec"] = elements_to_json(in.group, spec(t, spec_eps));
    } else if (bohr_cmd->parsed()) {
      auto in = resolve(gl, pos, 1);
      const auto b = read_bohr_file(in.group, in.rest[0]);
      const auto sc = bohr_size_check(b);
      out = bohr_to_json(b);
      out["size_check"] = {{"lower_bound", sc.lower_bound}, {"lower_ok", sc.lower_ok},
                           {"pigeonhole_bound", sc.pigeonhole_bound}, {"pigeonhole_ok", sc.pigeonhole_ok},
                           {"doubling_checked", sc.doubling_checked}, {"doubled_size", sc.doubled_size},
                           {"doubling_ok", sc.doubling_ok}};
      if (regular_eps > 0.0) {
        const auto rr = regular_radius_ex(in.group, b.chars, regular_eps);
        out["regular"] = {{"rho", rr.rho}, {"violation", rr.violation}, {"passing", rr.passing}, {"exact", rr.exact_checked}};
      }
      if (prog_r >= 0) out["progression"] = progression_to_json(progression_certificate(b, prog_r));
    } else if (bog_cmd->parsed()) {
      auto in = resolve(gl, pos, 1);
      const auto a = read_set_file(in.group, in.rest[0]);
      const auto r = local_path.empty() ? weak_bogolyubov_global(in.group, a)
                                        : weak_bogolyubov_local(read_bohr_file(in.group, local_path), a);
      out = {{"chars", elements_to_json(in.group, r.bohr.chars)},
             {"radius", r.bohr.radius},
             {"size", r.bohr.size()},
             {"k", r.k},
             {"k_formula", r.k_formula},
             {"margin", r.margin},
             {"margin_required", r.margin_required},
             {"margin_ok", r.margin_ok},
             {"contained", r.contained}};
      if (!r.margin_ok) exit_code = 2;
    } else if (cover_cmd->parsed()) {
      auto in = resolve(gl, pos, 1);
      const auto a = read_set_file(in.group, in.rest[0]);
      const auto c = freiman_cover(in.group, a, co);
      out = certificate_to_json(c);
      if (!c.verified()) exit_code = 1;
      else if (!c.hypotheses_hold()) exit_code = 2;
    } else if (calc_cmd->parsed()) {
      const auto rep = verify_calculus(cases, gl.seed, group_max);
      json entries = json::object();
      for (const auto& e : rep.entries)
        entries[e.name] = {{"count", e.count}, {"violations", e.violations}, {"worst_slack", e.worst}};
      out = {{"cases", rep.cases}, {"seed", rep.seed}, {"group_max", rep.group_max}, {"all_hold", rep.all_hold()},
             {"inequalities", entries}};
      if (!rep.all_hold()) exit_code = 1;
    } else if (scen_cmd->parsed()) {
      Scenario s;
      if (kind == "ap") s = ap_scenario(N, length, step);
      if (kind == "box") s = box_scenario(N, dims);
      if (kind == "spaced-aps") s = spaced_aps_scenario(N, count, length, spacing);
      if (kind == "a2") s = a2_scenario(N, interval, M, K, gl.seed);
      if (kind == "binomial") s = binomial_scenario(n, dd);
      if (kind == "coset" || kind == "subgroup-noise") {
        const GroupSpec g = make_group(moduli);
        std::vector<Index> gi;
        for (const auto& t : gens) gi.push_back(parse_element(g, t));
        s = kind == "coset" ? coset_scenario(g, gi) : subgroup_noise_scenario(g, gi, noise, gl.seed);
      }
      out = {{"kind", s.name}, {"group", group_to_json(s.group)}, {"wrap_free", s.wrap_free}};
      if (s.dist) {
        out["dist"] = dist_to_json(*s.dist)["atoms"];
        out["H"] = entropy(*s.dist);
        out["d_self"] = ruzsa_dist(*s.dist, *s.dist);
      } else {
        const auto st = doubling_constant(s.group, s.set);
        out["set"] = elements_to_json(s.group, s.set);
        out["size"] = s.set.size();
        out["sumset_size"] = st.sumset_size;
        out["K"] = st.K;
      }
    }
    emit(gl, out);
  } catch (const Error& e) {
    std::cerr << "acw: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "acw: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
