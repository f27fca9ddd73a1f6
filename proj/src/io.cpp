#include "acw/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "acw/error.hpp"

namespace acw {

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return in;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& s) { return trim(s.substr(0, s.find('#'))); }

}  // namespace

GroupSpec group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("moduli") || !j["moduli"].is_array())
    throw Error(ErrorKind::ParseError, "group JSON needs a \"moduli\" array");
  std::vector<std::int64_t> m;
  for (const auto& v : j["moduli"]) {
    if (!v.is_number_integer()) throw Error(ErrorKind::ParseError, "moduli must be integers");
    m.push_back(v.get<std::int64_t>());
  }
  return make_group(std::move(m));
}

json group_to_json(const GroupSpec& g) {
  return json{{"moduli", std::vector<std::int64_t>(g.moduli().begin(), g.moduli().end())}};
}

GroupSpec read_group_file(const std::string& path) {
  auto in = open_in(path);
  try {
    return group_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

std::string format_element(const GroupSpec& g, Index x) {
  const auto e = g.decode(x);
  std::string out;
  for (std::size_t i = 0; i < e.coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e.coords[i]);
  }
  return out;
}

Index parse_element(const GroupSpec& g, const std::string& text) {
  std::vector<std::int64_t> coords;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part = trim(part);
    if (part.empty()) throw Error(ErrorKind::ParseError, "empty coordinate in \"" + text + "\"");
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad coordinate \"" + part + "\"");
    }
    if (used != part.size()) throw Error(ErrorKind::ParseError, "bad coordinate \"" + part + "\"");
    coords.push_back(v);
  }
  if (coords.size() != g.rank())
    throw Error(ErrorKind::DimensionMismatch, "element \"" + text + "\" has " + std::to_string(coords.size()) +
                                                  " coordinates, group rank is " + std::to_string(g.rank()));
  return g.encode(coords);
}

json element_to_json(const GroupSpec& g, Index x) { return g.decode(x).coords; }

json elements_to_json(const GroupSpec& g, std::span<const Index> xs) {
  json a = json::array();
  for (auto x : xs) a.push_back(element_to_json(g, x));
  return a;
}

std::vector<Index> parse_set(const GroupSpec& g, std::istream& in) {
  std::vector<Index> out;
  std::string line;
  while (std::getline(in, line)) {
    line = strip_comment(line);
    if (!line.empty()) out.push_back(parse_element(g, line));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Index> read_set_file(const GroupSpec& g, const std::string& path) {
  auto in = open_in(path);
  return parse_set(g, in);
}

void write_set(const GroupSpec& g, std::span<const Index> s, std::ostream& out) {
  for (auto x : s) out << format_element(g, x) << '\n';
}

Dist parse_dist(const GroupSpec& g, std::istream& in) {
  std::vector<Atom> atoms;
  std::string line;
  int lineno = 0;
  double total = 0.0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_comment(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": missing ':'");
    const Index x = parse_element(g, line.substr(0, colon));
    const std::string ms = trim(line.substr(colon + 1));
    double m = 0.0;
    std::size_t used = 0;
    try {
      m = std::stod(ms, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != ms.size() || !(m >= 0.0) || !std::isfinite(m))
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": bad probability \"" + ms + "\"");
    total += m;
    atoms.push_back({x, m});
  }
  if (atoms.empty() || !(total > 0.0)) throw Error(ErrorKind::ParseError, "distribution file has no positive mass");
  return Dist(g, std::move(atoms));
}

Dist read_dist_file(const GroupSpec& g, const std::string& path) {
  auto in = open_in(path);
  return parse_dist(g, in);
}

void write_dist(const Dist& p, std::ostream& out) {
  for (const auto& a : p.atoms()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", a.mass);
    out << format_element(p.group(), a.at) << " : " << buf << '\n';
  }
}

json dist_to_json(const Dist& p) {
  json atoms = json::array();
  for (const auto& a : p.atoms()) atoms.push_back({{"at", element_to_json(p.group(), a.at)}, {"p", a.mass}});
  return json{{"group", group_to_json(p.group())}, {"atoms", atoms}};
}

BohrSetDesc bohr_from_json(const GroupSpec& g, const json& j) {
  if (!j.is_object() || !j.contains("chars") || !j.contains("radius"))
    throw Error(ErrorKind::ParseError, "Bohr descriptor needs \"chars\" and \"radius\"");
  std::vector<Index> chars;
  for (const auto& c : j["chars"]) {
    auto coords = c.get<std::vector<std::int64_t>>();
    if (coords.size() != g.rank()) throw Error(ErrorKind::DimensionMismatch, "character of the wrong rank");
    chars.push_back(g.encode(coords));
  }
  return bohr_set(g, chars, j["radius"].get<double>());
}

BohrSetDesc read_bohr_file(const GroupSpec& g, const std::string& path) {
  auto in = open_in(path);
  try {
    return bohr_from_json(g, json::parse(in));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

json bohr_to_json(const BohrSetDesc& b, bool with_members) {
  json j{{"chars", elements_to_json(b.group, b.chars)}, {"radius", b.radius}, {"rank", b.rank()}, {"size", b.size()}};
  if (with_members) j["members"] = elements_to_json(b.group, b.members);
  return j;
}

json growth_to_json(const GrowthCertificate& c) {
  return json{{"d_hat", c.d_hat}, {"scale", c.scale}, {"entropies", c.entropies}};
}

json trace_to_json(const GroupSpec& g, const TauTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    json j{{"n", s.n},           {"tau_before", s.tau_before}, {"tau_after", s.tau_after}, {"d_XY", s.d_xy},
           {"d_XUA", s.d_xua},   {"d_YUA", s.d_yua},           {"polish", s.polish}};
    if (!s.polish) {
      j["t"] = element_to_json(g, s.t);
      j["s"] = element_to_json(g, s.s);
    }
    steps.push_back(j);
  }
  return json{{"steps", steps},
              {"terminal_x", dist_to_json(t.terminal_x)},
              {"terminal_y", dist_to_json(t.terminal_y)},
              {"n_hi", t.n_hi},
              {"n_max_searched", t.n_max_searched},
              {"degenerate_k", t.degenerate_k},
              {"heuristic_polish", t.heuristic_polish},
              {"hit_max_steps", t.hit_max_steps},
              {"tau_start", t.tau_start},
              {"tau_end", t.tau_end}};
}

json params_to_json(const ParamChoice& p) {
  return json{{"d", p.d},   {"C", p.C},   {"ell", p.ell}, {"m", p.m}, {"r", p.r}, {"eps", p.eps},
              {"checks", {{"1", p.check1}, {"2", p.check2}, {"3", p.check3}, {"4", p.check4}}}};
}

json progression_to_json(const ProgressionCertificate& p) {
  return json{{"r", p.r},
              {"radius", p.bohr.radius},
              {"small_size", p.small_size},
              {"large_size", p.large_size},
              {"ratio", p.ratio},
              {"ratio_ok", p.ratio_ok},
              {"radius_ok", p.radius_ok},
              {"valid", p.valid}};
}

json certificate_to_json(const CoveringCertificate& c) {
  const auto& g = c.group;
  json hyps = json::array();
  for (const auto& h : c.hypotheses) {
    json j{{"name", h.name}, {"holds", h.holds}, {"lhs", h.lhs}, {"rhs", h.rhs}};
    if (!h.note.empty()) j["note"] = h.note;
    hyps.push_back(j);
  }
  json j{{"schema", "acw-cert/1"},
         {"group", group_to_json(g)},
         {"A", elements_to_json(g, c.A)},
         {"K", c.K},
         {"X_terminal", dist_to_json(c.X_terminal)},
         {"d_hat", c.d_hat},
         {"d_used", c.d_used},
         {"params", params_to_json(c.params)},
         {"growth", growth_to_json(c.growth)},
         {"S", elements_to_json(g, c.S)},
         {"B_small", bohr_to_json(c.B_small, c.B_small.size() <= 4096)},
         {"B_large", {{"checked", c.B_large_checked}, {"size", c.B_large_size}, {"log_bound", c.B_large_log_bound}, {"ok", c.B_large_ok}}},
         {"progression", progression_to_json(c.progression)},
         {"translates", elements_to_json(g, c.translates)},
         {"num_translates", c.num_translates},
         {"packing_bound", c.packing_bound},
         {"cover_valid", c.cover_valid},
         {"differences_in_B_small", c.differences_in_b_small},
         {"size_ratio", c.size_ratio},
         {"hypotheses", hyps},
         {"notes", c.notes}};
  if (c.trace) j["trace"] = trace_to_json(g, *c.trace);
  return j;
}

}  // namespace acw
