#include "acw/ruzsa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "acw/error.hpp"
#include "acw/limits.hpp"

namespace acw {

double ruzsa_dist(const Dist& p, const Dist& q) {
  require_same_group(p, q);
  return sum_entropy(p, q, Sign::minus) - 0.5 * entropy(p) - 0.5 * entropy(q);
}

double cond_ruzsa_dist(const FiberFamily& pf, const FiberFamily& qf) {
  require_same_group(pf.base, qf.base);
  double cross = 0.0;
  for (const auto& a : pf.fibers)
    for (const auto& b : qf.fibers) cross += a.weight * b.weight * sum_entropy(a.law, b.law, Sign::minus);
  return cross - 0.5 * conditional_entropy(pf) - 0.5 * conditional_entropy(qf);
}

double ruzsa_dist_given_sum(const Dist& px, const Dist& py, const Dist& pz) {
  FiberFamily single;
  single.base = px;
  single.fibers.push_back({0, 1.0, px});
  return cond_ruzsa_dist(single, cond_on_sum_family(py, pz));
}

InequalityCheck make_check(std::string name, double lhs, double rhs, double tol) {
  InequalityCheck c{std::move(name), lhs, rhs, rhs - lhs, false};
  c.holds = c.slack >= -tol;
  return c;
}

bool ErcReport::all_hold() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.holds; });
}

double ErcReport::worst_slack() const {
  double w = std::numeric_limits<double>::infinity();
  for (const auto& e : entries) w = std::min(w, e.slack);
  return w;
}

ErcReport erc_check(const Dist& p, const Dist& q, const Dist& r) {
  require_same_group(p, q);
  require_same_group(q, r);
  const double hx = entropy(p), hy = entropy(q), hz = entropy(r);
  const double dxy = ruzsa_dist(p, q), dyz = ruzsa_dist(q, r), dxz = ruzsa_dist(p, r);
  const double d_x_negy = ruzsa_dist(p, negate(q));
  const Dist y_plus_z = convolve(q, r);
  const double h_yz = entropy(y_plus_z);
  const double h_xy = entropy(convolve(p, q));
  const double h_xyz = entropy(convolve(convolve(p, q), r));
  ErcReport rep;
  rep.entries.push_back(make_check("triangle", dxz, dxy + dyz));
  rep.entries.push_back(make_check("negation", d_x_negy, 3.0 * dxy));
  rep.entries.push_back(make_check("conditioning", ruzsa_dist_given_sum(p, q, r), dxy + 0.5 * (h_yz - hz)));
  rep.entries.push_back(make_check("submodularity", h_xyz - h_xy, h_yz - hy));
  rep.entries.push_back(make_check("entropy_gap", std::abs(hx - hy), 2.0 * dxy));
  return rep;
}

double fibring_check(const Homomorphism& pi, const Dist& p1, const Dist& p2) {
  require_same_group(p1, p2);
  const double lhs = ruzsa_dist(p1, p2);
  const double image = ruzsa_dist(push_forward(pi, p1), push_forward(pi, p2));
  const double cond = cond_ruzsa_dist(fibers_under(pi, p1), fibers_under(pi, p2));
  return lhs - image - cond;
}

double fibring_application_check(const Dist& p, const Dist& q, int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "fibring application needs n >= 2");
  require_same_group(p, q);
  const Dist p_rest = iterate_sum(p, n - 1), q_rest = iterate_sum(q, n - 1);
  const Dist p_all = convolve(p, p_rest), q_all = convolve(q, q_rest);
  FiberFamily pf = cond_on_sum_family(p, p_rest);
  FiberFamily qf = cond_on_sum_family(q, q_rest);
  const double lhs = ruzsa_dist(p, q) + ruzsa_dist(p_rest, q_rest);
  const double rhs = ruzsa_dist(p_all, q_all) + cond_ruzsa_dist(pf, qf);
  return lhs - rhs;
}

InequalityCheck sum_entropy_formula_check(const Dist& px, const Dist& py, const Dist& pz) {
  require_same_group(px, py);
  require_same_group(py, pz);
  const double lhs = sum_entropy(pz, py, Sign::minus) - entropy(py);
  const Dist neg_y = negate(py);
  double rhs = 0.0;
  for (const auto& a : pz.atoms()) {
    const double kl = kl_divergence(translate(neg_y, a.at), px);
    if (std::isinf(kl)) {
      rhs = kl;
      break;
    }
    rhs += a.mass * kl;
  }
  return make_check("sum_entropy_formula", lhs, rhs);
}

std::optional<CosetStructure> coset_structure_detect(const Dist& p, double tol) {
  const auto& g = p.group();
  double top = 0.0;
  for (const auto& a : p.atoms()) top = std::max(top, a.mass);
  std::vector<Index> heavy;
  for (const auto& a : p.atoms())
    if (a.mass >= 0.5 * top) heavy.push_back(a.at);
  const Index x0 = heavy.front();
  std::vector<Index> diffs;
  for (auto x : heavy)
    if (x != x0) diffs.push_back(g.sub(x, x0));
  std::vector<Index> h;
  try {
    h = subgroup_from_generators(g, diffs);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CapExceeded) return std::nullopt;
    throw;
  }
  std::vector<Index> coset;
  coset.reserve(h.size());
  for (auto y : h) coset.push_back(g.add(x0, y));
  const Dist u = uniform_on(g, coset);
  if (l1_distance(p, u) > tol) return std::nullopt;
  return CosetStructure{std::move(h), *std::min_element(coset.begin(), coset.end())};
}

double concentration_check(const Dist& p, const Dist& q, std::span<const Index> s) {
  require_same_group(p, q);
  std::vector<Index> set(s.begin(), s.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (set.empty()) throw Error(ErrorKind::EmptySet, "concentration set is empty");
  double in = 0.0;
  for (auto x : set) in += p.mass(x);
  if (in < 0.5 - 1e-12) throw Error(ErrorKind::InsufficientMass, "P(X in S) = " + std::to_string(in) + " < 1/2");
  const double bound = entropy(q) - 4.0 * ruzsa_dist(p, q) - 2.0 * std::numbers::ln2;
  return std::log(static_cast<double>(set.size())) - bound;
}

}  // namespace acw
