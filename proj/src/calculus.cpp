#include "acw/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "acw/limits.hpp"
#include "acw/random.hpp"
#include "acw/ruzsa.hpp"

namespace acw {

bool CalculusReport::all_hold() const {
  return std::all_of(entries.begin(), entries.end(), [](const SlackSummary& s) { return s.violations == 0; });
}

const SlackSummary* CalculusReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

Dist product_dist(const Dist& p, const Dist& q) {
  const GroupSpec g = product_group(p.group(), q.group());
  const Index hn = q.group().order();
  std::vector<Atom> atoms;
  atoms.reserve(p.support_size() * q.support_size());
  for (const auto& a : p.atoms())
    for (const auto& b : q.atoms()) atoms.push_back({a.at * hn + b.at, a.mass * b.mass});
  return Dist(g, std::move(atoms));
}

CalculusReport verify_calculus(std::size_t cases, std::uint64_t seed, std::uint64_t group_max, std::size_t max_support) {
  CalculusReport rep;
  rep.cases = cases;
  rep.seed = seed;
  rep.group_max = group_max;
  std::map<std::string, SlackSummary> acc;
  std::vector<std::string> order;
  auto record = [&](const std::string& name, double slack) {
    auto [it, fresh] = acc.try_emplace(name);
    if (fresh) {
      it->second.name = name;
      it->second.worst = slack;
      order.push_back(name);
    }
    auto& s = it->second;
    ++s.count;
    if (std::isnan(slack) || slack < -kSlackTol) ++s.violations;
    if (!(slack >= s.worst)) s.worst = slack;
  };

  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    const GroupSpec g = random_group(rng, std::max<std::uint64_t>(group_max, 2), 3, 2);
    const Dist p = random_dist(rng, g, max_support);
    const Dist q = random_dist(rng, g, max_support);
    const Dist r = random_dist(rng, g, max_support);

    for (const Dist* d : {&p, &q, &r}) {
      const double h = entropy(*d);
      record("support_bound", std::log(static_cast<double>(d->support_size())) - h);
      record("renyi2_le_shannon", h - renyi(*d, 2));
      record("shannon_le_renyi0", renyi(*d, 0) - h);
    }
    {
      const double kl = kl_divergence(p, q);
      if (std::isfinite(kl)) {
        const double l1 = l1_distance(p, q);
        record("pinsker", 2.0 * kl - l1 * l1);
      }
      // Mixture of q and p always covers p.
      std::vector<Atom> atoms;
      for (const auto& a : p.atoms()) atoms.push_back({a.at, 0.5 * a.mass});
      for (const auto& a : q.atoms()) atoms.push_back({a.at, 0.5 * a.mass});
      const Dist m(g, std::move(atoms));
      const double l1 = l1_distance(p, m);
      record("pinsker", 2.0 * kl_divergence(p, m) - l1 * l1);
    }
    {
      const Dist x = convolve(r, q, Sign::minus);
      const auto eq = sum_entropy_formula_check(x, q, r);
      record("sum_entropy_formula", eq.slack);
      record("sum_entropy_equality", -std::abs(eq.lhs - eq.rhs));
      const auto gen = sum_entropy_formula_check(convolve(x, p), q, r);
      if (std::isfinite(gen.rhs)) record("sum_entropy_formula", gen.slack);
    }
    const double dpq = ruzsa_dist(p, q);
    record("nonnegativity", dpq);
    record("symmetry", -std::abs(dpq - ruzsa_dist(q, p)));
    for (const auto& e : erc_check(p, q, r).entries) record("erc_" + e.name, e.slack);

    record("fibring_addition", fibring_check(Homomorphism::addition(g), product_dist(p, q), product_dist(r, p)));
    {
      const GroupSpec h = random_group(rng, 16, 1, 2);
      const Dist s1 = random_dist(rng, h, 4), s2 = random_dist(rng, h, 4);
      record("fibring_projection", fibring_check(Homomorphism::projection_first(g, h), product_dist(p, s1), product_dist(q, s2)));
      // A correlated joint law on G x H.
      std::vector<Atom> atoms;
      for (const auto& a : r.atoms()) atoms.push_back({a.at * h.order() + (a.at % h.order()), a.mass});
      for (const auto& a : s2.atoms()) atoms.push_back({(a.at % g.order()) * h.order() + a.at, a.mass});
      const Dist joint(product_group(g, h), std::move(atoms));
      record("fibring_projection", fibring_check(Homomorphism::projection_first(g, h), joint, product_dist(p, s1)));
    }
    for (int n : {2, 3}) record("fibring_application_n" + std::to_string(n), fibring_application_check(p, q, n));
  }
  for (const auto& name : order) rep.entries.push_back(acc[name]);
  return rep;
}

}  // namespace acw
