#include "acw/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "acw/error.hpp"
#include "acw/limits.hpp"
#include "acw/random.hpp"

namespace acw {

namespace {

void normalize(std::vector<Index>& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

void check_order(const GroupSpec& g) {
  if (g.order() > limits().enumeration)
    throw Error(ErrorKind::CapExceeded, "scenario group " + g.to_string() + " exceeds the enumeration cap");
}

}  // namespace

Scenario ap_scenario(std::int64_t N, std::int64_t length, std::int64_t step, std::int64_t start) {
  if (N < 1 || length < 1) throw Error(ErrorKind::InvalidArgument, "AP needs N >= 1 and length >= 1");
  Scenario s{"ap", make_group({N}), {}, std::nullopt, true};
  check_order(s.group);
  for (std::int64_t i = 0; i < length; ++i) s.set.push_back(s.group.scale(s.group.encode(std::vector<std::int64_t>{step}), i));
  for (auto& x : s.set) x = s.group.add(x, s.group.encode(std::vector<std::int64_t>{start}));
  normalize(s.set);
  const std::int64_t span = std::abs(step) * (length - 1);
  s.wrap_free = 2 * span < N && static_cast<std::int64_t>(s.set.size()) == length;
  return s;
}

Scenario box_scenario(std::int64_t N, std::vector<std::int64_t> dims) {
  if (dims.empty()) throw Error(ErrorKind::InvalidArgument, "box needs at least one dimension");
  Scenario s{"box", make_group(std::vector<std::int64_t>(dims.size(), N)), {}, std::nullopt, true};
  check_order(s.group);
  for (auto d : dims) {
    if (d < 1 || d > N) throw Error(ErrorKind::InvalidArgument, "box side out of range");
    s.wrap_free = s.wrap_free && 2 * (d - 1) < N;
  }
  std::vector<std::int64_t> c(dims.size(), 0);
  for (;;) {
    s.set.push_back(s.group.encode(c));
    std::size_t i = dims.size();
    while (i > 0) {
      --i;
      if (++c[i] < dims[i]) break;
      c[i] = 0;
      if (i == 0) {
        normalize(s.set);
        return s;
      }
    }
  }
}

Scenario coset_scenario(const GroupSpec& g, std::span<const Index> gens, Index shift) {
  check_order(g);
  Scenario s{"coset", g, subgroup_from_generators(g, gens), std::nullopt, true};
  for (auto& x : s.set) x = g.add(x, shift);
  normalize(s.set);
  return s;
}

Scenario subgroup_noise_scenario(const GroupSpec& g, std::span<const Index> gens, std::size_t noise, std::uint64_t seed) {
  check_order(g);
  Scenario s{"subgroup-noise", g, subgroup_from_generators(g, gens), std::nullopt, true};
  Rng rng(seed);
  std::vector<char> in(g.order(), 0);
  for (auto x : s.set) in[x] = 1;
  if (s.set.size() + noise > g.order()) throw Error(ErrorKind::InvalidArgument, "too much noise for the group");
  std::uniform_int_distribution<Index> pick(0, g.order() - 1);
  for (std::size_t added = 0; added < noise;) {
    const Index x = pick(rng);
    if (!in[x]) {
      in[x] = 1;
      s.set.push_back(x);
      ++added;
    }
  }
  normalize(s.set);
  return s;
}

bool has_distinct_pair_sums(const GroupSpec& g, std::span<const Index> gamma) {
  std::set<Index> sums;
  for (std::size_t i = 0; i < gamma.size(); ++i)
    for (std::size_t j = i; j < gamma.size(); ++j)
      if (!sums.insert(g.add(gamma[i], gamma[j])).second) return false;
  return true;
}

Scenario a2_scenario(std::int64_t N, std::int64_t interval, std::int64_t M, std::size_t K, std::uint64_t seed) {
  if (interval < 1 || interval > N || K < 1) throw Error(ErrorKind::InvalidArgument, "bad A2 parameters");
  const GroupSpec h = make_group({M});
  Rng rng(seed);
  std::vector<Index> gamma;
  std::uniform_int_distribution<Index> pick(0, h.order() - 1);
  for (int attempts = 0; gamma.size() < K; ++attempts) {
    if (attempts > 100000) throw Error(ErrorKind::InvalidArgument, "no spread set of that size in Z/" + std::to_string(M));
    gamma.push_back(pick(rng));
    if (!has_distinct_pair_sums(h, gamma)) gamma.pop_back();
  }
  std::sort(gamma.begin(), gamma.end());
  Scenario s{"a2", make_group({N, M}), {}, std::nullopt, 2 * (interval - 1) < N};
  check_order(s.group);
  for (std::int64_t i = 0; i < interval; ++i)
    for (auto y : gamma) s.set.push_back(s.group.encode(std::vector<std::int64_t>{i, static_cast<std::int64_t>(y)}));
  normalize(s.set);
  return s;
}

Scenario spaced_aps_scenario(std::int64_t N, std::size_t count, std::int64_t length, std::int64_t spacing) {
  if (count < 1 || length < 1 || spacing < length) throw Error(ErrorKind::InvalidArgument, "bad spaced AP parameters");
  // Greedy offsets with distinct pairwise sums.
  std::vector<std::int64_t> off{0};
  for (std::int64_t c = 1; off.size() < count; ++c) {
    std::set<std::int64_t> sums;
    bool ok = true;
    off.push_back(c);
    for (std::size_t i = 0; i < off.size() && ok; ++i)
      for (std::size_t j = i; j < off.size() && ok; ++j) ok = sums.insert(off[i] + off[j]).second;
    if (!ok) off.pop_back();
  }
  Scenario s{"spaced-aps", make_group({N}), {}, std::nullopt, true};
  check_order(s.group);
  for (auto o : off)
    for (std::int64_t j = 0; j < length; ++j) s.set.push_back(static_cast<Index>((o * spacing + j) % N));
  normalize(s.set);
  s.wrap_free = 2 * (off.back() * spacing + length - 1) < N;
  return s;
}

Scenario binomial_scenario(int n, std::size_t d) {
  if (n < 1 || d < 1) throw Error(ErrorKind::InvalidArgument, "binomial needs n >= 1, d >= 1");
  const std::int64_t mod = 2 * n + 1;
  Scenario s{"binomial", make_group(std::vector<std::int64_t>(d, mod)), {}, std::nullopt, true};
  check_order(s.group);
  std::vector<double> pmf(n + 1);
  for (int k = 0; k <= n; ++k)
    pmf[k] = std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) - n * std::log(2.0));
  std::vector<Atom> atoms;
  std::vector<int> k(d, 0);
  std::vector<std::int64_t> c(d);
  for (;;) {
    double m = 1.0;
    for (std::size_t i = 0; i < d; ++i) {
      m *= pmf[k[i]];
      c[i] = ((k[i] - n / 2) % mod + mod) % mod;
    }
    atoms.push_back({s.group.encode(c), m});
    std::size_t i = d;
    bool done = true;
    while (i > 0) {
      --i;
      if (++k[i] <= n) {
        done = false;
        break;
      }
      k[i] = 0;
    }
    if (done) break;
  }
  s.dist = Dist(s.group, std::move(atoms));
  return s;
}

std::vector<std::string> scenario_kinds() { return {"ap", "box", "coset", "subgroup-noise", "a2", "spaced-aps", "binomial"}; }

}  // namespace acw
