#include "acw/random.hpp"

#include <algorithm>
#include <unordered_set>

#include "acw/error.hpp"

namespace acw {

GroupSpec random_group(Rng& rng, std::uint64_t max_order, std::size_t max_rank, std::uint64_t min_order) {
  if (max_order < min_order || min_order < 1 || max_rank < 1)
    throw Error(ErrorKind::InvalidArgument, "bad random group bounds");
  for (;;) {
    const std::size_t rank = std::uniform_int_distribution<std::size_t>(1, max_rank)(rng);
    std::vector<std::int64_t> moduli;
    std::uint64_t order = 1;
    for (std::size_t i = 0; i < rank; ++i) {
      const std::uint64_t room = max_order / order;
      if (room < 2) break;
      const auto n = std::uniform_int_distribution<std::uint64_t>(2, std::min<std::uint64_t>(room, 64 + max_order / 8))(rng);
      moduli.push_back(static_cast<std::int64_t>(n));
      order *= n;
    }
    if (moduli.empty() || order < min_order || order > max_order) continue;
    return make_group(std::move(moduli));
  }
}

std::vector<Index> random_subset(Rng& rng, const GroupSpec& g, std::size_t size) {
  if (size > g.order()) throw Error(ErrorKind::InvalidArgument, "subset larger than the group");
  std::vector<Index> out;
  if (size * 2 > g.order()) {
    std::vector<Index> all(g.order());
    for (Index x = 0; x < g.order(); ++x) all[x] = x;
    std::shuffle(all.begin(), all.end(), rng);
    out.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
  } else {
    std::unordered_set<Index> seen;
    std::uniform_int_distribution<Index> pick(0, g.order() - 1);
    while (out.size() < size) {
      const Index x = pick(rng);
      if (seen.insert(x).second) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Dist random_dist_on(Rng& rng, const GroupSpec& g, std::span<const Index> support) {
  if (support.empty()) throw Error(ErrorKind::EmptySet, "random distribution on an empty support");
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<Atom> atoms;
  for (auto x : support) atoms.push_back({x, u(rng)});
  return Dist(g, std::move(atoms));
}

Dist random_dist(Rng& rng, const GroupSpec& g, std::size_t max_support) {
  const std::size_t cap = std::max<std::size_t>(1, std::min<std::uint64_t>(max_support, g.order()));
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, cap)(rng);
  const auto s = random_subset(rng, g, k);
  return random_dist_on(rng, g, s);
}

}  // namespace acw
