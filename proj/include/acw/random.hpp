#pragma once

#include <random>

#include "acw/dist.hpp"

namespace acw {

using Rng = std::mt19937_64;

/// Random Z/n_1 x ... x Z/n_k with order in [min_order, max_order] and rank <= max_rank.
GroupSpec random_group(Rng& rng, std::uint64_t max_order, std::size_t max_rank = 3, std::uint64_t min_order = 2);
/// Random distribution with support size in [1, max_support].
Dist random_dist(Rng& rng, const GroupSpec& g, std::size_t max_support);
/// Distribution supported on the given atoms with random masses.
Dist random_dist_on(Rng& rng, const GroupSpec& g, std::span<const Index> support);
/// Uniformly random subset of the given size (sorted).
std::vector<Index> random_subset(Rng& rng, const GroupSpec& g, std::size_t size);

}  // namespace acw
