#pragma once

#include <optional>
#include <string>

#include "acw/dist.hpp"

namespace acw {

struct Scenario {
  std::string name;
  GroupSpec group;
  std::vector<Index> set;   // sorted; empty for distribution scenarios
  std::optional<Dist> dist;
  bool wrap_free = true;    // A + A (or Z - Z) computed in G matches the computation over Z
};

/// {start + i * step : 0 <= i < length} in Z/N.
Scenario ap_scenario(std::int64_t N, std::int64_t length, std::int64_t step = 1, std::int64_t start = 0);
/// prod [0, dims_i) in (Z/N)^d.
Scenario box_scenario(std::int64_t N, std::vector<std::int64_t> dims);
/// Subgroup generated by gens, shifted by shift.
Scenario coset_scenario(const GroupSpec& g, std::span<const Index> gens, Index shift = 0);
/// Subgroup plus `noise` random extra elements.
Scenario subgroup_noise_scenario(const GroupSpec& g, std::span<const Index> gens, std::size_t noise, std::uint64_t seed);
/// [0, interval) x Gamma in Z/N x Z/M, Gamma a K-element set whose pairwise
/// sums gamma_i + gamma_j (i <= j) are distinct.
Scenario a2_scenario(std::int64_t N, std::int64_t interval, std::int64_t M, std::size_t K, std::uint64_t seed);
/// Union of APs {o_i * spacing + j : j < length} with offsets o = 0, 1, 3, 7, 12, ... (distinct pair sums).
Scenario spaced_aps_scenario(std::int64_t N, std::size_t count, std::int64_t length, std::int64_t spacing);
/// Product of d centered Binomial(n, 1/2) laws on (Z/(2n+1))^d.
Scenario binomial_scenario(int n, std::size_t d);

/// Pairwise sums distinct (i <= j), checked exhaustively.
bool has_distinct_pair_sums(const GroupSpec& g, std::span<const Index> gamma);

std::vector<std::string> scenario_kinds();

}  // namespace acw
