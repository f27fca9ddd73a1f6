#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "acw/dist.hpp"

namespace acw {

struct SlackSummary {
  std::string name;
  std::size_t count = 0;
  std::size_t violations = 0;  // slack < -1e-9
  double worst = 0.0;          // smallest slack seen
};

struct CalculusReport {
  std::size_t cases = 0;
  std::uint64_t seed = 0;
  std::uint64_t group_max = 0;
  std::vector<SlackSummary> entries;

  bool all_hold() const;
  const SlackSummary* find(const std::string& name) const;
};

/// Product law p x q on G x H.
Dist product_dist(const Dist& p, const Dist& q);

/// Randomized check of the entropy inequalities on `cases` random triples
/// over random groups of order 2..group_max.
CalculusReport verify_calculus(std::size_t cases, std::uint64_t seed, std::uint64_t group_max = 512,
                               std::size_t max_support = 8);

}  // namespace acw
