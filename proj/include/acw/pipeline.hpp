#pragma once

#include <optional>
#include <string>

#include "acw/bohr.hpp"
#include "acw/params.hpp"
#include "acw/tau.hpp"

namespace acw {

struct HypothesisFlag {
  std::string name;
  bool holds = false;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string note;
};

struct CoveringCertificate {
  GroupSpec group;
  std::vector<Index> A;
  double K = 1.0;
  Dist X_terminal;
  double d_hat = 0.0;
  double d_used = 2.0;  // max(d_hat, 2)
  ParamChoice params;
  GrowthCertificate growth;
  std::optional<TauTrace> trace;

  std::vector<Index> S;
  BohrSetDesc B_small;
  std::uint64_t B_large_size = 0;
  double B_large_log_bound = 0.0;
  bool B_large_checked = false;
  bool B_large_ok = false;
  ProgressionCertificate progression;

  std::vector<Index> translates;
  bool differences_in_b_small = false;
  bool cover_valid = false;
  double size_ratio = 0.0;  // |B_small| / |A|
  std::size_t num_translates = 0;
  std::uint64_t packing_bound = 0;  // ceil(|A + S| / |S|)

  std::vector<HypothesisFlag> hypotheses;
  std::vector<std::string> notes;

  bool hypotheses_hold() const;
  bool verified() const { return cover_valid && differences_in_b_small; }
};

/// Greedy maximal packing x_1, x_2, ... in A (element order) with disjoint x_i + S.
std::vector<Index> ruzsa_cover(const GroupSpec& g, std::span<const Index> a, std::span<const Index> s);
/// A subset of union(x_i + S - S), checked element by element.
bool cover_holds(const GroupSpec& g, std::span<const Index> a, std::span<const Index> translates, std::span<const Index> s);
/// Indicator of S - S.
std::vector<char> difference_indicator(const GroupSpec& g, std::span<const Index> s);

/// growth: certificate of X if available; its scale is compared with ell * m.
CoveringCertificate structure_from_growth(const GroupSpec& g, std::span<const Index> a, const Dist& x, double d, double C,
                                          const GrowthCertificate* growth = nullptr);

struct CoverOptions {
  double C = 1e6;
  int growth_scale = 32;
  MinimizeOptions tau;
};

CoveringCertificate freiman_cover(const GroupSpec& g, std::span<const Index> a, const CoverOptions& opts = {});

}  // namespace acw
