#pragma once

#include <optional>
#include <span>
#include <vector>

#include "acw/dist.hpp"

namespace acw {

inline constexpr double kEta = 1.0 / 1009.0;

struct DoublingStats {
  GroupSpec group;
  std::vector<Index> A;  // sorted, distinct
  std::uint64_t sumset_size = 0;
  double K = 1.0;
  double log16K = 0.0;     // log(16K)
  double loglog = 0.0;     // log log(16K)
  double logloglog = 0.0;  // log log log(16K)

  bool degenerate() const { return !(logloglog > 0.0); }
  /// eta / (log log(16K) * log log log(16K)); 0 when degenerate.
  double weight() const;
};

DoublingStats doubling_constant(const GroupSpec& g, std::span<const Index> a);
/// Exact |A + B| for two sets.
std::uint64_t sumset_size(const GroupSpec& g, std::span<const Index> a, std::span<const Index> b);

/// Cached pieces for repeated tau evaluations on one set A.
class TauContext {
 public:
  explicit TauContext(DoublingStats stats);

  const DoublingStats& stats() const { return stats_; }
  const Dist& uniform() const { return ua_; }
  double weight() const { return weight_; }
  void require_support(const Dist& p) const;
  /// d[X; U_A].
  double penalty(const Dist& p) const;
  double tau(const Dist& p, const Dist& q) const;

 private:
  DoublingStats stats_;
  Dist ua_;
  double h_ua_;
  double weight_;
};

/// tau[X;Y] = d[X;Y] + eta / (log2(16K) log3(16K)) * (d[X;U_A] + d[Y;U_A]).
double tau_eval(const Dist& p, const Dist& q, const DoublingStats& stats);

struct Decrement {
  int n;
  Index t, s;
  Dist p, q;
  double tau_before, tau_after;
};

struct SearchBudget {
  /// Upper bound on fiber pairs evaluated per search; the scan stops at the
  /// last fully examined n once exceeded.
  std::uint64_t max_pairs = 4'000'000;
};

struct SearchResult {
  std::optional<Decrement> found;
  int n_completed = 0;  // largest n whose candidates were all examined
};

SearchResult decrement_search_ex(const Dist& p, const Dist& q, const TauContext& ctx, int n_lo, int n_hi,
                                 const SearchBudget& budget = {});
std::optional<Decrement> decrement_search(const Dist& p, const Dist& q, const DoublingStats& stats, int n_lo,
                                          int n_hi);

/// E_{t,s} tau[X|nX=t; Y|nY=s].
double averaged_fiber_tau(const Dist& p, const Dist& q, const TauContext& ctx, int n);

struct TauStep {
  int n;
  Index t, s;
  double tau_before, tau_after;
  double d_xy, d_xua, d_yua;
  bool polish = false;
};

struct TauTrace {
  std::vector<TauStep> steps;
  Dist terminal_x, terminal_y;
  int n_hi = 0;
  int n_max_searched = 0;
  bool degenerate_k = false;
  bool heuristic_polish = false;
  bool hit_max_steps = false;
  double tau_start = 0.0;
  double tau_end = 0.0;
};

struct MinimizeOptions {
  int n_hi = 0;  // 0: default_n_hi(K)
  int max_steps = 64;
  bool polish = false;
  SearchBudget budget;
};

/// clamp(floor(log(K)^6), 2, 24).
int default_n_hi(double K);

struct MinimizeResult {
  Dist x, y;
  TauTrace trace;
};

MinimizeResult minimize_tau(const GroupSpec& g, std::span<const Index> a, const DoublingStats& stats,
                            const MinimizeOptions& opts = {});

/// Projected-gradient descent of tau on the simplex over A; returns the pair
/// only if tau decreased.
std::optional<std::pair<Dist, Dist>> polish_tau(const Dist& p, const Dist& q, const TauContext& ctx,
                                                double step = 1e-2, int iterations = 200);

struct GrowthCertificate {
  double d_hat = 0.0;
  int scale = 0;
  std::vector<double> entropies;  // H(nX) for n = 1..scale
};

GrowthCertificate growth_certificate(const Dist& p, int N);

/// d[nX;nY] - (k_log + k_log log log(16n)) for n = 2..n_hi.
std::vector<double> distance_of_sums_check(const Dist& p, const Dist& q, double k_log, int n_hi);

struct SmallGrowth {
  int n;
  double delta;  // H((n+1)X) - H(nX)
};

/// Smallest integer n > 32 d log d.
int small_growth_n(double d);
SmallGrowth small_growth_check(const Dist& p, double d);

}  // namespace acw
