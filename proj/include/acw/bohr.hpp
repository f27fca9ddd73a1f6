#pragma once

#include <span>
#include <vector>

#include "acw/dist.hpp"

namespace acw {

/// B(chars, radius) = {x : |gamma(x) - 1| <= radius for all gamma in chars}.
struct BohrSetDesc {
  GroupSpec group;
  std::vector<Index> chars;  // sorted, distinct
  double radius = 2.0;
  std::vector<Index> members;  // sorted

  std::size_t rank() const { return chars.size(); }
  std::size_t size() const { return members.size(); }
  bool contains(Index x) const;
};

/// 2 sin(pi u / L): |gamma(x) - 1| for phase distance u.
double chord(std::uint64_t L, std::uint64_t u);
/// Largest u <= L/2 with chord(L, u) <= delta (relative slack 1e-12).
std::uint64_t radius_threshold(std::uint64_t L, double delta);
/// max over chars of the phase distance at x; stops early once above cap.
std::uint64_t max_phase_distance(const GroupSpec& g, std::span<const Index> chars, Index x, std::uint64_t cap);

BohrSetDesc bohr_set(const GroupSpec& g, std::span<const Index> chars, double delta);
std::uint64_t bohr_count(const GroupSpec& g, std::span<const Index> chars, double delta);

/// Per-element maximal phase distance; answers |B(chars, r)| for any r up to
/// the radius it was built for.
class BohrProfile {
 public:
  BohrProfile(const GroupSpec& g, std::vector<Index> chars, double max_radius = 2.0);

  std::size_t rank() const { return chars_.size(); }
  const GroupSpec& group() const { return g_; }
  std::uint64_t count(double delta) const;
  /// #{x : maxdist(x) <= u}.
  std::uint64_t count_upto(std::uint64_t u) const;
  /// Distinct per-element distances, ascending.
  std::vector<std::uint64_t> breakpoints() const;

 private:
  GroupSpec g_;
  std::vector<Index> chars_;
  std::uint64_t cap_;
  std::vector<std::uint64_t> sorted_;
};

struct BohrSizeReport {
  std::uint64_t size = 0;
  double lower_bound = 0.0;  // rho^|S| |G|
  bool lower_ok = false;
  double pigeonhole_bound = 0.0;  // |G| / ceil(pi / asin(rho/2))^|S|
  bool pigeonhole_ok = false;
  bool doubling_checked = false;
  std::uint64_t doubled_size = 0;
  double doubling_bound = 0.0;  // 4^|S| |B(S, rho)|
  bool doubling_ok = true;
};

BohrSizeReport bohr_size_check(const BohrSetDesc& desc);

/// Worst relative violation of (1 - 100d|k|)|B| <= |B((1+k)rho)| <= (1 + 100d|k|)|B|
/// over a uniform grid of k in [-1/(100d), 1/(100d)], optionally also at every
/// breakpoint of the step function. <= 0 means regular.
double regularity_violation(const BohrProfile& profile, double rho, int grid_points, bool exact_breakpoints);

struct RegularRadius {
  double rho = 0.0;
  double violation = 0.0;
  int passing = 0;  // candidates with violation <= 0
  bool exact_checked = false;
};

RegularRadius regular_radius_ex(const GroupSpec& g, std::span<const Index> chars, double eps);
double regular_radius(const GroupSpec& g, std::span<const Index> chars, double eps);

/// Greedy maximal dissociated subset; every input character is a {-1,0,1}
/// combination of the result.
std::vector<Index> dissociated_greedy(const GroupSpec& g, std::span<const Index> chars, int cap = 20);

struct ChangResult {
  BohrSetDesc bohr;
  std::vector<Index> spectrum;    // Spec(U_A, eps)
  std::vector<Index> dissociated;  // Lambda
  double max_deviation = 0.0;     // max |1 - gamma(t)| over spectrum x bohr
};

ChangResult chang_global_ex(const GroupSpec& g, std::span<const Index> a, double eps, double nu);
BohrSetDesc chang_global(const GroupSpec& g, std::span<const Index> a, double eps, double nu);

struct BogolyubovResult {
  BohrSetDesc bohr;
  int k = 1;
  int k_formula = 1;
  double alpha = 0.0;
  std::size_t spectrum_size = 0;
  double margin = 0.0;           // min over the Bohr set of the convolution density
  double margin_required = 0.0;  // N^-1/2 (global) or |B|^-1/32 (local)
  bool margin_ok = false;
  bool contained = false;
  // Local variant only.
  Index x0 = 0;
  std::vector<Index> a_prime;
  std::vector<Index> extra_chars;  // T
  double rho_prime = 0.0;
};

BogolyubovResult weak_bogolyubov_global(const GroupSpec& g, std::span<const Index> a);
BogolyubovResult weak_bogolyubov_local(const BohrSetDesc& b, std::span<const Index> a, double nu = 1.0);

struct AlmostPeriodResult {
  std::vector<Index> S;
  BohrSetDesc bohr;
  double gap = 0.0;  // H(X+Y) - H(Y)
  bool hypothesis_ok = false;
  double mass_in_s = 0.0;
  bool mass_ok = false;
  bool differences_contained = false;
  double log_s = 0.0;
  double log_s_bound = 0.0;  // H(Z) - 4 d[X;Z] - 2 log 2
  bool size_ok = false;
  bool ok() const { return hypothesis_ok && mass_ok && differences_contained && size_ok; }
};

/// strict: throw HypothesisFailed / VerificationFailed instead of reporting.
AlmostPeriodResult almost_period_set(const Dist& px, const Dist& py, const Dist& pz, double eps, bool strict = true);

struct BohrUpperResult {
  double log_lhs1 = 0.0, log_rhs1 = 0.0;  // hypothesis (1) in log form
  bool hyp1_ok = false;
  double lhs2 = 0.0, rhs2 = 0.0;  // H(ml X + U_A) - H(U_A) vs d log(ml) + 30 d log d
  bool hyp2_ok = false;
  std::uint64_t size = 0;  // |B(LSpec(lX, eps), 1/2)|
  double log_bound = 0.0;  // log(8 |A| exp(d log(lm) + 30 d log d))
  bool ok = false;
};

BohrUpperResult bohr_upper_check(const Dist& px, const Dist& pua, double d, double eps, std::uint64_t m, int ell,
                                 bool strict = true);

struct ProgressionCertificate {
  BohrSetDesc bohr;
  int r = 0;
  std::uint64_t small_size = 0;
  std::uint64_t large_size = 0;  // |B(Gamma, (3r+1) delta)|
  double ratio = 0.0;
  bool ratio_ok = false;
  bool radius_ok = false;  // delta < 1/(4(3r+1))
  bool valid = false;
};

ProgressionCertificate progression_certificate(const BohrSetDesc& desc, int r);

/// Indicator of A + B (or A - B) via integer-rounded DFT convolution counts.
std::vector<char> sumset_indicator(const GroupSpec& g, const std::vector<char>& a, const std::vector<char>& b,
                                   Sign sign = Sign::plus);
std::vector<char> indicator(const GroupSpec& g, std::span<const Index> set);

}  // namespace acw
