#include "acw/bohr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "acw/error.hpp"
#include "acw/fourier.hpp"
#include "acw/limits.hpp"
#include "acw/ruzsa.hpp"

namespace acw {

namespace {

constexpr double kRadiusSlack = 1e-12;

std::vector<Index> sorted_unique(std::span<const Index> s) {
  std::vector<Index> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void require_enumerable(const GroupSpec& g) {
  if (g.order() > limits().enumeration)
    throw Error(ErrorKind::CapExceeded, "Bohr set scan needs |G| <= " + std::to_string(limits().enumeration));
}

void check_radius(double delta) {
  if (!(delta > 0.0) || delta > 2.0) throw Error(ErrorKind::BadRadius, "radius must lie in (0, 2], got " + std::to_string(delta));
}

}  // namespace

bool BohrSetDesc::contains(Index x) const { return std::binary_search(members.begin(), members.end(), x); }

double chord(std::uint64_t L, std::uint64_t u) {
  return 2.0 * std::sin(std::numbers::pi * static_cast<double>(u) / static_cast<double>(L));
}

std::uint64_t radius_threshold(std::uint64_t L, double delta) {
  const std::uint64_t half = L / 2;
  if (delta >= 2.0) return half;
  if (delta < 0.0) return 0;
  const double lim = delta * (1.0 + kRadiusSlack);
  auto u = static_cast<std::uint64_t>(
      std::min<double>(static_cast<double>(half), std::floor(static_cast<double>(L) * std::asin(delta / 2.0) / std::numbers::pi)));
  while (u + 1 <= half && chord(L, u + 1) <= lim) ++u;
  while (u > 0 && chord(L, u) > lim) --u;
  return u;
}

std::uint64_t max_phase_distance(const GroupSpec& g, std::span<const Index> chars, Index x, std::uint64_t cap) {
  std::uint64_t m = 0;
  for (auto c : chars) {
    m = std::max(m, g.phase_distance(c, x));
    if (m > cap) break;
  }
  return m;
}

BohrSetDesc bohr_set(const GroupSpec& g, std::span<const Index> chars, double delta) {
  check_radius(delta);
  require_enumerable(g);
  BohrSetDesc b{g, sorted_unique(chars), delta, {}};
  const auto u = radius_threshold(g.exponent(), delta);
  for (Index x = 0; x < g.order(); ++x)
    if (max_phase_distance(g, b.chars, x, u) <= u) b.members.push_back(x);
  return b;
}

std::uint64_t bohr_count(const GroupSpec& g, std::span<const Index> chars, double delta) {
  require_enumerable(g);
  const auto u = radius_threshold(g.exponent(), std::min(delta, 2.0));
  std::uint64_t n = 0;
  for (Index x = 0; x < g.order(); ++x) n += max_phase_distance(g, chars, x, u) <= u;
  return n;
}

BohrProfile::BohrProfile(const GroupSpec& g, std::vector<Index> chars, double max_radius)
    : g_(g), chars_(std::move(chars)) {
  require_enumerable(g);
  std::sort(chars_.begin(), chars_.end());
  chars_.erase(std::unique(chars_.begin(), chars_.end()), chars_.end());
  cap_ = radius_threshold(g.exponent(), std::min(max_radius, 2.0));
  sorted_.resize(g.order());
  for (Index x = 0; x < g.order(); ++x) sorted_[x] = std::min(max_phase_distance(g, chars_, x, cap_), cap_ + 1);
  std::sort(sorted_.begin(), sorted_.end());
}

std::uint64_t BohrProfile::count_upto(std::uint64_t u) const {
  if (u > cap_) throw Error(ErrorKind::InvalidArgument, "radius beyond the profile's range");
  return static_cast<std::uint64_t>(std::upper_bound(sorted_.begin(), sorted_.end(), u) - sorted_.begin());
}

std::uint64_t BohrProfile::count(double delta) const {
  return count_upto(radius_threshold(g_.exponent(), std::min(delta, 2.0)));
}

std::vector<std::uint64_t> BohrProfile::breakpoints() const {
  std::vector<std::uint64_t> out;
  for (auto u : sorted_)
    if (u <= cap_ && (out.empty() || out.back() != u)) out.push_back(u);
  return out;
}

BohrSizeReport bohr_size_check(const BohrSetDesc& desc) {
  BohrSizeReport r;
  const auto& g = desc.group;
  const double n = static_cast<double>(g.order());
  const double d = static_cast<double>(desc.rank());
  const double rho = desc.radius;
  r.size = desc.size();
  r.lower_bound = std::pow(rho, d) * n;
  r.lower_ok = static_cast<double>(r.size) >= r.lower_bound;
  const double turns = std::asin(std::min(rho, 2.0) / 2.0) / std::numbers::pi;
  const double cells = std::ceil(1.0 / turns);
  r.pigeonhole_bound = n / std::pow(cells, d);
  r.pigeonhole_ok = static_cast<double>(r.size) >= r.pigeonhole_bound;
  if (2.0 * rho <= 2.0) {
    r.doubling_checked = true;
    r.doubled_size = bohr_count(g, desc.chars, 2.0 * rho);
    r.doubling_bound = std::pow(4.0, d) * static_cast<double>(r.size);
    r.doubling_ok = static_cast<double>(r.doubled_size) <= r.doubling_bound;
  }
  return r;
}

double regularity_violation(const BohrProfile& profile, double rho, int grid_points, bool exact_breakpoints) {
  const std::size_t d = profile.rank();
  if (d == 0) return 0.0;
  const double kmax = 1.0 / (100.0 * static_cast<double>(d));
  const double base = static_cast<double>(profile.count(rho));
  const double c100 = 100.0 * static_cast<double>(d);
  double worst = -std::numeric_limits<double>::infinity();
  auto consider = [&](double kappa, double c) {
    const double lo = (1.0 - c100 * std::abs(kappa)) * base - c;
    const double hi = c - (1.0 + c100 * std::abs(kappa)) * base;
    worst = std::max(worst, std::max(lo, hi) / base);
  };
  for (int i = 0; i < grid_points; ++i) {
    const double kappa = grid_points == 1 ? 0.0 : -kmax + 2.0 * kmax * i / (grid_points - 1);
    consider(kappa, static_cast<double>(profile.count((1.0 + kappa) * rho)));
  }
  if (exact_breakpoints) {
    const auto L = profile.group().exponent();
    for (auto u : profile.breakpoints()) {
      const double ru = chord(L, u);
      const double kappa = ru / rho - 1.0;
      if (kappa < -kmax || kappa > kmax) continue;
      if (kappa < 0.0) {
        // Just below the jump at ru the count excludes distance u.
        const double c = u == 0 ? 0.0 : static_cast<double>(profile.count_upto(u - 1));
        worst = std::max(worst, ((1.0 - c100 * std::abs(kappa)) * base - c) / base);
      } else {
        const double c = static_cast<double>(profile.count_upto(u));
        worst = std::max(worst, (c - (1.0 + c100 * kappa) * base) / base);
      }
    }
  }
  return worst;
}

RegularRadius regular_radius_ex(const GroupSpec& g, std::span<const Index> chars, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorKind::BadRadius, "regular radius needs 0 < eps < 1");
  const auto cs = sorted_unique(chars);
  RegularRadius best;
  best.exact_checked = g.order() <= (std::uint64_t{1} << 13);
  if (cs.empty()) {
    best.rho = eps;
    best.passing = 64;
    return best;
  }
  const double d = static_cast<double>(cs.size());
  const BohrProfile profile(g, cs, 2.0 * eps * (1.0 + 1.0 / (100.0 * d)) * (1.0 + 1e-9));
  bool any = false;
  for (int i = 0; i < 64; ++i) {
    const double rho = eps * std::pow(2.0, i / 63.0);
    const double v = regularity_violation(profile, rho, 32, best.exact_checked);
    if (v <= 0.0) ++best.passing;
    if (!any || v < best.violation) {
      best.rho = rho;
      best.violation = v;
      any = true;
    }
  }
  if (best.violation > 0.0)
    throw Error(ErrorKind::NoRegularRadiusFound,
                "best candidate rho = " + std::to_string(best.rho) + " violates by " + std::to_string(best.violation));
  return best;
}

double regular_radius(const GroupSpec& g, std::span<const Index> chars, double eps) {
  return regular_radius_ex(g, chars, eps).rho;
}

std::vector<Index> dissociated_greedy(const GroupSpec& g, std::span<const Index> chars, int cap) {
  if (cap > 20) throw Error(ErrorKind::InvalidArgument, "dissociated cap must be <= 20");
  require_enumerable(g);
  const auto cs = sorted_unique(chars);
  std::vector<char> comb(g.order(), 0);  // {-1,0,1}-combinations of the chosen characters
  std::vector<Index> members{0};
  comb[0] = 1;
  std::vector<Index> lambda;
  for (auto gamma : cs) {
    if (comb[gamma]) continue;
    if (static_cast<int>(lambda.size()) == cap)
      throw Error(ErrorKind::CapExceeded, "dissociated set would exceed " + std::to_string(cap) + " characters");
    lambda.push_back(gamma);
    const auto old = members;
    for (auto c : old) {
      for (auto y : {g.add(c, gamma), g.sub(c, gamma)}) {
        if (!comb[y]) {
          comb[y] = 1;
          members.push_back(y);
        }
      }
    }
  }
  return lambda;
}

ChangResult chang_global_ex(const GroupSpec& g, std::span<const Index> a, double eps, double nu) {
  if (!(nu > 0.0) || nu > 2.0) throw Error(ErrorKind::InvalidArgument, "nu must lie in (0, 2]");
  const Dist ua = uniform_on(g, a);
  ChangResult r;
  r.spectrum = spec(ua, eps);
  r.dissociated = dissociated_greedy(g, r.spectrum);
  const double rho = r.dissociated.empty() ? 2.0 : std::min(2.0, nu / (2.0 * static_cast<double>(r.dissociated.size())));
  r.bohr = bohr_set(g, r.dissociated, rho);
  const auto L = g.exponent();
  const auto u_nu = radius_threshold(L, nu);
  std::uint64_t worst = 0;
  for (auto t : r.bohr.members) worst = std::max(worst, max_phase_distance(g, r.spectrum, t, L));
  r.max_deviation = chord(L, worst);
  if (worst > u_nu)
    throw Error(ErrorKind::VerificationFailed,
                "|1 - gamma(t)| reaches " + std::to_string(r.max_deviation) + " > nu = " + std::to_string(nu));
  return r;
}

BohrSetDesc chang_global(const GroupSpec& g, std::span<const Index> a, double eps, double nu) {
  return chang_global_ex(g, a, eps, nu).bohr;
}

std::vector<char> indicator(const GroupSpec& g, std::span<const Index> set) {
  std::vector<char> v(g.order(), 0);
  for (auto x : set) v[x] = 1;
  return v;
}

std::vector<char> sumset_indicator(const GroupSpec& g, const std::vector<char>& a, const std::vector<char>& b,
                                   Sign sign) {
  Spectrum fa(g.order()), fb(g.order());
  for (Index x = 0; x < g.order(); ++x) {
    fa[x] = a[x] ? 1.0 : 0.0;
    fb[x] = b[x] ? 1.0 : 0.0;
  }
  dft_forward(g, fa);
  dft_forward(g, fb);
  for (std::size_t i = 0; i < fa.size(); ++i) fa[i] *= sign == Sign::plus ? fb[i] : std::conj(fb[i]);
  const auto counts = inverse_dft(g, std::move(fa));
  std::vector<char> out(g.order());
  for (Index x = 0; x < g.order(); ++x) out[x] = counts[x].real() > 0.5;
  return out;
}

namespace {

constexpr double kBogolyubovEps = 0.5;

// Smallest k >= 1 with eps^(2k-2) <= bound.
int k_from_formula(double bound) {
  int k = 1;
  while (std::pow(kBogolyubovEps, 2 * k - 2) > bound) ++k;
  return k;
}

std::vector<char> iterated_sumset(const GroupSpec& g, const std::vector<char>& base, const std::vector<char>& step,
                                  int times) {
  auto cur = base;
  for (int i = 0; i < times; ++i) cur = sumset_indicator(g, cur, step);
  return cur;
}

}  // namespace

BogolyubovResult weak_bogolyubov_global(const GroupSpec& g, std::span<const Index> a) {
  if (g.order() > limits().dft_order)
    throw Error(ErrorKind::CapExceeded, "global Bogolyubov needs |G| <= " + std::to_string(limits().dft_order));
  const auto A = sorted_unique(a);
  const Dist ua = uniform_on(g, A);
  const auto table = dft(ua);
  const double N = static_cast<double>(g.order());
  BogolyubovResult r;
  r.alpha = static_cast<double>(A.size()) / N;
  r.k_formula = k_from_formula(r.alpha / 2.0);
  const auto sp = spec(table, kBogolyubovEps);
  r.spectrum_size = sp.size();
  std::vector<char> in_spec = indicator(g, sp);
  r.k = r.k_formula;
  for (int k = 1; k < r.k_formula; ++k) {
    double tail = 0.0;
    for (Index c = 0; c < g.order(); ++c)
      if (!in_spec[c]) tail += std::pow(std::norm(table.values[c]), k);
    if (tail / N <= 0.5 / N) {
      r.k = k;
      break;
    }
  }
  r.bohr = chang_global(g, A, kBogolyubovEps, std::numbers::sqrt2);

  Spectrum f(g.order());
  for (Index c = 0; c < g.order(); ++c) f[c] = std::pow(std::norm(table.values[c]), r.k);
  const auto density = inverse_dft(g, std::move(f));
  r.margin = std::numeric_limits<double>::infinity();
  for (auto t : r.bohr.members) r.margin = std::min(r.margin, density[t].real());
  r.margin_required = 0.5 / N;
  r.margin_ok = r.margin >= r.margin_required - 1e-12;

  const auto ind = indicator(g, A);
  const auto kA = iterated_sumset(g, ind, ind, r.k - 1);
  const auto diff = sumset_indicator(g, kA, kA, Sign::minus);
  r.contained = std::all_of(r.bohr.members.begin(), r.bohr.members.end(), [&](Index t) { return diff[t] != 0; });
  if (!r.contained) throw Error(ErrorKind::ContainmentFailed, "Bohr set not inside kA - kA at k = " + std::to_string(r.k));
  return r;
}

BogolyubovResult weak_bogolyubov_local(const BohrSetDesc& b, std::span<const Index> a, double nu) {
  const auto& g = b.group;
  if (g.order() > limits().dft_order)
    throw Error(ErrorKind::CapExceeded, "local Bogolyubov needs |G| <= " + std::to_string(limits().dft_order));
  if (!(nu > 0.0 && nu <= 1.0)) throw Error(ErrorKind::InvalidArgument, "nu must lie in (0, 1]");
  const auto A = sorted_unique(a);
  if (A.empty()) throw Error(ErrorKind::EmptySet, "local Bogolyubov on an empty set");
  for (auto x : A)
    if (!b.contains(x)) throw Error(ErrorKind::InvalidArgument, "A must lie inside the Bohr set");
  const std::size_t d = b.rank();
  const double rho = b.radius;
  if (d > 0) {
    const double dd = static_cast<double>(d);
    const BohrProfile profile(g, b.chars, std::min(2.0, rho * (1.0 + 1.0 / (100.0 * dd)) * (1.0 + 1e-9)));
    const double v = regularity_violation(profile, rho, 32, g.order() <= (std::uint64_t{1} << 13));
    if (v > 0.0) throw Error(ErrorKind::NotRegular, "regularity violated by " + std::to_string(v));
  }

  const double N = static_cast<double>(g.order());
  const double bsize = static_cast<double>(b.size());
  const double d_eff = static_cast<double>(std::max<std::size_t>(d, 1));
  BogolyubovResult r;
  r.alpha = static_cast<double>(A.size()) / bsize;
  r.k_formula = k_from_formula(r.alpha / 32.0);
  r.margin_required = 1.0 / (32.0 * bsize);
  const auto ind_a = indicator(g, A);
  const auto table_a = dft(uniform_on(g, A));

  struct Stage {
    int k;
    double rho_k;
    Index x0;
    std::vector<Index> a_prime;
    SpectrumTable table;
    std::vector<Index> sp;
  };
  auto build = [&](int k) {
    Stage s{k, rho / (200.0 * k * d_eff), 0, {}, {}, {}};
    const auto bprime = d == 0 ? std::vector<Index>{} : bohr_set(g, b.chars, s.rho_k).members;
    std::vector<char> ind_b;
    if (d == 0) {
      ind_b.assign(g.order(), 1);
    } else {
      ind_b = indicator(g, bprime);
    }
    // Overlap |A cap (B' + x)| for every x; B' is symmetric.
    Spectrum fa(g.order()), fb(g.order());
    for (Index x = 0; x < g.order(); ++x) {
      fa[x] = ind_a[x] ? 1.0 : 0.0;
      fb[x] = ind_b[x] ? 1.0 : 0.0;
    }
    dft_forward(g, fa);
    dft_forward(g, fb);
    for (std::size_t i = 0; i < fa.size(); ++i) fa[i] *= fb[i];
    const auto overlap = inverse_dft(g, std::move(fa));
    long best = -1;
    for (Index x = 0; x < g.order(); ++x) {
      const long c = std::lround(overlap[x].real());
      if (c > best) {
        best = c;
        s.x0 = x;
      }
    }
    for (auto y : A)
      if (ind_b[g.sub(y, s.x0)]) s.a_prime.push_back(y);
    s.table = dft(uniform_on(g, s.a_prime));
    s.sp = spec(s.table, kBogolyubovEps);
    return s;
  };
  auto weight = [&](const Stage& s, Index c) {
    return std::norm(table_a.values[c]) * std::pow(std::norm(s.table.values[c]), s.k - 1);
  };

  std::optional<Stage> chosen;
  for (int k = 1; k <= r.k_formula; ++k) {
    Stage s = build(k);
    const auto in_spec = indicator(g, s.sp);
    double total = 0.0, tail = 0.0;
    for (Index c = 0; c < g.order(); ++c) {
      const double w = weight(s, c);
      total += w;
      if (!in_spec[c]) tail += w;
    }
    if (0.5 * total / N - 2.0 * tail / N >= r.margin_required || k == r.k_formula) {
      chosen = std::move(s);
      break;
    }
  }
  const Stage& s = *chosen;
  r.k = s.k;
  r.x0 = s.x0;
  r.a_prime = s.a_prime;
  r.spectrum_size = s.sp.size();
  r.extra_chars = dissociated_greedy(g, s.sp);
  r.rho_prime = s.rho_k;
  if (!r.extra_chars.empty()) r.rho_prime = std::min(r.rho_prime, nu / (2.0 * static_cast<double>(r.extra_chars.size())));
  r.rho_prime = std::min(r.rho_prime, 2.0);
  std::vector<Index> chars = b.chars;
  chars.insert(chars.end(), r.extra_chars.begin(), r.extra_chars.end());
  r.bohr = bohr_set(g, chars, r.rho_prime);

  const auto L = g.exponent();
  const auto u_nu = radius_threshold(L, nu);
  for (auto t : r.bohr.members)
    if (max_phase_distance(g, s.sp, t, u_nu) > u_nu)
      throw Error(ErrorKind::VerificationFailed, "Re gamma(t) < 1/2 for a spectrum character");

  Spectrum f(g.order());
  for (Index c = 0; c < g.order(); ++c) f[c] = weight(s, c);
  const auto density = inverse_dft(g, std::move(f));
  r.margin = std::numeric_limits<double>::infinity();
  for (auto t : r.bohr.members) r.margin = std::min(r.margin, density[t].real());
  r.margin_ok = r.margin >= r.margin_required - 1e-12;

  const auto ind_ap = indicator(g, r.a_prime);
  const auto sum = iterated_sumset(g, ind_a, ind_ap, r.k - 1);
  const auto diff = sumset_indicator(g, sum, sum, Sign::minus);
  r.contained = std::all_of(r.bohr.members.begin(), r.bohr.members.end(), [&](Index t) { return diff[t] != 0; });
  if (!r.contained)
    throw Error(ErrorKind::ContainmentFailed, "Bohr set not inside A + (k-1)A' - A - (k-1)A' at k = " + std::to_string(r.k));
  return r;
}

AlmostPeriodResult almost_period_set(const Dist& px, const Dist& py, const Dist& pz, double eps, bool strict) {
  require_same_group(px, py);
  require_same_group(py, pz);
  const auto& g = px.group();
  AlmostPeriodResult r;
  const Dist w = convolve(px, py);
  r.gap = entropy(w) - entropy(py);
  r.hypothesis_ok = r.gap <= 1.0 / 16.0 + 1e-12;
  if (strict && !r.hypothesis_ok)
    throw Error(ErrorKind::HypothesisFailed, "H(X+Y) - H(Y) = " + std::to_string(r.gap) + " > 1/16");
  for (const auto& a : px.atoms()) {
    double kl = 0.0;
    for (const auto& b : py.atoms()) {
      // W(x + y) >= P(X = x) P(Y = y) even where the floor pruned W.
      const double q = std::max(w.mass(g.add(a.at, b.at)), a.mass * b.mass);
      kl += b.mass * std::log(b.mass / q);
    }
    if (kl <= 1.0 / 8.0) {
      r.S.push_back(a.at);
      r.mass_in_s += a.mass;
    }
  }
  r.bohr = bohr_set(g, lspec(py, eps), std::min(4.0 * eps, 2.0));
  r.mass_ok = r.mass_in_s >= 0.5 - 1e-12;
  r.differences_contained = true;
  for (auto x : r.S) {
    for (auto y : r.S)
      if (!r.bohr.contains(g.sub(x, y))) {
        r.differences_contained = false;
        break;
      }
    if (!r.differences_contained) break;
  }
  r.log_s = r.S.empty() ? -std::numeric_limits<double>::infinity() : std::log(static_cast<double>(r.S.size()));
  r.log_s_bound = entropy(pz) - 4.0 * ruzsa_dist(px, pz) - 2.0 * std::numbers::ln2;
  r.size_ok = r.log_s >= r.log_s_bound - 1e-9;
  if (strict && !(r.mass_ok && r.differences_contained && r.size_ok))
    throw Error(ErrorKind::VerificationFailed, "almost-period set failed a check");
  return r;
}

BohrUpperResult bohr_upper_check(const Dist& px, const Dist& pua, double d, double eps, std::uint64_t m, int ell,
                                 bool strict) {
  require_same_group(px, pua);
  if (!(d > 1.0) || !(eps > 0.0 && eps < 1.0) || m < 1 || ell < 1)
    throw Error(ErrorKind::InvalidArgument, "need d > 1, 0 < eps < 1, m >= 1, ell >= 1");
  BohrUpperResult r;
  const double lm = static_cast<double>(m) * ell;
  const double expo = d * std::log(lm) + 30.0 * d * std::log(d);
  r.log_lhs1 = static_cast<double>(m) * std::log1p(-eps * eps / 2.0);
  r.log_rhs1 = -std::numbers::ln2 - expo;
  r.hyp1_ok = r.log_lhs1 <= r.log_rhs1;
  const Dist sum = power_sum_with(px, m * static_cast<std::uint64_t>(ell), pua);
  r.lhs2 = entropy(sum) - entropy(pua);
  r.rhs2 = expo;
  r.hyp2_ok = r.lhs2 <= r.rhs2 + 1e-9;
  if (strict && !(r.hyp1_ok && r.hyp2_ok))
    throw Error(ErrorKind::HypothesisFailed, std::string("Bohr upper bound hypothesis ") + (r.hyp1_ok ? "(2)" : "(1)") + " fails");
  const auto chars = lspec(iterate_sum(px, ell), eps);
  r.size = bohr_count(px.group(), chars, 0.5);
  r.log_bound = std::log(8.0) + std::log(static_cast<double>(pua.support_size())) + expo;
  r.ok = std::log(static_cast<double>(r.size)) <= r.log_bound;
  return r;
}

ProgressionCertificate progression_certificate(const BohrSetDesc& desc, int r) {
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "r must be nonnegative");
  ProgressionCertificate c;
  c.bohr = desc;
  c.r = r;
  c.small_size = desc.size();
  const double big = (3.0 * r + 1.0) * desc.radius;
  c.large_size = bohr_count(desc.group, desc.chars, std::min(big, 2.0));
  c.ratio = static_cast<double>(c.large_size) / static_cast<double>(c.small_size);
  c.ratio_ok = static_cast<long double>(c.large_size) <= std::ldexp(static_cast<long double>(c.small_size), r);
  c.radius_ok = desc.radius < 1.0 / (4.0 * (3.0 * r + 1.0));
  c.valid = c.ratio_ok && c.radius_ok;
  return c;
}

}  // namespace acw
