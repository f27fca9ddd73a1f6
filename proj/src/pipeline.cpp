#include "acw/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "acw/error.hpp"
#include "acw/fourier.hpp"
#include "acw/limits.hpp"
#include "acw/ruzsa.hpp"

namespace acw {

bool CoveringCertificate::hypotheses_hold() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const HypothesisFlag& h) { return h.holds; });
}

std::vector<Index> ruzsa_cover(const GroupSpec& g, std::span<const Index> a, std::span<const Index> s) {
  if (s.empty()) throw Error(ErrorKind::EmptySet, "covering needs a nonempty S");
  if (g.order() > limits().enumeration) throw Error(ErrorKind::CapExceeded, "covering needs |G| within the enumeration cap");
  std::vector<Index> order(a.begin(), a.end());
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  std::vector<char> used(g.order(), 0);
  std::vector<Index> out;
  for (auto x : order) {
    bool free = true;
    for (auto y : s)
      if (used[g.add(x, y)]) {
        free = false;
        break;
      }
    if (!free) continue;
    out.push_back(x);
    for (auto y : s) used[g.add(x, y)] = 1;
  }
  return out;
}

std::vector<char> difference_indicator(const GroupSpec& g, std::span<const Index> s) {
  const auto n = static_cast<std::uint64_t>(s.size());
  if (n * n <= limits().direct_pairs || g.order() > limits().dft_order) {
    std::vector<char> d(g.order(), 0);
    for (auto x : s)
      for (auto y : s) d[g.sub(x, y)] = 1;
    return d;
  }
  const auto ind = indicator(g, s);
  return sumset_indicator(g, ind, ind, Sign::minus);
}

bool cover_holds(const GroupSpec& g, std::span<const Index> a, std::span<const Index> translates, std::span<const Index> s) {
  const auto diff = difference_indicator(g, s);
  for (auto x : a) {
    bool hit = false;
    for (auto t : translates)
      if (diff[g.sub(x, t)]) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

namespace {

bool is_coset_uniform_or_point(const Dist& x) {
  if (x.support_size() == 1) return true;
  const auto c = coset_structure_detect(x, 1e-12);
  return c.has_value();
}

}  // namespace

CoveringCertificate structure_from_growth(const GroupSpec& g, std::span<const Index> a, const Dist& x, double d, double C,
                                          const GrowthCertificate* growth) {
  CoveringCertificate c;
  c.group = g;
  c.A.assign(a.begin(), a.end());
  std::sort(c.A.begin(), c.A.end());
  c.A.erase(std::unique(c.A.begin(), c.A.end()), c.A.end());
  if (c.A.empty()) throw Error(ErrorKind::EmptySet, "structure_from_growth on an empty set");
  if (!(x.group() == g)) throw Error(ErrorKind::GroupMismatch, "X lives on another group");
  for (const auto& at : x.atoms())
    if (!std::binary_search(c.A.begin(), c.A.end(), at.at)) throw Error(ErrorKind::SupportEscape, "X must be supported on A");
  c.X_terminal = x;
  c.d_hat = d;
  c.d_used = std::max(d, 2.0);
  if (growth) c.growth = *growth;
  const double dd = c.d_used;
  if (c.d_used != d) c.notes.push_back("growth order raised from d_hat to 2 so that d log d > 0");

  c.params = search_params(dd, C);
  const auto& p = c.params;
  const double lm = static_cast<double>(p.ell) * static_cast<double>(p.m);
  const double expo = dd * std::log(lm) + 30.0 * dd * std::log(dd);
  c.hypotheses.push_back({"(1) (1-eps^2/2)^m <= exp(-d log(lm) - 30 d log d)/2", p.check1,
                          static_cast<double>(p.m) * std::log1p(-p.eps * p.eps / 2.0), -std::log(2.0) - expo,
                          "compared in log form"});
  c.hypotheses.push_back({"(2) exp(d log(lm) + 150 d log d + log 32) <= 2^r", p.check2,
                          dd * std::log(lm) + 150.0 * dd * std::log(dd) + std::log(32.0), p.r * std::log(2.0),
                          "compared in log form"});
  c.hypotheses.push_back({"(3) (3r+1) 4 eps < 1/4", p.check3, (3.0 * p.r + 1.0) * 4.0 * p.eps, 0.25, ""});
  c.hypotheses.push_back({"(4) l m <= C d^5", p.check4, lm, C * std::pow(dd, 5.0), ""});

  const Dist ua = uniform_on(g, c.A);
  const double dxu = ruzsa_dist(x, ua);
  const double bound30 = 30.0 * dd * std::log(dd);
  c.hypotheses.push_back({"d[X;U_A] <= 30 d log d", dxu <= bound30 + 1e-9, dxu, bound30, ""});

  {
    HypothesisFlag h{"polynomial growth of order d at scale l m", false, growth ? static_cast<double>(growth->scale) : 0.0, lm, ""};
    if (is_coset_uniform_or_point(x)) {
      h.holds = true;
      h.note = "X is uniform on a coset (or a point), so H(nX) = H(X) at every scale";
    } else if (growth && growth->scale >= lm && growth->d_hat <= dd + 1e-12) {
      h.holds = true;
    } else {
      h.note = "certified scale is below l m";
    }
    c.hypotheses.push_back(h);
  }

  const auto sg = small_growth_check(x, dd);
  c.hypotheses.push_back({"H((l+1)X) - H(lX) <= 1/16", sg.delta <= 1.0 / 16.0 + 1e-9, sg.delta, 1.0 / 16.0, ""});

  const Dist y = iterate_sum(x, p.ell);
  auto ap = almost_period_set(x, y, ua, p.eps, false);
  c.hypotheses.push_back({"H(X + lX) - H(lX) <= 1/16", ap.hypothesis_ok, ap.gap, 1.0 / 16.0, ""});
  c.hypotheses.push_back({"P(X in S) >= 1/2", ap.mass_ok, ap.mass_in_s, 0.5, ""});
  c.hypotheses.push_back({"log|S| >= H(U_A) - 4 d[X;U_A] - 2 log 2", ap.size_ok, ap.log_s, ap.log_s_bound, ""});
  c.B_small = ap.bohr;
  c.S = ap.S;
  if (c.S.empty()) {
    Index best = x.atoms()[0].at;
    double bm = -1.0;
    for (const auto& at : x.atoms())
      if (at.mass > bm) {
        bm = at.mass;
        best = at.at;
      }
    c.S = {best};
    c.notes.push_back("S was empty; replaced by the heaviest atom of X");
  }
  if (!ap.differences_contained) {
    std::vector<Index> by_mass = c.S;
    std::stable_sort(by_mass.begin(), by_mass.end(), [&](Index u, Index v) { return x.mass(u) > x.mass(v); });
    std::vector<Index> kept;
    for (auto u : by_mass) {
      bool ok = true;
      for (auto v : kept)
        if (!c.B_small.contains(g.sub(u, v))) {
          ok = false;
          break;
        }
      if (ok) kept.push_back(u);
    }
    std::sort(kept.begin(), kept.end());
    c.S = std::move(kept);
    c.notes.push_back("S - S left B_small; S shrunk greedily by mass");
  }
  {
    const auto diff = difference_indicator(g, c.S);
    c.differences_in_b_small = true;
    for (Index t = 0; t < g.order() && c.differences_in_b_small; ++t)
      if (diff[t] && !c.B_small.contains(t)) c.differences_in_b_small = false;
  }

  try {
    const auto up = bohr_upper_check(x, ua, dd, p.eps, p.m, p.ell, false);
    c.hypotheses.push_back({"H(ml X + U_A) - H(U_A) <= d log(ml) + 30 d log d", up.hyp2_ok, up.lhs2, up.rhs2, ""});
    c.B_large_checked = true;
    c.B_large_size = up.size;
    c.B_large_log_bound = up.log_bound;
    c.B_large_ok = up.ok;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CapExceeded) throw;
    c.notes.push_back(std::string("B_large bound not evaluated: ") + e.what());
  }

  c.progression = progression_certificate(c.B_small, p.r);
  c.translates = ruzsa_cover(g, c.A, c.S);
  c.num_translates = c.translates.size();
  c.cover_valid = cover_holds(g, c.A, c.translates, c.S);
  c.size_ratio = static_cast<double>(c.B_small.size()) / static_cast<double>(c.A.size());
  const auto as = sumset_size(g, c.A, c.S);
  c.packing_bound = (as + c.S.size() - 1) / c.S.size();
  return c;
}

CoveringCertificate freiman_cover(const GroupSpec& g, std::span<const Index> a, const CoverOptions& opts) {
  const auto stats = doubling_constant(g, a);
  auto mr = minimize_tau(g, stats.A, stats, opts.tau);
  const auto gc = growth_certificate(mr.x, opts.growth_scale);
  auto c = structure_from_growth(g, stats.A, mr.x, gc.d_hat, opts.C, &gc);
  c.K = stats.K;
  if (stats.K < 16.0) c.notes.push_back("small-K fallback: direct cover by A itself (K < 16)");
  if (mr.trace.degenerate_k) c.notes.push_back("tau weight degenerate; pure distance minimization");
  c.trace = std::move(mr.trace);
  return c;
}

}  // namespace acw
