#include "acw/tau.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "acw/error.hpp"
#include "acw/fft.hpp"
#include "acw/limits.hpp"
#include "acw/ruzsa.hpp"

namespace acw {

double DoublingStats::weight() const { return degenerate() ? 0.0 : kEta / (loglog * logloglog); }

std::uint64_t sumset_size(const GroupSpec& g, std::span<const Index> a, std::span<const Index> b) {
  if (a.empty() || b.empty()) throw Error(ErrorKind::EmptySet, "sumset of an empty set");
  const std::uint64_t pairs = static_cast<std::uint64_t>(a.size()) * b.size();
  if (pairs <= (std::uint64_t{1} << 26)) {
    if (g.order() <= limits().enumeration) {
      std::vector<char> hit(g.order(), 0);
      std::uint64_t count = 0;
      for (auto x : a)
        for (auto y : b) {
          auto& h = hit[g.add(x, y)];
          count += h == 0;
          h = 1;
        }
      return count;
    }
    std::unordered_set<Index> sums;
    sums.reserve(pairs);
    for (auto x : a)
      for (auto y : b) sums.insert(g.add(x, y));
    return sums.size();
  }
  if (g.order() <= limits().dft_order) {
    Spectrum f(g.order()), h(g.order());
    for (auto x : a) f[x] = 1.0;
    for (auto y : b) h[y] = 1.0;
    dft_forward(g, f);
    dft_forward(g, h);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] *= h[i];
    dft_backward(g, f);
    const double scale = 1.0 / static_cast<double>(g.order());
    std::uint64_t count = 0;
    for (const auto& v : f) count += v.real() * scale > 0.5;
    return count;
  }
  throw Error(ErrorKind::CapExceeded, "sumset of sizes " + std::to_string(a.size()) + " x " + std::to_string(b.size()));
}

DoublingStats doubling_constant(const GroupSpec& g, std::span<const Index> a) {
  DoublingStats s;
  s.group = g;
  s.A.assign(a.begin(), a.end());
  std::sort(s.A.begin(), s.A.end());
  s.A.erase(std::unique(s.A.begin(), s.A.end()), s.A.end());
  if (s.A.empty()) throw Error(ErrorKind::EmptySet, "doubling constant of an empty set");
  for (auto x : s.A)
    if (!g.contains(x)) throw Error(ErrorKind::InvalidArgument, "set element outside the group");
  s.sumset_size = sumset_size(g, s.A, s.A);
  s.K = static_cast<double>(s.sumset_size) / static_cast<double>(s.A.size());
  s.log16K = std::log(16.0 * s.K);
  s.loglog = std::log(s.log16K);
  s.logloglog = s.loglog > 0.0 ? std::log(s.loglog) : -std::numeric_limits<double>::infinity();
  return s;
}

TauContext::TauContext(DoublingStats stats)
    : stats_(std::move(stats)),
      ua_(uniform_on(stats_.group, stats_.A)),
      h_ua_(entropy(ua_)),
      weight_(stats_.weight()) {}

void TauContext::require_support(const Dist& p) const {
  if (!(p.group() == stats_.group)) throw Error(ErrorKind::GroupMismatch, "distribution on a different group");
  for (const auto& at : p.atoms())
    if (!std::binary_search(stats_.A.begin(), stats_.A.end(), at.at))
      throw Error(ErrorKind::SupportEscape, "atom " + std::to_string(at.at) + " lies outside A");
}

double TauContext::penalty(const Dist& p) const {
  return sum_entropy(p, ua_, Sign::minus) - 0.5 * entropy(p) - 0.5 * h_ua_;
}

double TauContext::tau(const Dist& p, const Dist& q) const {
  return ruzsa_dist(p, q) + weight_ * (penalty(p) + penalty(q));
}

double tau_eval(const Dist& p, const Dist& q, const DoublingStats& stats) {
  if (stats.degenerate())
    throw Error(ErrorKind::DegenerateK, "log log log(16K) <= 0 at K = " + std::to_string(stats.K));
  TauContext ctx(stats);
  ctx.require_support(p);
  ctx.require_support(q);
  return ctx.tau(p, q);
}

namespace {

// Entropies up front; penalties computed on first use.
class FiberStats {
 public:
  FiberStats(const FiberFamily& f, const TauContext& ctx) : f_(f), ctx_(ctx), pen_(f.fibers.size(), std::numeric_limits<double>::quiet_NaN()) {
    h_.reserve(f.fibers.size());
    for (const auto& x : f.fibers) h_.push_back(entropy(x.law));
  }
  double h(std::size_t i) const { return h_[i]; }
  double pen(std::size_t i, std::uint64_t& work) {
    if (std::isnan(pen_[i])) {
      work += f_.fibers[i].law.support_size() * ctx_.uniform().support_size();
      pen_[i] = ctx_.penalty(f_.fibers[i].law);
    }
    return pen_[i];
  }

 private:
  const FiberFamily& f_;
  const TauContext& ctx_;
  std::vector<double> h_;
  std::vector<double> pen_;
};

bool same_law(const Dist& p, const Dist& q) {
  if (p.support_size() != q.support_size()) return false;
  for (std::size_t i = 0; i < p.support_size(); ++i)
    if (p.atoms()[i].at != q.atoms()[i].at || p.atoms()[i].mass != q.atoms()[i].mass) return false;
  return true;
}

}  // namespace

SearchResult decrement_search_ex(const Dist& p, const Dist& q, const TauContext& ctx, int n_lo, int n_hi,
                                 const SearchBudget& budget) {
  if (n_lo < 2 || n_hi < n_lo) throw Error(ErrorKind::InvalidArgument, "need 2 <= n_lo <= n_hi");
  ctx.require_support(p);
  ctx.require_support(q);
  SearchResult res;
  const double tau0 = ctx.tau(p, q);
  // tau >= 0, so nothing can beat it by the acceptance margin.
  if (tau0 < kSlackTol) {
    res.n_completed = n_hi;
    return res;
  }
  const double target = tau0 - kSlackTol;
  const double w = ctx.weight();
  std::uint64_t work = 0;
  const bool symmetric = same_law(p, q);
  for (int n = n_lo; n <= n_hi; ++n) {
    const FiberFamily pf = fiber_family(p, n);
    const FiberFamily qf = symmetric ? pf : fiber_family(q, n);
    FiberStats ps(pf, ctx);
    std::optional<FiberStats> qs_own;
    if (!symmetric) qs_own.emplace(qf, ctx);
    FiberStats& qs = symmetric ? ps : *qs_own;
    for (std::size_t i = 0; i < pf.fibers.size(); ++i) {
      for (std::size_t j = 0; j < qf.fibers.size(); ++j) {
        // d[X;Y] >= |H(X) - H(Y)| / 2.
        const double dh = 0.5 * std::abs(ps.h(i) - qs.h(j));
        if (dh > target) continue;
        const double pen = w * (ps.pen(i, work) + qs.pen(j, work));
        if (work > budget.max_pairs) return res;
        if (dh + pen > target) continue;
        const auto& fp = pf.fibers[i].law;
        const auto& fq = qf.fibers[j].law;
        work += fp.support_size() * fq.support_size();
        if (work > budget.max_pairs) return res;
        const double val = sum_entropy(fp, fq, Sign::minus) - 0.5 * ps.h(i) - 0.5 * qs.h(j) + pen;
        if (val <= target) {
          res.found = Decrement{n, pf.fibers[i].key, qf.fibers[j].key, fp, fq, tau0, val};
          return res;
        }
      }
    }
    res.n_completed = n;
  }
  return res;
}

std::optional<Decrement> decrement_search(const Dist& p, const Dist& q, const DoublingStats& stats, int n_lo,
                                          int n_hi) {
  TauContext ctx(stats);
  SearchBudget unlimited{std::numeric_limits<std::uint64_t>::max()};
  return decrement_search_ex(p, q, ctx, n_lo, n_hi, unlimited).found;
}

double averaged_fiber_tau(const Dist& p, const Dist& q, const TauContext& ctx, int n) {
  const FiberFamily pf = fiber_family(p, n);
  const FiberFamily qf = fiber_family(q, n);
  double acc = 0.0;
  for (const auto& a : pf.fibers)
    for (const auto& b : qf.fibers) acc += a.weight * b.weight * ctx.tau(a.law, b.law);
  return acc;
}

int default_n_hi(double K) {
  const double lk = std::log(std::max(K, 1.0));
  const double v = std::floor(std::pow(lk, 6.0));
  return static_cast<int>(std::clamp(v, 2.0, 24.0));
}

MinimizeResult minimize_tau(const GroupSpec& g, std::span<const Index> a, const DoublingStats& stats,
                            const MinimizeOptions& opts) {
  if (!(g == stats.group)) throw Error(ErrorKind::GroupMismatch, "doubling stats computed on another group");
  std::vector<Index> sorted(a.begin(), a.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted != stats.A) throw Error(ErrorKind::InvalidArgument, "set differs from the one in the doubling stats");
  if (opts.max_steps < 0) throw Error(ErrorKind::InvalidArgument, "max_steps must be nonnegative");

  TauContext ctx(stats);
  MinimizeResult out;
  auto& tr = out.trace;
  tr.n_hi = opts.n_hi > 0 ? std::max(opts.n_hi, 2) : default_n_hi(stats.K);
  tr.degenerate_k = stats.degenerate();
  tr.heuristic_polish = opts.polish;
  Dist x = ctx.uniform(), y = ctx.uniform();
  double tau = ctx.tau(x, y);
  tr.tau_start = tau;
  bool terminal = false;
  while (static_cast<int>(tr.steps.size()) < opts.max_steps) {
    auto res = decrement_search_ex(x, y, ctx, 2, tr.n_hi, opts.budget);
    TauStep step{};
    if (res.found) {
      const auto& d = *res.found;
      step = {d.n, d.t, d.s, d.tau_before, d.tau_after, 0, 0, 0, false};
      x = d.p;
      y = d.q;
    } else {
      tr.n_max_searched = res.n_completed;
      std::optional<std::pair<Dist, Dist>> polished;
      if (opts.polish) polished = polish_tau(x, y, ctx);
      if (!polished) {
        terminal = true;
        break;
      }
      step = {0, 0, 0, tau, 0, 0, 0, 0, true};
      x = polished->first;
      y = polished->second;
    }
    tau = ctx.tau(x, y);
    step.tau_after = tau;
    step.d_xy = ruzsa_dist(x, y);
    step.d_xua = ctx.penalty(x);
    step.d_yua = ctx.penalty(y);
    tr.steps.push_back(step);
  }
  if (!terminal) {
    tr.hit_max_steps = true;
    tr.n_max_searched = 0;
  }
  tr.tau_end = tau;
  tr.terminal_x = x;
  tr.terminal_y = y;
  out.x = std::move(x);
  out.y = std::move(y);
  return out;
}

namespace {

// Euclidean projection onto the probability simplex.
void project_simplex(std::vector<double>& v) {
  std::vector<double> u = v;
  std::sort(u.begin(), u.end(), std::greater<>());
  double cum = 0.0, theta = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    cum += u[i];
    const double t = (cum - 1.0) / static_cast<double>(i + 1);
    if (u[i] - t > 0.0) theta = t;
  }
  for (auto& x : v) x = std::max(0.0, x - theta);
}

}  // namespace

std::optional<std::pair<Dist, Dist>> polish_tau(const Dist& p, const Dist& q, const TauContext& ctx, double step,
                                                int iterations) {
  const auto& g = ctx.stats().group;
  const auto& A = ctx.stats().A;
  const std::size_t m = A.size();
  if (m < 2 || m > 2048 || g.order() > limits().enumeration) return std::nullopt;

  std::vector<Index> diff(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) diff[i * m + j] = g.sub(A[i], A[j]);

  auto to_vec = [&](const Dist& d) {
    std::vector<double> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = d.mass(A[i]);
    return v;
  };
  auto to_dist = [&](const std::vector<double>& v) {
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < m; ++i)
      if (v[i] > 0.0) atoms.push_back({A[i], v[i]});
    return Dist(g, std::move(atoms));
  };
  const double u = 1.0 / static_cast<double>(m);
  const double w = ctx.weight();
  const double floor_log = std::log(1e-12);
  auto safe_log = [&](double v) { return v > 1e-12 ? std::log(v) : floor_log; };

  std::vector<double> r(g.order()), sp(g.order()), sq(g.order());
  auto differences = [&](const std::vector<double>& a, const std::vector<double>& b, std::vector<double>& out,
                         bool b_uniform) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) out[diff[i * m + j]] = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) out[diff[i * m + j]] += a[i] * (b_uniform ? u : b[j]);
  };

  auto pv = to_vec(p), qv = to_vec(q);
  const double tau0 = ctx.tau(p, q);
  std::optional<std::pair<Dist, Dist>> best;
  double best_tau = tau0 - kSlackTol;
  std::vector<double> gp(m), gq(m);
  for (int it = 0; it < iterations; ++it) {
    differences(pv, qv, r, false);
    differences(pv, qv, sp, true);
    differences(qv, pv, sq, true);
    for (std::size_t i = 0; i < m; ++i) {
      double dp = 0.0, dq = 0.0, ep = 0.0, eq = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        dp -= qv[j] * (safe_log(r[diff[i * m + j]]) + 1.0);
        dq -= pv[j] * (safe_log(r[diff[j * m + i]]) + 1.0);
        ep -= u * (safe_log(sp[diff[i * m + j]]) + 1.0);
        eq -= u * (safe_log(sq[diff[i * m + j]]) + 1.0);
      }
      const double hp = 0.5 * (safe_log(pv[i]) + 1.0);
      const double hq = 0.5 * (safe_log(qv[i]) + 1.0);
      gp[i] = dp + hp + w * (ep + hp);
      gq[i] = dq + hq + w * (eq + hq);
    }
    for (std::size_t i = 0; i < m; ++i) {
      pv[i] -= step * gp[i];
      qv[i] -= step * gq[i];
    }
    project_simplex(pv);
    project_simplex(qv);
    if ((it + 1) % 20 == 0 || it + 1 == iterations) {
      Dist pd = to_dist(pv), qd = to_dist(qv);
      const double t = ctx.tau(pd, qd);
      if (t < best_tau) {
        best_tau = t;
        best = std::make_pair(std::move(pd), std::move(qd));
      }
    }
  }
  return best;
}

GrowthCertificate growth_certificate(const Dist& p, int N) {
  if (N < 2) throw Error(ErrorKind::InvalidArgument, "growth certificate needs N >= 2");
  GrowthCertificate c;
  c.scale = N;
  Dist cur = p;
  const double h1 = entropy(p);
  c.entropies.push_back(h1);
  for (int n = 2; n <= N; ++n) {
    cur = convolve(cur, p);
    const double h = entropy(cur);
    c.entropies.push_back(h);
    c.d_hat = std::max(c.d_hat, (h - h1) / std::log(static_cast<double>(n)));
  }
  return c;
}

std::vector<double> distance_of_sums_check(const Dist& p, const Dist& q, double k_log, int n_hi) {
  if (n_hi < 2) throw Error(ErrorKind::InvalidArgument, "distance of sums needs n_hi >= 2");
  require_same_group(p, q);
  std::vector<double> slacks;
  Dist np = p, nq = q;
  for (int n = 2; n <= n_hi; ++n) {
    np = convolve(np, p);
    nq = convolve(nq, q);
    const double bound = k_log + k_log * std::log(std::log(16.0 * n));
    slacks.push_back(ruzsa_dist(np, nq) - bound);
  }
  return slacks;
}

int small_growth_n(double d) {
  if (!(d > 1.0)) throw Error(ErrorKind::InvalidArgument, "small growth needs d > 1");
  return static_cast<int>(std::floor(32.0 * d * std::log(d))) + 1;
}

SmallGrowth small_growth_check(const Dist& p, double d) {
  const int n = small_growth_n(d);
  const Dist nx = iterate_sum(p, n);
  const Dist n1x = convolve(nx, p);
  return {n, entropy(n1x) - entropy(nx)};
}

}  // namespace acw
