#include "support.hpp"

#include "acw/random.hpp"
#include "acw/ruzsa.hpp"
#include "acw/scenario.hpp"
#include "acw/tau.hpp"

using namespace acw;
using namespace acw::test;

namespace {

// Exhaustive fiber scan in (n, t, s) order: first pair beating tau0 - 1e-9.
std::optional<std::tuple<int, Index, Index, double>> brute_decrement(const Dist& p, const Dist& q, const TauContext& ctx,
                                                                     int n_lo, int n_hi) {
  const double target = ctx.tau(p, q) - 1e-9;
  for (int n = n_lo; n <= n_hi; ++n) {
    const auto pf = fiber_family(p, n), qf = fiber_family(q, n);
    for (const auto& a : pf.fibers)
      for (const auto& b : qf.fibers) {
        const double t = ctx.tau(a.law, b.law);
        if (t <= target) return std::make_tuple(n, a.key, b.key, t);
      }
  }
  return std::nullopt;
}

}  // namespace

TEST_SUITE("tau") {
  TEST_CASE("doubling constants") {
    const auto z101 = make_group({101});
    auto s = doubling_constant(z101, std::vector<Index>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(s.sumset_size == 19);
    CHECK(s.K == doctest::Approx(1.9));
    s = doubling_constant(z101, std::vector<Index>{0, 1, 10, 11});
    CHECK(s.sumset_size == 9);
    CHECK(s.K == doctest::Approx(2.25));
    const auto z12 = make_group({12});
    CHECK(doubling_constant(z12, std::vector<Index>{0, 4, 8}).K == 1.0);
    CHECK(error_kind_of([&] { doubling_constant(z12, std::vector<Index>{}); }) == ErrorKind::EmptySet);
    CHECK(s.log16K == doctest::Approx(std::log(36.0)));
    CHECK(s.loglog == doctest::Approx(std::log(std::log(36.0))));
    CHECK_FALSE(s.degenerate());

    Rng rng(1);
    for (int trial = 0; trial < 20; ++trial) {
      const auto g = random_group(rng, 3000, 2);
      const auto a = random_subset(rng, g, 1 + trial * 3);
      std::set<Index> sums;
      for (auto x : a)
        for (auto y : a) sums.insert(g.add(x, y));
      CHECK(doubling_constant(g, a).sumset_size == sums.size());
    }
  }

  TEST_CASE("tau values") {
    const auto z12 = make_group({12});
    const std::vector<Index> h{0, 4, 8};
    const auto sh = doubling_constant(z12, h);
    const Dist uh = uniform_on(z12, h);
    CHECK(std::abs(tau_eval(uh, uh, sh)) < 1e-12);

    const auto z101 = make_group({101});
    const std::vector<Index> a{0, 1, 10, 11};
    const auto st = doubling_constant(z101, a);
    const Dist ua = uniform_on(z101, a);
    const double d = ruzsa_dist(ua, ua);
    const double w = kEta / (std::log(std::log(16.0 * st.K)) * std::log(std::log(std::log(16.0 * st.K))));
    CHECK(tau_eval(ua, ua, st) == doctest::Approx(d * (1.0 + 2.0 * w)).epsilon(1e-12));
    CHECK(tau_eval(ua, ua, st) <= 3.0 * d + 1e-9);
    const Dist pa = Dist::point(z101, 1), pb = Dist::point(z101, 10);
    CHECK(tau_eval(pa, pb, st) == doctest::Approx(w * std::log(4.0)).epsilon(1e-12));
    CHECK(error_kind_of([&] { tau_eval(Dist::point(z101, 5), pa, st); }) == ErrorKind::SupportEscape);
  }

  TEST_CASE("default n_hi") {
    CHECK(default_n_hi(1.0) == 2);
    CHECK(default_n_hi(2.0) == 2);
    CHECK(default_n_hi(std::exp(1.5)) == 11);
    CHECK(default_n_hi(1e6) == 24);
  }

  TEST_CASE("decrement search matches exhaustive fiber scan") {
    const auto z101 = make_group({101});
    const std::vector<Index> a{0, 1, 10, 11};
    const TauContext ctx(doubling_constant(z101, a));
    const Dist ua = uniform_on(z101, a);
    const auto found = decrement_search(ua, ua, ctx.stats(), 2, 3);
    const auto oracle = brute_decrement(ua, ua, ctx, 2, 3);
    REQUIRE(found.has_value() == oracle.has_value());
    if (found) {
      CHECK(found->n == std::get<0>(*oracle));
      CHECK(found->t == std::get<1>(*oracle));
      CHECK(found->s == std::get<2>(*oracle));
      CHECK(found->tau_after == doctest::Approx(std::get<3>(*oracle)).epsilon(1e-12));
      CHECK(found->tau_after <= found->tau_before - 1e-9);
    }
    Rng rng(17);
    for (int trial = 0; trial < 15; ++trial) {
      const auto g = random_group(rng, 150, 2);
      const auto s = random_subset(rng, g, 5);
      const TauContext c(doubling_constant(g, s));
      const Dist p = random_dist_on(rng, g, s), q = random_dist_on(rng, g, s);
      const auto f = decrement_search(p, q, c.stats(), 2, 3);
      const auto o = brute_decrement(p, q, c, 2, 3);
      REQUIRE(f.has_value() == o.has_value());
      if (f) {
        CHECK(f->n == std::get<0>(*o));
        CHECK(f->t == std::get<1>(*o));
        CHECK(f->s == std::get<2>(*o));
      }
    }
  }

  TEST_CASE("decrement search on degenerate inputs") {
    const auto z12 = make_group({12});
    const std::vector<Index> h{0, 4, 8};
    const Dist uh = uniform_on(z12, h);
    CHECK_FALSE(decrement_search(uh, uh, doubling_constant(z12, h), 2, 4));
    const auto z101 = make_group({101});
    const std::vector<Index> a{0, 1, 10, 11};
    const Dist pt = Dist::point(z101, 10);
    CHECK_FALSE(decrement_search(pt, pt, doubling_constant(z101, a), 2, 4));
    CHECK(error_kind_of([&] { decrement_search(pt, pt, doubling_constant(z101, a), 1, 4); }) == ErrorKind::InvalidArgument);
  }

  TEST_CASE("minimize_tau traces") {
    const auto z12 = make_group({12});
    const std::vector<Index> h{1, 5, 9};
    const auto sh = doubling_constant(z12, h);
    auto r = minimize_tau(z12, h, sh);
    CHECK(r.trace.steps.empty());
    CHECK(l1_distance(r.x, uniform_on(z12, h)) < 1e-15);

    const auto sc = ap_scenario(10007, 16);
    const auto st = doubling_constant(sc.group, sc.set);
    MinimizeOptions o;
    o.n_hi = 4;
    r = minimize_tau(sc.group, sc.set, st, o);
    const TauContext ctx(st);
    double prev = r.trace.tau_start;
    CHECK(prev <= 3.0 * ruzsa_dist(ctx.uniform(), ctx.uniform()) + 1e-9);
    for (const auto& s : r.trace.steps) {
      CHECK(s.tau_before == doctest::Approx(prev).epsilon(1e-12));
      CHECK(s.tau_after < s.tau_before - 1e-9);
      prev = s.tau_after;
    }
    CHECK_FALSE(r.trace.hit_max_steps);
    CHECK(r.trace.n_max_searched == 4);
    CHECK_FALSE(brute_decrement(r.x, r.y, ctx, 2, 4));
    // Averaged fiber inequality at a terminal pair.
    for (int n = 2; n <= 4; ++n) CHECK(averaged_fiber_tau(r.x, r.y, ctx, n) >= r.trace.tau_end - 1e-9);
    for (double slack : distance_of_sums_check(r.x, r.y, ruzsa_dist(r.x, r.y), 4)) CHECK(slack <= 1e-9);
  }

  TEST_CASE("terminal distance to U_A for large K") {
    Rng rng(44);
    for (int trial = 0; trial < 3; ++trial) {
      const auto g = make_group({4099});
      const auto a = random_subset(rng, g, 40);
      const auto st = doubling_constant(g, a);
      REQUIRE(st.K >= 16.0);
      MinimizeOptions o;
      o.n_hi = 2;
      const auto r = minimize_tau(g, a, st, o);
      const TauContext ctx(st);
      const double bound = 3.0 / kEta * std::log(st.K) * st.loglog * st.logloglog * (1.0 + 1e-9);
      CHECK(ctx.penalty(r.x) <= bound);
      CHECK(r.trace.tau_end <= r.trace.tau_start);
    }
  }

  TEST_CASE("polish only accepts decreases") {
    const auto z64 = make_group({64});
    const std::vector<Index> a{0, 1, 2, 5, 9, 20};
    const TauContext ctx(doubling_constant(z64, a));
    Rng rng(3);
    const Dist p = random_dist_on(rng, z64, a), q = random_dist_on(rng, z64, a);
    const auto r = polish_tau(p, q, ctx);
    if (r) CHECK(ctx.tau(r->first, r->second) < ctx.tau(p, q) - 1e-9);
  }

  TEST_CASE("growth certificates") {
    const auto z12 = make_group({12});
    const Dist uh = uniform_on(z12, std::vector<Index>{0, 4, 8});
    CHECK(growth_certificate(uh, 6).d_hat == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(growth_certificate(Dist::point(z12, 5), 6).d_hat == 0.0);
    const auto z = make_group({4096});
    const Dist u = uniform_on(z, std::vector<Index>{0, 1});
    const auto c = growth_certificate(u, 8);
    double expect = 0.0;
    for (int n = 2; n <= 8; ++n) {
      CHECK(c.entropies[n - 1] == doctest::Approx(binomial_entropy(n)).epsilon(1e-12));
      expect = std::max(expect, (binomial_entropy(n) - std::log(2.0)) / std::log(static_cast<double>(n)));
    }
    CHECK(c.d_hat == doctest::Approx(expect).epsilon(1e-12));
    for (int n = 2; n <= 8; ++n)
      CHECK(c.entropies[n - 1] <= c.entropies[0] + c.d_hat * std::log(static_cast<double>(n)) + 1e-12);
  }

  TEST_CASE("small growth") {
    CHECK(small_growth_n(2.0) == static_cast<int>(std::floor(64.0 * std::log(2.0))) + 1);
    const auto z12 = make_group({12});
    CHECK(small_growth_check(uniform_on(z12, std::vector<Index>{0, 4, 8}), 2.0).delta == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(small_growth_check(Dist::point(z12, 3), 3.0).delta == 0.0);
    const auto z = make_group({1 << 14});
    const Dist u = uniform_on(z, std::vector<Index>{0, 1});
    const auto c = growth_certificate(u, 256);
    const auto sg = small_growth_check(u, std::max(c.d_hat, 1.5));
    CHECK(sg.delta == doctest::Approx(binomial_entropy(sg.n + 1) - binomial_entropy(sg.n)).epsilon(1e-9));
    CHECK(sg.delta <= 1.0 / 16.0 + 1e-9);
    CHECK(error_kind_of([] { small_growth_n(1.0); }) == ErrorKind::InvalidArgument);
  }
}
