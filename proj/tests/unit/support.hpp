#pragma once

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <set>

#include "acw/dist.hpp"
#include "acw/error.hpp"

namespace acw::test {

inline std::vector<Index> elems(const GroupSpec& g, std::initializer_list<std::vector<std::int64_t>> xs) {
  std::vector<Index> out;
  for (const auto& x : xs) out.push_back(g.encode(x));
  return out;
}

inline Index el(const GroupSpec& g, std::vector<std::int64_t> x) { return g.encode(x); }

/// Dense pmf oracle: entry-by-entry sum of independent pairs.
inline std::vector<double> brute_convolve(const Dist& p, const Dist& q, Sign s = Sign::plus) {
  const auto& g = p.group();
  std::vector<double> out(g.order(), 0.0);
  for (const auto& a : p.atoms())
    for (const auto& b : q.atoms()) out[s == Sign::plus ? g.add(a.at, b.at) : g.sub(a.at, b.at)] += a.mass * b.mass;
  return out;
}

inline double brute_entropy(const std::vector<double>& v) {
  double h = 0.0;
  for (double x : v)
    if (x > 0.0) h -= x * std::log(x);
  return h;
}

inline double sup_diff(const Dist& p, const std::vector<double>& dense) {
  double m = 0.0;
  for (Index x = 0; x < dense.size(); ++x) m = std::max(m, std::abs(p.mass(x) - dense[x]));
  return m;
}

inline double binomial_entropy(int n) {
  double h = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double p = std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) - n * std::log(2.0));
    h -= p * std::log(p);
  }
  return h;
}

template <class F>
ErrorKind error_kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an acw::Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace acw::test
