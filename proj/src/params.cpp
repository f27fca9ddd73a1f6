#include "acw/params.hpp"

#include <cmath>
#include <numbers>

#include "acw/error.hpp"
#include "acw/tau.hpp"

namespace acw {

std::string ParamChoice::binding() const {
  if (!check1) return "(1)";
  if (!check2) return "(2)";
  if (!check3) return "(3)";
  if (!check4) return "(4)";
  return {};
}

namespace {

// log of the right side of (1) minus log of its left side; >= 0 iff (1) holds.
double slack1(double d, int ell, double eps, double m) {
  return -std::numbers::ln2 - d * std::log(ell * m) - 30.0 * d * std::log(d) - m * std::log1p(-eps * eps / 2.0);
}

double exponent2(double d, int ell, double m) {
  return d * std::log(ell * m) + 150.0 * d * std::log(d) + std::log(32.0);
}

constexpr double kMaxM = 4e18;

}  // namespace

std::uint64_t smallest_m(double d, int ell, double eps) {
  if (slack1(d, ell, eps, 1.0) >= 0.0) return 1;
  double hi = 2.0;
  while (slack1(d, ell, eps, hi) < 0.0) {
    hi *= 2.0;
    if (hi > kMaxM) throw Error(ErrorKind::Infeasible, "(1) needs m beyond 4e18");
  }
  auto lo = static_cast<std::uint64_t>(hi / 2.0);
  auto h = static_cast<std::uint64_t>(hi);
  while (h - lo > 1) {
    const std::uint64_t mid = lo + (h - lo) / 2;
    if (slack1(d, ell, eps, static_cast<double>(mid)) >= 0.0)
      h = mid;
    else
      lo = mid;
  }
  return h;
}

int smallest_r(double d, int ell, std::uint64_t m) {
  const double need = exponent2(d, ell, static_cast<double>(m)) / std::numbers::ln2;
  int r = std::max(0, static_cast<int>(std::ceil(need)) - 1);
  while (static_cast<double>(r) * std::numbers::ln2 < exponent2(d, ell, static_cast<double>(m))) ++r;
  return r;
}

ParamChecks verify_params(double d, double C, int ell, std::uint64_t m, int r, double eps) {
  using L = long double;
  const L ld = d, lm = static_cast<L>(m), lell = ell, le = eps;
  const L lhs1 = std::pow(1.0L - le * le / 2.0L, lm);
  const L rhs1 = 0.5L * std::exp(-ld * std::log(lell * lm)) * std::pow(ld, -30.0L * ld);
  const L lhs2 = std::log(lell * lm) * ld + 150.0L * ld * std::log(ld) + std::log(32.0L);
  const L rhs2 = static_cast<L>(r) * std::log(2.0L);
  return {lhs1 <= rhs1, lhs2 <= rhs2, (3.0L * r + 1.0L) * 4.0L * le < 0.25L, lell * lm <= static_cast<L>(C) * std::pow(ld, 5.0L)};
}

ParamChoice search_params(double d, double C, int max_j) {
  if (!(d > 1.0)) throw Error(ErrorKind::InvalidArgument, "parameter search needs d > 1");
  if (!(C > 0.0)) throw Error(ErrorKind::InvalidArgument, "C must be positive");
  const int ell = small_growth_n(d);
  std::string last = "(3)";
  for (int j = 1; j <= max_j; ++j) {
    const double eps = std::ldexp(1.0, -j);
    std::uint64_t m = 0;
    try {
      m = smallest_m(d, ell, eps);
    } catch (const Error&) {
      last = "(1)";
      break;
    }
    // Guard against rounding disagreement with the extended-precision check.
    for (int bump = 0; bump < 4 && !verify_params(d, C, ell, m, 0, eps).c1; ++bump) ++m;
    const int r = smallest_r(d, ell, m);
    if (!((3.0 * r + 1.0) * 4.0 * eps < 0.25)) continue;
    ParamChoice p;
    p.d = d;
    p.C = C;
    p.ell = ell;
    p.m = m;
    p.r = r;
    p.eps = eps;
    p.j = j;
    const auto c = verify_params(d, C, ell, m, r, eps);
    p.check1 = c.c1;
    p.check2 = c.c2;
    p.check3 = c.c3;
    p.check4 = c.c4;
    return p;
  }
  throw Error(ErrorKind::Infeasible, "no eps = 2^-j with j <= " + std::to_string(max_j) + " satisfies " + last);
}

ParamChoice solve_params(double d, double C) {
  const ParamChoice p = search_params(d, C);
  if (!p.all())
    throw Error(ErrorKind::Infeasible, "constraint " + p.binding() + " fails: ell m = " +
                                           std::to_string(static_cast<double>(p.ell) * static_cast<double>(p.m)) +
                                           " vs C d^5 = " + std::to_string(C * std::pow(d, 5.0)));
  return p;
}

}  // namespace acw
