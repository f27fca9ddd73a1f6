#pragma once

#include <cstdint>
#include <string>

namespace acw {

/// Parameters (ell, m, r, eps) for the Bohr-set stage, with the four
/// inequalities they must satisfy:
///   (1) (1 - eps^2/2)^m <= exp(-d log(ell m) - 30 d log d) / 2
///   (2) exp(d log(ell m) + 150 d log d + log 32) <= 2^r
///   (3) (3r + 1) 4 eps < 1/4
///   (4) ell m <= C d^5
struct ParamChoice {
  double d = 2.0;
  double C = 1e6;
  int ell = 0;
  std::uint64_t m = 0;
  int r = 0;
  double eps = 0.0;
  int j = 0;  // eps = 2^-j
  bool check1 = false, check2 = false, check3 = false, check4 = false;

  bool all() const { return check1 && check2 && check3 && check4; }
  /// First failing inequality as "(k)", or empty.
  std::string binding() const;
};

/// Smallest m >= 1 with (1) at the given eps.
std::uint64_t smallest_m(double d, int ell, double eps);
/// Smallest r >= 0 with (2).
int smallest_r(double d, int ell, std::uint64_t m);

/// Largest eps = 2^-j admitting (1)-(3); (4) is evaluated but not enforced.
ParamChoice search_params(double d, double C, int max_j = 40);
/// search_params, throwing Infeasible unless all four hold.
ParamChoice solve_params(double d, double C);

/// Re-evaluates the four inequalities directly in extended precision.
struct ParamChecks {
  bool c1, c2, c3, c4;
  bool all() const { return c1 && c2 && c3 && c4; }
};
ParamChecks verify_params(double d, double C, int ell, std::uint64_t m, int r, double eps);

}  // namespace acw
