#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "acw/dist.hpp"

namespace acw {

/// d[X;Y] = H(X' - Y') - H(X)/2 - H(Y)/2 for independent copies.
double ruzsa_dist(const Dist& p, const Dist& q);
/// E_{s,t} d[X|T=t; Y|S=s] with product weights.
double cond_ruzsa_dist(const FiberFamily& pf, const FiberFamily& qf);
/// d[X; Y|Y+Z] with X unconditioned.
double ruzsa_dist_given_sum(const Dist& px, const Dist& py, const Dist& pz);

struct InequalityCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  bool holds = true;
};

InequalityCheck make_check(std::string name, double lhs, double rhs, double tol = 1e-9);

struct ErcReport {
  std::vector<InequalityCheck> entries;
  bool all_hold() const;
  double worst_slack() const;
};

/// The five Ruzsa-calculus inequalities for independent X ~ p, Y ~ q, Z ~ r.
ErcReport erc_check(const Dist& p, const Dist& q, const Dist& r);

/// d[Z1;Z2] - d[pi Z1; pi Z2] - d[Z1|pi Z1; Z2|pi Z2].
double fibring_check(const Homomorphism& pi, const Dist& p1, const Dist& p2);
/// d[X;Y] + d[(n-1)X;(n-1)Y] - d[nX;nY] - d[X|nX; Y|nY].
double fibring_application_check(const Dist& p, const Dist& q, int n);

/// H(Z - Y) - H(Y) against sum_z p_Z(z) KL(z - Y || X).
InequalityCheck sum_entropy_formula_check(const Dist& px, const Dist& py, const Dist& pz);

struct CosetStructure {
  std::vector<Index> subgroup;  // sorted
  Index shift = 0;              // least element of the coset
};

/// Finds (H, s) with p within l1 distance tol of uniform on s + H.
std::optional<CosetStructure> coset_structure_detect(const Dist& p, double tol);

/// log|S| - (H(Y) - 4 d[X;Y] - 2 log 2); requires P(X in S) >= 1/2.
double concentration_check(const Dist& p, const Dist& q, std::span<const Index> s);

}  // namespace acw
