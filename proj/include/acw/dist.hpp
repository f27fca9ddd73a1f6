#pragma once

#include <span>
#include <vector>

#include "acw/group.hpp"

namespace acw {

struct Atom {
  Index at;
  double mass;
};

/// Finitely supported probability distribution on a group. Atoms are sorted by
/// index, merged, normalized, and free of masses below kMassFloor.
class Dist {
 public:
  /// Point mass at 0 on the trivial group.
  Dist();
  Dist(GroupSpec g, std::vector<Atom> atoms);

  static Dist point(const GroupSpec& g, Index x);
  static Dist from_dense(const GroupSpec& g, std::span<const double> pmf);

  const GroupSpec& group() const { return g_; }
  std::span<const Atom> atoms() const { return atoms_; }
  std::size_t support_size() const { return atoms_.size(); }
  std::vector<Index> support() const;
  double mass(Index x) const;
  /// Full table of length |G|; requires |G| within the enumeration cap.
  std::vector<double> dense() const;

 private:
  GroupSpec g_;
  std::vector<Atom> atoms_;
};

struct Fiber {
  Index key;  // conditioning value t (or pi(x) for homomorphism fibers)
  double weight;
  Dist law;
};

/// Laws of a variable conditioned on each value of a statistic.
struct FiberFamily {
  Dist base;
  int n = 0;  // 0 for fibers of a homomorphism
  std::vector<Fiber> fibers;
};

Dist uniform_on(const GroupSpec& g, std::span<const Index> a);

double entropy(const Dist& p);
/// order 0: log |supp|; order 2: -log sum p^2.
double renyi(const Dist& p, int order);
/// +infinity on support escape.
double kl_divergence(const Dist& p, const Dist& q);
double l1_distance(const Dist& p, const Dist& q);

Dist translate(const Dist& p, Index t);
Dist negate(const Dist& p);

/// Law of X + Y (or X - Y) for independent X ~ p, Y ~ q. Picks the direct or
/// DFT path by size.
Dist convolve(const Dist& p, const Dist& q, Sign sign = Sign::plus);
Dist convolve_direct(const Dist& p, const Dist& q, Sign sign = Sign::plus);
Dist convolve_dft(const Dist& p, const Dist& q, Sign sign = Sign::plus);
/// H(X +- Y) for independent X, Y.
double sum_entropy(const Dist& p, const Dist& q, Sign sign = Sign::plus);

Dist iterate_sum(const Dist& p, int n);

/// Law of X_1 given X_1 + ... + X_n = t.
Dist cond_on_sum(const Dist& p, int n, Index t);
FiberFamily fiber_family(const Dist& p, int n);
/// Laws of Y given Y + Z = t for independent Y ~ py, Z ~ pz, for every t.
FiberFamily cond_on_sum_family(const Dist& py, const Dist& pz);
/// Laws of X given pi(X) = u.
FiberFamily fibers_under(const Homomorphism& pi, const Dist& p);

/// E_t H(fiber_t).
double conditional_entropy(const FiberFamily& f);
/// sum_t weight(t) * fiber_t.
Dist mixture(const FiberFamily& f);

Dist push_forward(const Homomorphism& pi, const Dist& p);

void require_same_group(const Dist& p, const Dist& q);

}  // namespace acw
