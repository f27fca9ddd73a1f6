#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace acw {

/// Mixed-radix code of a group element (or character). The first coordinate
/// is the most significant digit, so numeric order is lexicographic order on
/// coordinates.
using Index = std::uint64_t;

struct GroupElement {
  std::vector<std::int64_t> coords;
  bool operator==(const GroupElement&) const = default;
};

/// Characters are indexed by the same coordinate tuples as elements:
/// gamma_a(x) = exp(2 pi i sum a_i x_i / n_i).
struct Character {
  std::vector<std::int64_t> coords;
  bool operator==(const Character&) const = default;
};

/// G = Z/n_1 x ... x Z/n_k. Cheap to copy (shared immutable data).
class GroupSpec {
 public:
  /// The trivial group Z/1.
  GroupSpec();

  static GroupSpec make(std::vector<std::int64_t> moduli);

  std::span<const std::int64_t> moduli() const;
  std::size_t rank() const;
  std::uint64_t order() const;
  /// lcm of the moduli; common denominator of all character phases.
  std::uint64_t exponent() const;

  Index encode(std::span<const std::int64_t> coords) const;
  Index encode(const GroupElement& x) const { return encode(x.coords); }
  Index encode(const Character& c) const { return encode(c.coords); }
  GroupElement decode(Index x) const;
  std::int64_t coord(Index x, std::size_t axis) const;
  std::uint64_t stride(std::size_t axis) const;

  Index add(Index a, Index b) const;
  Index sub(Index a, Index b) const;
  Index neg(Index a) const;
  Index scale(Index a, std::int64_t k) const;
  bool contains(Index x) const { return x < order(); }

  /// Phase numerator u in [0, exponent()) with gamma_chi(x) = exp(2 pi i u / exponent()).
  std::uint64_t phase(Index chi, Index x) const;
  /// Distance of the phase to the nearest integer, in units of 1/exponent().
  std::uint64_t phase_distance(Index chi, Index x) const;

  std::string to_string() const;
  bool operator==(const GroupSpec& other) const;

 private:
  struct Data;
  explicit GroupSpec(std::shared_ptr<const Data> d);
  std::shared_ptr<const Data> d_;
};

GroupSpec make_group(std::vector<std::int64_t> moduli);

enum class Sign { plus = 1, minus = -1 };

GroupElement group_op(const GroupSpec& g, const GroupElement& a, const GroupElement& b,
                      Sign sign = Sign::plus);

std::complex<double> char_eval(const GroupSpec& g, const Character& chi, const GroupElement& x);
std::complex<double> char_eval(const GroupSpec& g, Index chi, Index x);
/// |gamma(x) - 1| computed from the exact integer phase.
double char_distance_from_one(const GroupSpec& g, Index chi, Index x);

/// Integer matrix map source -> target, reduced mod the target moduli.
/// matrix[i][j]: coefficient of source coordinate j in target coordinate i.
class Homomorphism {
 public:
  Homomorphism(GroupSpec source, GroupSpec target, std::vector<std::vector<std::int64_t>> matrix);

  static Homomorphism identity(const GroupSpec& g);
  /// (x, y) -> x + y on g x g.
  static Homomorphism addition(const GroupSpec& g);
  /// (x, y) -> x on g x h.
  static Homomorphism projection_first(const GroupSpec& g, const GroupSpec& h);
  /// Everything to the trivial group.
  static Homomorphism trivial(const GroupSpec& g);

  const GroupSpec& source() const { return source_; }
  const GroupSpec& target() const { return target_; }
  const std::vector<std::vector<std::int64_t>>& matrix() const { return matrix_; }

  Index apply(Index x) const;
  GroupElement apply(const GroupElement& x) const;

 private:
  GroupSpec source_;
  GroupSpec target_;
  std::vector<std::vector<std::int64_t>> matrix_;
};

GroupElement hom_apply(const Homomorphism& pi, const GroupElement& x);

/// G x H with G's coordinates first.
GroupSpec product_group(const GroupSpec& g, const GroupSpec& h);

/// Closure of gens under + and -, sorted. Always contains 0.
std::vector<Index> subgroup_from_generators(const GroupSpec& g, std::span<const Index> gens);
std::vector<Index> subgroup_from_generators(const GroupSpec& g,
                                            const std::vector<GroupElement>& gens);

/// Subgroup annihilated by every character in chars: {x : gamma(x) = 1}.
std::vector<Index> annihilated_subgroup(const GroupSpec& g, std::span<const Index> chars);
/// Characters trivial on every element of h.
std::vector<Index> annihilator(const GroupSpec& g, std::span<const Index> h);

}  // namespace acw
