#include "acw/group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "acw/error.hpp"
#include "acw/limits.hpp"

namespace acw {

using u128 = unsigned __int128;

struct GroupSpec::Data {
  std::vector<std::int64_t> moduli;
  std::vector<std::uint64_t> strides;
  std::vector<std::uint64_t> phase_scale;  // exponent / n_i
  std::uint64_t order = 1;
  std::uint64_t exponent = 1;
};

GroupSpec::GroupSpec() : GroupSpec(make({1})) {}

GroupSpec::GroupSpec(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

GroupSpec GroupSpec::make(std::vector<std::int64_t> moduli) {
  if (moduli.empty()) throw Error(ErrorKind::InvalidArgument, "group needs at least one modulus");
  auto d = std::make_shared<Data>();
  u128 order = 1;
  std::uint64_t lcm = 1;
  for (auto n : moduli) {
    if (n < 1) throw Error(ErrorKind::ZeroModulus, "modulus " + std::to_string(n) + " < 1");
    order *= static_cast<std::uint64_t>(n);
    if (order > std::numeric_limits<std::uint64_t>::max())
      throw Error(ErrorKind::OrderOverflow, "group order does not fit in 64 bits");
    lcm = std::lcm(lcm, static_cast<std::uint64_t>(n));
  }
  d->moduli = std::move(moduli);
  d->order = static_cast<std::uint64_t>(order);
  d->exponent = lcm;
  const auto k = d->moduli.size();
  d->strides.assign(k, 1);
  for (std::size_t i = k - 1; i-- > 0;)
    d->strides[i] = d->strides[i + 1] * static_cast<std::uint64_t>(d->moduli[i + 1]);
  d->phase_scale.resize(k);
  for (std::size_t i = 0; i < k; ++i) d->phase_scale[i] = lcm / static_cast<std::uint64_t>(d->moduli[i]);
  return GroupSpec(std::move(d));
}

GroupSpec make_group(std::vector<std::int64_t> moduli) { return GroupSpec::make(std::move(moduli)); }

std::span<const std::int64_t> GroupSpec::moduli() const { return d_->moduli; }
std::size_t GroupSpec::rank() const { return d_->moduli.size(); }
std::uint64_t GroupSpec::order() const { return d_->order; }
std::uint64_t GroupSpec::exponent() const { return d_->exponent; }
std::uint64_t GroupSpec::stride(std::size_t axis) const { return d_->strides[axis]; }

Index GroupSpec::encode(std::span<const std::int64_t> coords) const {
  if (coords.size() != rank())
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(rank()) + " coordinates, got " +
                                                  std::to_string(coords.size()));
  Index x = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const auto n = d_->moduli[i];
    auto r = coords[i] % n;
    if (r < 0) r += n;
    x += static_cast<Index>(r) * d_->strides[i];
  }
  return x;
}

GroupElement GroupSpec::decode(Index x) const {
  GroupElement e;
  e.coords.resize(rank());
  for (std::size_t i = 0; i < rank(); ++i) e.coords[i] = coord(x, i);
  return e;
}

std::int64_t GroupSpec::coord(Index x, std::size_t axis) const {
  return static_cast<std::int64_t>((x / d_->strides[axis]) % static_cast<std::uint64_t>(d_->moduli[axis]));
}

Index GroupSpec::add(Index a, Index b) const {
  const auto& m = d_->moduli;
  if (m.size() == 1) {
    const auto n = static_cast<std::uint64_t>(m[0]);
    const auto s = a + b;
    return s >= n ? s - n : s;
  }
  Index r = 0;
  for (std::size_t i = m.size(); i-- > 0;) {
    const auto n = static_cast<std::uint64_t>(m[i]);
    auto s = a % n + b % n;
    if (s >= n) s -= n;
    r += s * d_->strides[i];
    a /= n;
    b /= n;
  }
  return r;
}

Index GroupSpec::neg(Index a) const {
  const auto& m = d_->moduli;
  if (m.size() == 1) return a == 0 ? 0 : static_cast<std::uint64_t>(m[0]) - a;
  Index r = 0;
  for (std::size_t i = m.size(); i-- > 0;) {
    const auto n = static_cast<std::uint64_t>(m[i]);
    const auto c = a % n;
    r += (c == 0 ? 0 : n - c) * d_->strides[i];
    a /= n;
  }
  return r;
}

Index GroupSpec::sub(Index a, Index b) const { return add(a, neg(b)); }

Index GroupSpec::scale(Index a, std::int64_t k) const {
  const auto& m = d_->moduli;
  Index r = 0;
  for (std::size_t i = m.size(); i-- > 0;) {
    const auto n = m[i];
    const auto c = static_cast<std::int64_t>(a % static_cast<std::uint64_t>(n));
    auto km = k % n;
    if (km < 0) km += n;
    const auto prod = static_cast<std::uint64_t>((static_cast<__int128>(c) * km) % n);
    r += prod * d_->strides[i];
    a /= static_cast<std::uint64_t>(n);
  }
  return r;
}

std::uint64_t GroupSpec::phase(Index chi, Index x) const {
  const auto& m = d_->moduli;
  const auto L = d_->exponent;
  if (m.size() == 1) {
    return static_cast<std::uint64_t>((static_cast<u128>(chi) * x) % static_cast<std::uint64_t>(m[0]));
  }
  u128 acc = 0;
  for (std::size_t i = m.size(); i-- > 0;) {
    const auto n = static_cast<std::uint64_t>(m[i]);
    const u128 ax = (static_cast<u128>(chi % n) * (x % n)) % n;
    acc = (acc + ax * d_->phase_scale[i]) % L;
    chi /= n;
    x /= n;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t GroupSpec::phase_distance(Index chi, Index x) const {
  const auto u = phase(chi, x);
  return std::min(u, exponent() - u);
}

std::string GroupSpec::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rank(); ++i) os << (i ? " x " : "") << "Z/" << d_->moduli[i];
  return os.str();
}

bool GroupSpec::operator==(const GroupSpec& other) const {
  return d_ == other.d_ || d_->moduli == other.d_->moduli;
}

GroupElement group_op(const GroupSpec& g, const GroupElement& a, const GroupElement& b, Sign sign) {
  const auto ia = g.encode(a);
  const auto ib = g.encode(b);
  return g.decode(sign == Sign::plus ? g.add(ia, ib) : g.sub(ia, ib));
}

std::complex<double> char_eval(const GroupSpec& g, Index chi, Index x) {
  const auto L = g.exponent();
  const auto u = g.phase(chi, x);
  // Reduce to [-1/2, 1/2] turns before scaling so the angle keeps full precision.
  const double turns = u * 2 <= L ? static_cast<double>(u) / static_cast<double>(L)
                                  : -static_cast<double>(L - u) / static_cast<double>(L);
  const double angle = 2.0 * std::numbers::pi * turns;
  return {std::cos(angle), std::sin(angle)};
}

std::complex<double> char_eval(const GroupSpec& g, const Character& chi, const GroupElement& x) {
  return char_eval(g, g.encode(chi), g.encode(x));
}

double char_distance_from_one(const GroupSpec& g, Index chi, Index x) {
  const auto dist = g.phase_distance(chi, x);
  return 2.0 * std::sin(std::numbers::pi * static_cast<double>(dist) / static_cast<double>(g.exponent()));
}

Homomorphism::Homomorphism(GroupSpec source, GroupSpec target, std::vector<std::vector<std::int64_t>> matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.size() != target_.rank())
    throw Error(ErrorKind::DimensionMismatch, "homomorphism matrix needs one row per target coordinate");
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    if (matrix_[i].size() != source_.rank())
      throw Error(ErrorKind::DimensionMismatch, "homomorphism matrix needs one column per source coordinate");
    const auto mi = target_.moduli()[i];
    for (std::size_t j = 0; j < source_.rank(); ++j) {
      const auto nj = source_.moduli()[j];
      const auto r = (static_cast<__int128>(nj) * matrix_[i][j]) % mi;
      if (r != 0)
        throw Error(ErrorKind::IllFormedHom, "column " + std::to_string(j) + " does not annihilate n_j = " +
                                                 std::to_string(nj) + " in Z/" + std::to_string(mi));
    }
  }
}

Homomorphism Homomorphism::identity(const GroupSpec& g) {
  std::vector<std::vector<std::int64_t>> m(g.rank(), std::vector<std::int64_t>(g.rank(), 0));
  for (std::size_t i = 0; i < g.rank(); ++i) m[i][i] = 1;
  return Homomorphism(g, g, std::move(m));
}

Homomorphism Homomorphism::addition(const GroupSpec& g) {
  const auto k = g.rank();
  std::vector<std::vector<std::int64_t>> m(k, std::vector<std::int64_t>(2 * k, 0));
  for (std::size_t i = 0; i < k; ++i) m[i][i] = m[i][k + i] = 1;
  return Homomorphism(product_group(g, g), g, std::move(m));
}

Homomorphism Homomorphism::projection_first(const GroupSpec& g, const GroupSpec& h) {
  std::vector<std::vector<std::int64_t>> m(g.rank(), std::vector<std::int64_t>(g.rank() + h.rank(), 0));
  for (std::size_t i = 0; i < g.rank(); ++i) m[i][i] = 1;
  return Homomorphism(product_group(g, h), g, std::move(m));
}

Homomorphism Homomorphism::trivial(const GroupSpec& g) {
  return Homomorphism(g, GroupSpec{}, {std::vector<std::int64_t>(g.rank(), 0)});
}

Index Homomorphism::apply(Index x) const {
  Index r = 0;
  for (std::size_t i = 0; i < target_.rank(); ++i) {
    const auto mi = target_.moduli()[i];
    __int128 acc = 0;
    for (std::size_t j = 0; j < source_.rank(); ++j) acc += static_cast<__int128>(matrix_[i][j]) * source_.coord(x, j);
    auto v = static_cast<std::int64_t>(acc % mi);
    if (v < 0) v += mi;
    r += static_cast<Index>(v) * target_.stride(i);
  }
  return r;
}

GroupElement Homomorphism::apply(const GroupElement& x) const { return target_.decode(apply(source_.encode(x))); }

GroupElement hom_apply(const Homomorphism& pi, const GroupElement& x) { return pi.apply(x); }

GroupSpec product_group(const GroupSpec& g, const GroupSpec& h) {
  std::vector<std::int64_t> m(g.moduli().begin(), g.moduli().end());
  m.insert(m.end(), h.moduli().begin(), h.moduli().end());
  return GroupSpec::make(std::move(m));
}

namespace {

// Membership flags for subsets of G: dense bitmap when the group is small
// enough to enumerate, hash set otherwise.
class ElementSet {
 public:
  explicit ElementSet(std::uint64_t order) : dense_(order <= limits().enumeration) {
    if (dense_) flags_.assign(order, 0);
  }
  bool contains(Index x) const { return dense_ ? flags_[x] != 0 : sparse_.count(x) != 0; }
  void insert(Index x) {
    if (dense_)
      flags_[x] = 1;
    else
      sparse_.insert(x);
  }

 private:
  bool dense_;
  std::vector<char> flags_;
  std::unordered_set<Index> sparse_;
};

}  // namespace

std::vector<Index> subgroup_from_generators(const GroupSpec& g, std::span<const Index> gens) {
  const auto cap = limits().enumeration;
  ElementSet in_h(g.order());
  std::vector<Index> h{0};
  in_h.insert(0);
  for (const auto gen : gens) {
    if (!g.contains(gen)) throw Error(ErrorKind::DimensionMismatch, "generator outside the group");
    if (in_h.contains(gen)) continue;
    // H + <gen> is the disjoint union of H + j*gen until j*gen falls back into H.
    const auto base = h.size();
    for (Index shift = gen; !in_h.contains(shift); shift = g.add(shift, gen)) {
      if (h.size() + base > cap)
        throw Error(ErrorKind::CapExceeded, "subgroup closure exceeds enumeration cap " + std::to_string(cap));
      for (std::size_t i = 0; i < base; ++i) {
        const auto y = g.add(h[i], shift);
        h.push_back(y);
        in_h.insert(y);
      }
    }
  }
  std::sort(h.begin(), h.end());
  return h;
}

std::vector<Index> subgroup_from_generators(const GroupSpec& g, const std::vector<GroupElement>& gens) {
  std::vector<Index> idx;
  idx.reserve(gens.size());
  for (const auto& e : gens) idx.push_back(g.encode(e));
  return subgroup_from_generators(g, idx);
}

std::vector<Index> annihilated_subgroup(const GroupSpec& g, std::span<const Index> chars) {
  if (g.order() > limits().enumeration) throw Error(ErrorKind::CapExceeded, "group too large to scan");
  std::vector<Index> out;
  for (Index x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto c : chars)
      if (g.phase(c, x) != 0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<Index> annihilator(const GroupSpec& g, std::span<const Index> h) {
  return annihilated_subgroup(g, h);  // phase(chi, x) is symmetric in chi and x
}

}  // namespace acw
