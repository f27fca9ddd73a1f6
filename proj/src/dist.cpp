#include "acw/dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "acw/error.hpp"
#include "acw/fft.hpp"
#include "acw/limits.hpp"

namespace acw {

namespace {

// Compensated (Neumaier) accumulator.
struct Sum {
  double s = 0.0, c = 0.0;
  void add(double v) {
    const double t = s + v;
    c += std::abs(s) >= std::abs(v) ? (s - t) + v : (v - t) + s;
    s = t;
  }
  double value() const { return s + c; }
};

std::vector<Atom> normalized(std::vector<Atom> atoms) {
  Sum total;
  for (const auto& a : atoms) total.add(a.mass);
  const double z = total.value();
  if (!(z > 0.0) || !std::isfinite(z)) throw Error(ErrorKind::InvalidArgument, "distribution has no positive mass");
  for (auto& a : atoms) a.mass /= z;
  std::erase_if(atoms, [](const Atom& a) { return a.mass < kMassFloor; });
  Sum kept;
  for (const auto& a : atoms) kept.add(a.mass);
  const double k = kept.value();
  for (auto& a : atoms) a.mass /= k;
  return atoms;
}

}  // namespace

Dist::Dist() : g_(), atoms_{{0, 1.0}} {}

Dist::Dist(GroupSpec g, std::vector<Atom> atoms) : g_(std::move(g)) {
  for (const auto& a : atoms) {
    if (!g_.contains(a.at)) throw Error(ErrorKind::InvalidArgument, "atom outside the group");
    if (!(a.mass >= 0.0) || !std::isfinite(a.mass)) throw Error(ErrorKind::InvalidArgument, "negative or non-finite mass");
  }
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.at < b.at; });
  std::vector<Atom> merged;
  merged.reserve(atoms.size());
  for (const auto& a : atoms) {
    if (a.mass == 0.0) continue;
    if (!merged.empty() && merged.back().at == a.at)
      merged.back().mass += a.mass;
    else
      merged.push_back(a);
  }
  atoms_ = normalized(std::move(merged));
}

Dist Dist::point(const GroupSpec& g, Index x) { return Dist(g, {{x, 1.0}}); }

Dist Dist::from_dense(const GroupSpec& g, std::span<const double> pmf) {
  if (pmf.size() != g.order()) throw Error(ErrorKind::DimensionMismatch, "dense pmf length differs from |G|");
  std::vector<Atom> atoms;
  for (Index x = 0; x < pmf.size(); ++x)
    if (pmf[x] > 0.0) atoms.push_back({x, pmf[x]});
  return Dist(g, std::move(atoms));
}

std::vector<Index> Dist::support() const {
  std::vector<Index> s;
  s.reserve(atoms_.size());
  for (const auto& a : atoms_) s.push_back(a.at);
  return s;
}

double Dist::mass(Index x) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x, [](const Atom& a, Index v) { return a.at < v; });
  return it != atoms_.end() && it->at == x ? it->mass : 0.0;
}

std::vector<double> Dist::dense() const {
  if (g_.order() > limits().enumeration)
    throw Error(ErrorKind::CapExceeded, "dense table needs |G| <= " + std::to_string(limits().enumeration));
  std::vector<double> out(g_.order(), 0.0);
  for (const auto& a : atoms_) out[a.at] = a.mass;
  return out;
}

void require_same_group(const Dist& p, const Dist& q) {
  if (!(p.group() == q.group()))
    throw Error(ErrorKind::GroupMismatch, p.group().to_string() + " vs " + q.group().to_string());
}

Dist uniform_on(const GroupSpec& g, std::span<const Index> a) {
  if (a.empty()) throw Error(ErrorKind::EmptySet, "uniform distribution on an empty set");
  std::vector<Index> s(a.begin(), a.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<Atom> atoms;
  atoms.reserve(s.size());
  const double m = 1.0 / static_cast<double>(s.size());
  for (auto x : s) atoms.push_back({x, m});
  return Dist(g, std::move(atoms));
}

double entropy(const Dist& p) {
  Sum h;
  for (const auto& a : p.atoms()) h.add(-a.mass * std::log(a.mass));
  return std::max(0.0, h.value());
}

double renyi(const Dist& p, int order) {
  if (order == 0) return std::log(static_cast<double>(p.support_size()));
  if (order == 2) {
    Sum s;
    for (const auto& a : p.atoms()) s.add(a.mass * a.mass);
    return std::max(0.0, -std::log(s.value()));
  }
  throw Error(ErrorKind::InvalidArgument, "Renyi order must be 0 or 2");
}

double kl_divergence(const Dist& p, const Dist& q) {
  require_same_group(p, q);
  Sum s;
  for (const auto& a : p.atoms()) {
    const double qm = q.mass(a.at);
    if (qm == 0.0) return std::numeric_limits<double>::infinity();
    s.add(a.mass * std::log(a.mass / qm));
  }
  return s.value();
}

double l1_distance(const Dist& p, const Dist& q) {
  require_same_group(p, q);
  Sum s;
  auto a = p.atoms();
  auto b = q.atoms();
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].at < b[j].at)) {
      s.add(a[i++].mass);
    } else if (i == a.size() || b[j].at < a[i].at) {
      s.add(b[j++].mass);
    } else {
      s.add(std::abs(a[i++].mass - b[j++].mass));
    }
  }
  return s.value();
}

Dist translate(const Dist& p, Index t) {
  std::vector<Atom> atoms;
  atoms.reserve(p.support_size());
  for (const auto& a : p.atoms()) atoms.push_back({p.group().add(a.at, t), a.mass});
  return Dist(p.group(), std::move(atoms));
}

Dist negate(const Dist& p) {
  std::vector<Atom> atoms;
  atoms.reserve(p.support_size());
  for (const auto& a : p.atoms()) atoms.push_back({p.group().neg(a.at), a.mass});
  return Dist(p.group(), std::move(atoms));
}

Dist convolve_direct(const Dist& p, const Dist& q, Sign sign) {
  require_same_group(p, q);
  const auto& g = p.group();
  const std::uint64_t pairs = p.support_size() * q.support_size();
  auto combine = [&](Index x, Index y) { return sign == Sign::plus ? g.add(x, y) : g.sub(x, y); };
  if (g.order() <= limits().enumeration && g.order() <= 8 * pairs + 1024) {
    std::vector<double> acc(g.order(), 0.0);
    for (const auto& a : p.atoms())
      for (const auto& b : q.atoms()) acc[combine(a.at, b.at)] += a.mass * b.mass;
    return Dist::from_dense(g, acc);
  }
  std::vector<Atom> atoms;
  atoms.reserve(pairs);
  for (const auto& a : p.atoms())
    for (const auto& b : q.atoms()) atoms.push_back({combine(a.at, b.at), a.mass * b.mass});
  return Dist(g, std::move(atoms));
}

Dist convolve_dft(const Dist& p, const Dist& q, Sign sign) {
  require_same_group(p, q);
  const auto& g = p.group();
  if (g.order() > limits().dft_order)
    throw Error(ErrorKind::CapExceeded, "convolution via DFT needs |G| <= " + std::to_string(limits().dft_order));
  Spectrum f(g.order()), h(g.order());
  for (const auto& a : p.atoms()) f[a.at] = a.mass;
  for (const auto& a : q.atoms()) h[a.at] = a.mass;
  dft_forward(g, f);
  dft_forward(g, h);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] *= sign == Sign::plus ? h[i] : std::conj(h[i]);
  dft_backward(g, f);
  const double scale = 1.0 / static_cast<double>(g.order());
  std::vector<double> pmf(g.order());
  for (std::size_t i = 0; i < f.size(); ++i) pmf[i] = std::max(0.0, f[i].real() * scale);
  return Dist::from_dense(g, pmf);
}

Dist convolve(const Dist& p, const Dist& q, Sign sign) {
  require_same_group(p, q);
  const std::uint64_t pairs = p.support_size() * q.support_size();
  if (pairs <= limits().direct_pairs) return convolve_direct(p, q, sign);
  if (p.group().order() <= limits().dft_order) return convolve_dft(p, q, sign);
  throw Error(ErrorKind::CapExceeded, "convolution of supports " + std::to_string(p.support_size()) + " x " +
                                          std::to_string(q.support_size()) + " on a group of order " +
                                          std::to_string(p.group().order()));
}

double sum_entropy(const Dist& p, const Dist& q, Sign sign) { return entropy(convolve(p, q, sign)); }

Dist iterate_sum(const Dist& p, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "iterate_sum needs n >= 1");
  Dist base = p;
  Dist result;
  bool have = false;
  while (n > 0) {
    if (n & 1) {
      result = have ? convolve(result, base) : base;
      have = true;
    }
    n >>= 1;
    if (n > 0) base = convolve(base, base);
  }
  return result;
}

namespace {

// Mass lookup for repeated queries: dense when the group is small enough.
class MassTable {
 public:
  explicit MassTable(const Dist& p) : p_(p) {
    if (p.group().order() <= limits().enumeration) dense_ = p.dense();
  }
  double operator()(Index x) const { return dense_.empty() ? p_.mass(x) : dense_[x]; }

 private:
  const Dist& p_;
  std::vector<double> dense_;
};

Fiber make_fiber(const Dist& py, const MassTable& pz, Index t) {
  const auto& g = py.group();
  std::vector<Atom> atoms;
  Sum w;
  for (const auto& a : py.atoms()) {
    const double m = a.mass * pz(g.sub(t, a.at));
    if (m > 0.0) {
      atoms.push_back({a.at, m});
      w.add(m);
    }
  }
  if (atoms.empty()) throw Error(ErrorKind::ZeroProbabilityFiber, "P(sum = " + std::to_string(t) + ") = 0");
  return Fiber{t, w.value(), Dist(g, std::move(atoms))};
}

void renormalize_weights(FiberFamily& f) {
  std::erase_if(f.fibers, [](const Fiber& x) { return x.weight < kFiberWeightFloor; });
  Sum total;
  for (const auto& x : f.fibers) total.add(x.weight);
  const double z = total.value();
  for (auto& x : f.fibers) x.weight /= z;
}

}  // namespace

Dist cond_on_sum(const Dist& p, int n, Index t) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "conditioning on a sum needs n >= 2");
  const Dist rest = iterate_sum(p, n - 1);
  return make_fiber(p, MassTable(rest), t).law;
}

FiberFamily cond_on_sum_family(const Dist& py, const Dist& pz) {
  require_same_group(py, pz);
  const Dist total = convolve(py, pz);
  const MassTable lookup(pz);
  FiberFamily f;
  f.base = py;
  f.fibers.reserve(total.support_size());
  for (const auto& a : total.atoms()) {
    if (a.mass < kFiberWeightFloor) continue;
    f.fibers.push_back(make_fiber(py, lookup, a.at));
  }
  renormalize_weights(f);
  return f;
}

FiberFamily fiber_family(const Dist& p, int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "fiber family needs n >= 2");
  FiberFamily f = cond_on_sum_family(p, iterate_sum(p, n - 1));
  f.n = n;
  return f;
}

FiberFamily fibers_under(const Homomorphism& pi, const Dist& p) {
  if (!(pi.source() == p.group())) throw Error(ErrorKind::GroupMismatch, "distribution not on the source group");
  std::map<Index, std::vector<Atom>> classes;
  for (const auto& a : p.atoms()) classes[pi.apply(a.at)].push_back(a);
  FiberFamily f;
  f.base = p;
  for (auto& [key, atoms] : classes) {
    Sum w;
    for (const auto& a : atoms) w.add(a.mass);
    f.fibers.push_back(Fiber{key, w.value(), Dist(p.group(), std::move(atoms))});
  }
  renormalize_weights(f);
  return f;
}

double conditional_entropy(const FiberFamily& f) {
  Sum s;
  for (const auto& x : f.fibers) s.add(x.weight * entropy(x.law));
  return s.value();
}

Dist mixture(const FiberFamily& f) {
  std::vector<Atom> atoms;
  for (const auto& x : f.fibers)
    for (const auto& a : x.law.atoms()) atoms.push_back({a.at, x.weight * a.mass});
  return Dist(f.base.group(), std::move(atoms));
}

Dist push_forward(const Homomorphism& pi, const Dist& p) {
  if (!(pi.source() == p.group())) throw Error(ErrorKind::GroupMismatch, "distribution not on the source group");
  std::vector<Atom> atoms;
  atoms.reserve(p.support_size());
  for (const auto& a : p.atoms()) atoms.push_back({pi.apply(a.at), a.mass});
  return Dist(pi.target(), std::move(atoms));
}

}  // namespace acw
