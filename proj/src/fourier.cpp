#include "acw/fourier.hpp"

#include <cmath>

#include "acw/error.hpp"
#include "acw/limits.hpp"

namespace acw {

namespace {
// Threshold comparisons lean towards inclusion by this much to absorb FFT rounding.
constexpr double kSpecSlack = 1e-12;
}  // namespace

SpectrumTable dft(const Dist& p) {
  SpectrumTable t{p.group(), Spectrum(p.group().order())};
  if (p.group().order() > limits().dft_order)
    throw Error(ErrorKind::CapExceeded, "full spectrum needs |G| <= " + std::to_string(limits().dft_order));
  for (const auto& a : p.atoms()) t.values[a.at] = a.mass;
  dft_forward(p.group(), t.values);
  return t;
}

std::vector<std::complex<double>> dft_at(const Dist& p, std::span<const Index> chars) {
  std::vector<std::complex<double>> out;
  out.reserve(chars.size());
  for (auto chi : chars) {
    std::complex<double> acc = 0;
    for (const auto& a : p.atoms()) acc += a.mass * std::conj(char_eval(p.group(), chi, a.at));
    out.push_back(acc);
  }
  return out;
}

std::vector<std::complex<double>> inverse_dft(const GroupSpec& g, Spectrum values) {
  dft_backward(g, values);
  const double scale = 1.0 / static_cast<double>(g.order());
  for (auto& v : values) v *= scale;
  return values;
}

std::vector<Index> lspec(const SpectrumTable& t, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorKind::InvalidArgument, "LSpec needs 0 < eps < 1");
  const double thr = 1.0 - eps * eps / 2.0;
  std::vector<Index> out;
  for (Index chi = 0; chi < t.values.size(); ++chi)
    if (std::norm(t.values[chi]) >= thr - kSpecSlack) out.push_back(chi);
  return out;
}

std::vector<Index> spec(const SpectrumTable& t, double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw Error(ErrorKind::InvalidArgument, "Spec needs 0 < eps <= 1");
  std::vector<Index> out;
  for (Index chi = 0; chi < t.values.size(); ++chi)
    if (std::abs(t.values[chi]) >= eps - kSpecSlack) out.push_back(chi);
  return out;
}

std::vector<Index> lspec(const Dist& p, double eps) { return lspec(dft(p), eps); }
std::vector<Index> spec(const Dist& p, double eps) { return spec(dft(p), eps); }

std::complex<double> ipow(std::complex<double> z, std::uint64_t n) {
  std::complex<double> r = 1.0;
  while (n > 0) {
    if (n & 1) r *= z;
    n >>= 1;
    if (n > 0) z *= z;
  }
  return r;
}

Dist power_sum_with(const Dist& p, std::uint64_t n, const Dist& z) {
  require_same_group(p, z);
  auto tp = dft(p);
  const auto tz = dft(z);
  for (std::size_t i = 0; i < tp.values.size(); ++i) tp.values[i] = ipow(tp.values[i], n) * tz.values[i];
  const auto back = inverse_dft(p.group(), std::move(tp.values));
  std::vector<double> pmf(back.size());
  for (std::size_t i = 0; i < back.size(); ++i) pmf[i] = std::max(0.0, back[i].real());
  return Dist::from_dense(p.group(), pmf);
}

}  // namespace acw
