#pragma once

#include <span>
#include <vector>

#include "acw/dist.hpp"
#include "acw/fft.hpp"

namespace acw {

/// p^(chi) = sum_x p(x) conj(gamma_chi(x)) for every character.
struct SpectrumTable {
  GroupSpec group;
  Spectrum values;
};

SpectrumTable dft(const Dist& p);
/// Sparse evaluation at the listed characters; no size cap.
std::vector<std::complex<double>> dft_at(const Dist& p, std::span<const Index> chars);
/// (1/|G|) sum_chi F(chi) gamma_chi(x) for every x.
std::vector<std::complex<double>> inverse_dft(const GroupSpec& g, Spectrum values);

/// Characters with |p^|^2 >= 1 - eps^2/2.
std::vector<Index> lspec(const Dist& p, double eps);
std::vector<Index> lspec(const SpectrumTable& t, double eps);
/// chars with |p^| >= eps.
std::vector<Index> spec(const Dist& p, double eps);
std::vector<Index> spec(const SpectrumTable& t, double eps);

/// z^n by repeated squaring.
std::complex<double> ipow(std::complex<double> z, std::uint64_t n);

/// Law of X_1 + ... + X_n + Z via one spectrum power; n may be huge.
Dist power_sum_with(const Dist& p, std::uint64_t n, const Dist& z);

}  // namespace acw
