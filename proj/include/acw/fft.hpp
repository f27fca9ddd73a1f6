#pragma once

#include <complex>
#include <vector>

#include "acw/group.hpp"

namespace acw {

using Spectrum = std::vector<std::complex<double>>;

/// In-place transform of a dense table indexed by Index.
/// Forward: F(chi) = sum_x f(x) conj(gamma_chi(x)). Backward: f(x) = sum_chi F(chi) gamma_chi(x),
/// unnormalized (divide by |G| to invert).
void dft_forward(const GroupSpec& g, Spectrum& data);
void dft_backward(const GroupSpec& g, Spectrum& data);

/// O(|G| * |supp|) evaluation, used as a cross-check.
Spectrum dft_naive(const GroupSpec& g, const std::vector<double>& f);

}  // namespace acw
