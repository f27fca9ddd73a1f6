#pragma once

#include <cstdint>

namespace acw {

/// Desk-scale caps. Set once at program start (the CLI's --cap-order), read
/// everywhere else.
struct Limits {
  std::uint64_t enumeration = std::uint64_t{1} << 20;   // membership scans, set closures
  std::uint64_t dft_order = std::uint64_t{1} << 16;     // full Fourier tables
  std::uint64_t direct_pairs = std::uint64_t{1} << 22;  // double-loop convolution
};

const Limits& limits();
void set_limits(const Limits& l);

// Numerical conventions shared by all modules.
inline constexpr double kMassFloor = 1e-15;
inline constexpr double kFiberWeightFloor = 1e-13;
inline constexpr double kSlackTol = 1e-9;

}  // namespace acw
