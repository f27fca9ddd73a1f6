#include "acw/fft.hpp"

#include <fftw3.h>

#include <mutex>

#include "acw/error.hpp"
#include "acw/limits.hpp"

namespace acw {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

void transform(const GroupSpec& g, Spectrum& data, int sign) {
  if (data.size() != g.order()) throw Error(ErrorKind::DimensionMismatch, "table size differs from group order");
  if (g.order() > limits().dft_order)
    throw Error(ErrorKind::CapExceeded, "DFT needs |G| <= " + std::to_string(limits().dft_order) + ", got " +
                                            std::to_string(g.order()));
  // Row-major layout with the last axis fastest is exactly the Index encoding.
  std::vector<int> dims;
  for (auto n : g.moduli())
    if (n > 1) dims.push_back(static_cast<int>(n));
  if (dims.empty()) return;
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), buf, buf, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

}  // namespace

void dft_forward(const GroupSpec& g, Spectrum& data) { transform(g, data, FFTW_FORWARD); }
void dft_backward(const GroupSpec& g, Spectrum& data) { transform(g, data, FFTW_BACKWARD); }

Spectrum dft_naive(const GroupSpec& g, const std::vector<double>& f) {
  Spectrum out(g.order());
  for (Index chi = 0; chi < g.order(); ++chi) {
    std::complex<double> acc = 0;
    for (Index x = 0; x < g.order(); ++x)
      if (f[x] != 0.0) acc += f[x] * std::conj(char_eval(g, chi, x));
    out[chi] = acc;
  }
  return out;
}

}  // namespace acw
