// fft.hpp -- FFTW plan cache and real-to-complex transform helpers.
//
// All plans use FFTW_ESTIMATE so plan choice (and hence floating-point
// summation order) is reproducible run to run; reruns with the same seed
// must produce bit-identical fields.
#pragma once

#include <complex>
#include <vector>

#include "common.hpp"

namespace polaron {

// Logical shape n = (n0, n1, n2), storage x(=axis 0)-fastest:
// index = i0 + n0*(i1 + n1*i2). The r2c half axis is axis 0.
struct FftShape {
  int n0 = 0, n1 = 0, n2 = 0;
  std::int64_t size() const { return std::int64_t(n0) * n1 * n2; }
  std::int64_t csize() const { return std::int64_t(n0 / 2 + 1) * n1 * n2; }
  bool operator==(const FftShape&) const = default;
};

// Forward: real n -> complex (n0/2+1, n1, n2), unnormalized.
void fft_r2c(const FftShape& s, const double* in, std::complex<double>* out);
// Backward: complex -> real, unnormalized (caller divides by s.size()).
void fft_c2r(const FftShape& s, const std::complex<double>* in, double* out);

// Angular frequency of DFT index m on an axis with n points, spacing h.
inline double fft_freq(int m, int n, double h) {
  const int mm = (m <= n / 2) ? m : m - n;
  return 2.0 * M_PI * mm / (n * h);
}

}  // namespace polaron
