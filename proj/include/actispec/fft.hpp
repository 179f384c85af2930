// actispec — frequency-band activity classification for tri-axial accelerometer streams.
// SPDX-License-Identifier: MIT
#ifndef ACTISPEC_FFT_HPP
#define ACTISPEC_FFT_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "actispec/error.hpp"

namespace actispec {

inline bool is_power_of_two(std::size_t n) { return n >= 1 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 decimation-in-time FFT.
// Computes the unnormalized forward transform X[k] = sum_n x[n] e^{-j 2*pi*k*n/N}.
// The length must be a power of two and at least 2.
inline void fft_inplace(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  if (n < 2 || !is_power_of_two(n))
    raise(errc::parameter, "fft length must be a power of two >= 2, got " + std::to_string(n));

  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

inline std::vector<std::complex<double>> fft(std::vector<std::complex<double>> x) {
  fft_inplace(x);
  return x;
}

// Inverse transform via the conjugate construction:
// ifft(X) = conj(fft(conj(X))) / N.
inline std::vector<std::complex<double>> inverse_fft(std::vector<std::complex<double>> x) {
  for (auto& v : x) v = std::conj(v);
  fft_inplace(x);
  const double inv_n = 1.0 / static_cast<double>(x.size());
  for (auto& v : x) v = std::conj(v) * inv_n;
  return x;
}

// Quadratic-time reference transform. Kept in the library (not just the test
// tree) because the generator's self-checks and the CLI never use it; it
// exists solely as an independent oracle for the radix-2 path.
inline std::vector<std::complex<double>> naive_dft(const std::vector<std::complex<double>>& x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t m = 0; m < n; ++m) {
      const double ang = -2.0 * std::numbers::pi * static_cast<double>(k) *
                         static_cast<double>(m) / static_cast<double>(n);
      acc += x[m] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace actispec

#endif  // ACTISPEC_FFT_HPP
