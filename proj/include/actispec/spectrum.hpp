// actispec — frequency-band activity classification for tri-axial accelerometer streams.
// SPDX-License-Identifier: MIT
#ifndef ACTISPEC_SPECTRUM_HPP
#define ACTISPEC_SPECTRUM_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "actispec/error.hpp"
#include "actispec/fft.hpp"

namespace actispec {

// One classification window of consecutive body-acceleration samples.
struct body_block {
  std::vector<double> values;  // block_size samples, g
  std::size_t block_index = 0;
  double sample_rate_hz = 50.0;
};

// Magnitude spectrum of one block scaled so the largest bin is 1. The floor
// flag marks blocks with no measurable energy (all magnitudes left zero).
struct normalized_spectrum {
  std::vector<double> magnitudes;  // bins 0 .. n_fft/2 inclusive, each in [0, 1]
  double bin_hz = 0.0;             // sample_rate / n_fft
  std::size_t n_fft = 0;
  bool energy_floor_hit = false;

  // Unnormalized size of the winning non-DC line, and its size relative to
  // the block's total signal level N·|mean| (the prominence ratio classify
  // uses to tell a genuine periodic peak from noise residue). Infinite when
  // the block has zero mean but nonzero content.
  double peak_abs = 0.0;
  double prominence = 0.0;
};

// Below this unnormalized magnitude (in g) a block is treated as having no
// energy at all; normalization would otherwise divide by numerical dust.
inline constexpr double spectrum_energy_floor = 1e-12;

// Computes the normalized magnitude spectrum of a block: the block mean is
// removed, the residue is zero-padded to n_fft, transformed, and bins
// 0..n_fft/2 are kept and scaled to a peak of 1.
//
// The mean removal matters: the BA series is non-negative, and a 64-sample
// rectangular window inside a 256-point transform leaks a mean μ into bin 1
// with weight 0.90·64μ — larger than any sinusoidal line a non-negative
// signal can carry (≤ 32·2μ). Without demeaning every block would peak at
// 0.195 Hz regardless of activity.
inline normalized_spectrum normalized_spectrum_of(const body_block& block, std::size_t n_fft = 256) {
  const std::size_t n = block.values.size();
  if (n < 2 || !is_power_of_two(n))
    raise(errc::parameter, "block size must be a power of two >= 2, got " + std::to_string(n));
  if (n_fft < n || !is_power_of_two(n_fft))
    raise(errc::parameter,
          "n_fft must be a power of two >= block size, got " + std::to_string(n_fft));

  double mean = 0.0;
  for (double v : block.values) mean += v;
  mean /= static_cast<double>(n);

  std::vector<std::complex<double>> buf(n_fft, std::complex<double>(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) buf[i] = std::complex<double>(block.values[i] - mean, 0.0);
  fft_inplace(buf);

  normalized_spectrum sp;
  sp.n_fft = n_fft;
  sp.bin_hz = block.sample_rate_hz / static_cast<double>(n_fft);
  sp.magnitudes.resize(n_fft / 2 + 1);
  double max_mag = 0.0;
  double peak_abs = 0.0;
  for (std::size_t k = 0; k <= n_fft / 2; ++k) {
    const double m = std::abs(buf[k]);
    sp.magnitudes[k] = m;
    if (m > max_mag) max_mag = m;
    if (k >= 1 && m > peak_abs) peak_abs = m;
  }
  sp.peak_abs = peak_abs;

  if (max_mag < spectrum_energy_floor) {
    sp.energy_floor_hit = true;
    for (auto& m : sp.magnitudes) m = 0.0;
    sp.peak_abs = 0.0;
    sp.prominence = 0.0;
    return sp;
  }

  const double level = static_cast<double>(n) * std::abs(mean);
  sp.prominence = level > 0.0 ? peak_abs / level : std::numeric_limits<double>::infinity();
  for (auto& m : sp.magnitudes) m /= max_mag;
  return sp;
}

struct spectral_peak {
  std::size_t bin = 0;       // >= 1; DC is never a peak
  double freq_hz = 0.0;      // bin * bin_hz
  double magnitude = 0.0;    // normalized, 1.0 for a genuine peak
};

// Largest bin over 1..n_fft/2 with ties broken toward the higher bin
// (mirroring the run-over-walk-over-rest priority). Returns nothing for a
// floor-flagged spectrum.
inline std::optional<spectral_peak> find_peak(const normalized_spectrum& sp) {
  if (sp.energy_floor_hit) return std::nullopt;
  std::size_t best = 1;
  for (std::size_t k = 1; k < sp.magnitudes.size(); ++k)
    if (sp.magnitudes[k] >= sp.magnitudes[best]) best = k;
  spectral_peak p;
  p.bin = best;
  p.freq_hz = static_cast<double>(best) * sp.bin_hz;
  p.magnitude = sp.magnitudes[best];
  return p;
}

}  // namespace actispec

#endif  // ACTISPEC_SPECTRUM_HPP
