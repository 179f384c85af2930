// actispec — frequency-band activity classification for tri-axial accelerometer streams.
// SPDX-License-Identifier: MIT
#ifndef ACTISPEC_RNG_HPP
#define ACTISPEC_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace actispec {

// Deterministic standard-normal sampler: Box–Muller over raw std::mt19937_64
// output. std::normal_distribution is implementation-defined (libstdc++ and
// libc++ draw different sequences), which would break the promise that a seed
// reproduces a dataset byte for byte on every platform; this transform is
// fully specified.
class normal_sampler {
 public:
  explicit normal_sampler(std::uint64_t seed) : engine_(seed) {}

  double operator()() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(ang);
    have_spare_ = true;
    return r * std::cos(ang);
  }

 private:
  // Uniform draw in (0, 1): 53 high bits of one 64-bit word; an exact zero
  // (probability 2^-53) is bumped to 2^-53 so the log stays finite.
  double next_unit() {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return u > 0.0 ? u : 0x1.0p-53;
  }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace actispec

#endif  // ACTISPEC_RNG_HPP
