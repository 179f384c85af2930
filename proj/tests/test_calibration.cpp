// actispec — frequency-band activity classification for tri-axial accelerometer streams.
// SPDX-License-Identifier: MIT
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>
#include <vector>

#include "actispec/calibration.hpp"
#include "actispec/rng.hpp"
#include "test_util.hpp"

using namespace actispec;
using test_util::raises;

namespace {

std::vector<raw_sample> constant_samples(std::size_t n, std::int64_t x, std::int64_t y,
                                         std::int64_t z) {
  std::vector<raw_sample> v;
  for (std::size_t i = 0; i < n; ++i)
    v.push_back({static_cast<std::int64_t>(i), x, y, z});
  return v;
}

}  // namespace

TEST_CASE("estimate_params on constant data recovers the documented offsets") {
  const auto samples = constant_samples(100, 512, 512, 716);
  const calibration_params p = estimate_params(samples, 100, 204.0, 204.0, 204.0);
  CHECK(p.offset_x == 512.0);
  CHECK(p.offset_y == 512.0);
  CHECK(p.offset_z == 512.0);  // 716 − 204·1
  CHECK(p.gain_z == 204.0);
}

TEST_CASE("estimate_params needs the full window") {
  const auto samples = constant_samples(50, 512, 512, 716);
  CHECK(raises(errc::insufficient_data, [&] { estimate_params(samples, 100); }));
  CHECK(raises(errc::parameter, [&] { estimate_params(samples, 0); }));
}

TEST_CASE("estimate_params recovers offsets from noisy stationary data") {
  // Counts drawn around (512, 512, 512 + gain) with sigma = 2 counts: the
  // window mean has sigma 0.2 counts, so |offset − 512| <= 1 is a 5-sigma
  // bound; with a fixed seed every one of the 200 trials must land inside.
  const double gain = 204.0;
  normal_sampler noise(424242);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<raw_sample> samples;
    for (int i = 0; i < 100; ++i) {
      const auto jitter = [&] { return std::llround(2.0 * noise()); };
      samples.push_back({i, 512 + jitter(), 512 + jitter(),
                         512 + static_cast<std::int64_t>(gain) + jitter()});
    }
    const calibration_params p = estimate_params(samples, 100, gain, gain, gain);
    CHECK(std::abs(p.offset_x - 512.0) <= 1.0);
    CHECK(std::abs(p.offset_y - 512.0) <= 1.0);
    CHECK(std::abs(p.offset_z - 512.0) <= 1.0);
  }
}

TEST_CASE("apply maps the calibration pose to the expected g values") {
  calibration_params p;
  p.offset_x = p.offset_y = p.offset_z = 512.0;
  p.gain_x = p.gain_y = p.gain_z = 204.0;

  const raw_sample upright{0, 512, 512, 512 + 204};
  const calibrated_sample cu = apply(upright, p);
  CHECK(cu.ax == 0.0);
  CHECK(cu.ay == 0.0);
  CHECK(cu.az == 1.0);

  const raw_sample inverted{1, 512, 512, 512 - 204};
  CHECK(apply(inverted, p).az == -1.0);
}

TEST_CASE("apply is affine: offset + t*gain maps exactly to t") {
  calibration_params p;
  p.offset_x = p.offset_y = p.offset_z = 2048.0;
  p.gain_x = p.gain_y = p.gain_z = 256.0;  // power of two so products are exact
  for (int t = -5; t <= 5; ++t) {
    const raw_sample s{0, 2048 + t * 256, 2048 + t * 256, 2048 + t * 256};
    const calibrated_sample c = apply(s, p);
    CHECK(c.ax == static_cast<double>(t));
    CHECK(c.ay == static_cast<double>(t));
    CHECK(c.az == static_cast<double>(t));
  }
}

TEST_CASE("apply clamps out-of-range values and flags them") {
  calibration_params p;
  p.offset_x = p.offset_y = p.offset_z = 0.0;
  p.gain_x = p.gain_y = p.gain_z = 100.0;
  std::size_t clamped = 0;
  const calibrated_sample c = apply({0, 4095, 300, 200}, p, 6.0, &clamped);
  CHECK(c.ax == 6.0);  // 40.95 g clamped
  CHECK(c.ay == 3.0);
  CHECK(c.az == 2.0);
  CHECK(c.clamped);
  CHECK(clamped == 1);
}

TEST_CASE("calibrating the calibration window itself is consistent") {
  const auto samples = constant_samples(100, 700, 600, 900);
  const calibration_params p = estimate_params(samples, 100, 250.0, 250.0, 250.0);
  double mx = 0.0, my = 0.0, mz = 0.0;
  for (const auto& s : samples) {
    const calibrated_sample c = apply(s, p);
    mx += c.ax;
    my += c.ay;
    mz += c.az;
  }
  CHECK(std::abs(mx / 100.0 - 0.0) < 1e-9);
  CHECK(std::abs(my / 100.0 - 0.0) < 1e-9);
  CHECK(std::abs(mz / 100.0 - 1.0) < 1e-9);
}

TEST_CASE("calibration params round-trip through the key=value format") {
  calibration_params p;
  p.offset_x = 2048.125;
  p.offset_y = 2047.875;
  p.offset_z = 1800.0625;
  p.gain_x = 248.24242424242425;
  p.gain_y = 250.5;
  p.gain_z = 249.0;
  std::istringstream in(format_params(p));
  const calibration_params q = parse_params(in);
  CHECK(q.offset_x == p.offset_x);
  CHECK(q.offset_y == p.offset_y);
  CHECK(q.offset_z == p.offset_z);
  CHECK(q.gain_x == p.gain_x);
  CHECK(q.gain_y == p.gain_y);
  CHECK(q.gain_z == p.gain_z);
}

TEST_CASE("calibration params parser rejects bad input") {
  CHECK(raises(errc::parse, [] {
    std::istringstream in("offset_x 2048");
    parse_params(in);
  }, 1));
  CHECK(raises(errc::parse, [] {
    std::istringstream in("offset_x = 1\nwobble = 2\n");
    parse_params(in);
  }, 2));
  CHECK(raises(errc::parse, [] {
    std::istringstream in("gain_x = banana");
    parse_params(in);
  }, 1));
  CHECK(raises(errc::parameter, [] {
    std::istringstream in("gain_x = -5");
    parse_params(in);
  }));
}

TEST_CASE("default gain matches the documented sensor arithmetic") {
  // 200 mV/g through a 3.3 V / 4096-count converter.
  CHECK(default_gain_counts_per_g == Catch::Approx(248.2424242424).epsilon(1e-12));
}
