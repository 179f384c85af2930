// actispec — frequency-band activity classification for tri-axial accelerometer streams.
// SPDX-License-Identifier: MIT
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "actispec/preprocess.hpp"
#include "test_util.hpp"

using namespace actispec;
using test_util::raises;

TEST_CASE("moving average of a constant is the constant") {
  const std::vector<double> in{3.0, 3.0, 3.0};
  const std::vector<double> out = moving_average(in, 3);
  CHECK(out == std::vector<double>{3.0, 3.0, 3.0});
}

TEST_CASE("moving average warms up over the first order-1 samples") {
  const std::vector<double> in{3.0, 0.0, 0.0, 0.0};
  const std::vector<double> out = moving_average(in, 3);
  REQUIRE(out.size() == 4);
  CHECK(out[0] == 3.0);        // mean of {3}
  CHECK(out[1] == 1.5);        // mean of {3, 0}
  CHECK(out[2] == 1.0);        // mean of {3, 0, 0}
  CHECK(out[3] == 0.0);        // mean of {0, 0, 0}
}

TEST_CASE("moving average matches a brute-force oracle on random data") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  std::vector<double> in(200);
  for (double& v : in) v = uni(rng);

  for (std::size_t order : {1u, 2u, 3u, 5u, 8u, 13u}) {
    const std::vector<double> out = moving_average(in, order);
    REQUIRE(out.size() == in.size());
    for (std::size_t n = 0; n < in.size(); ++n) {
      const std::size_t lo = n + 1 >= order ? n + 1 - order : 0;
      double sum = 0.0;
      for (std::size_t i = lo; i <= n; ++i) sum += in[i];
      const double expect = sum / static_cast<double>(n - lo + 1);
      INFO("order " << order << ", sample " << n);
      REQUIRE(out[n] == Catch::Approx(expect).margin(1e-12));
    }
  }
}

TEST_CASE("moving average rejects order zero") {
  CHECK(raises(errc::parameter, [] {
    moving_average(std::vector<double>{1.0, 2.0}, 0);
  }));
}

TEST_CASE("fuse_rms matches the 3-4-5 triangle exactly") {
  CHECK(fuse_rms(3.0, 4.0, 0.0) == 5.0);
  CHECK(fuse_rms(0.0, 3.0, 4.0) == 5.0);
  CHECK(fuse_rms(-3.0, 0.0, -4.0) == 5.0);
}

TEST_CASE("fuse_rms dominates each component and is never negative") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> uni(-10.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = uni(rng), y = uni(rng), z = uni(rng);
    const double ba = fuse_rms(x, y, z);
    REQUIRE(ba >= 0.0);
    REQUIRE(ba >= std::abs(x));
    REQUIRE(ba >= std::abs(y));
    REQUIRE(ba >= std::abs(z));
  }
  CHECK(fuse_rms(0.0, 0.0, 0.0) == 0.0);
}

TEST_CASE("body_accel of all-zero input is all zero") {
  const std::vector<calibrated_sample> in(300, calibrated_sample{0.0, 0.0, 0.0, 0, false});
  const body_signal sig = body_accel(in, 50.0);
  REQUIRE(sig.ba.size() == in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    CHECK(sig.xb[i] == 0.0);
    CHECK(sig.yb[i] == 0.0);
    CHECK(sig.zb[i] == 0.0);
    CHECK(sig.ba[i] == 0.0);
  }
}

TEST_CASE("body_accel rejects a static gravity vector from the first sample") {
  // A device lying still: constant (0, 0, 1) g. Thanks to the warm start the
  // high-pass output is exactly zero everywhere, not just after settling.
  const std::vector<calibrated_sample> in(500, calibrated_sample{0.0, 0.0, 1.0, 0, false});
  const body_signal sig = body_accel(in, 50.0);
  for (std::size_t i = 0; i < in.size(); ++i) {
    CHECK(sig.zb[i] == 0.0);
    CHECK(sig.ba[i] == 0.0);
  }
}

TEST_CASE("body_accel keeps an in-band oscillation and strips its offset") {
  // 1 g gravity on z plus a 2 Hz, 0.5 g oscillation on x. After the initial
  // transient the body series should carry the oscillation with close to unit
  // gain on x and nothing on z.
  const double fs = 50.0;
  std::vector<calibrated_sample> in;
  for (int i = 0; i < 50 * 40; ++i) {
    const double t = i / fs;
    in.push_back({0.5 * std::sin(2.0 * std::numbers::pi * 2.0 * t), 0.0, 1.0, i, false});
  }
  const body_signal sig = body_accel(in, fs);
  double peak_x = 0.0, peak_z = 0.0, mean_x = 0.0;
  const std::size_t tail = in.size() - 50 * 10;
  for (std::size_t i = tail; i < in.size(); ++i) {
    peak_x = std::max(peak_x, std::abs(sig.xb[i]));
    peak_z = std::max(peak_z, std::abs(sig.zb[i]));
    mean_x += sig.xb[i];
  }
  mean_x /= static_cast<double>(in.size() - tail);
  CHECK(peak_x > 0.4);          // oscillation survives (MA3 + ripple lose a little)
  CHECK(peak_x < 0.55);
  CHECK(std::abs(mean_x) < 1e-3);  // no DC leaks through
  CHECK(peak_z < 1e-6);            // static gravity fully rejected
}

TEST_CASE("body_accel output lengths all match the input") {
  std::vector<calibrated_sample> in(173, calibrated_sample{0.1, -0.2, 1.0, 0, false});
  const body_signal sig = body_accel(in, 50.0);
  CHECK(sig.xb.size() == 173);
  CHECK(sig.yb.size() == 173);
  CHECK(sig.zb.size() == 173);
  CHECK(sig.ba.size() == 173);
  CHECK(sig.sample_rate_hz == 50.0);
}

TEST_CASE("body_accel rejects empty input") {
  CHECK(raises(errc::empty_input, [] {
    body_accel(std::vector<calibrated_sample>{}, 50.0);
  }));
}
