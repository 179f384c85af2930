// actispec — frequency-band activity classification for tri-axial accelerometer streams.
// SPDX-License-Identifier: MIT
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "actispec/calibration.hpp"
#include "actispec/gen.hpp"
#include "actispec/preprocess.hpp"
#include "actispec/spectrum.hpp"
#include "test_util.hpp"

using namespace actispec;
using test_util::raises;

namespace {

body_block tone_block(double freq_hz, double amplitude, double offset,
                      std::size_t n = 64, double fs = 50.0) {
  body_block b;
  b.sample_rate_hz = fs;
  for (std::size_t i = 0; i < n; ++i)
    b.values.push_back(offset +
                       amplitude * std::sin(2.0 * std::numbers::pi * freq_hz * i / fs));
  return b;
}

}  // namespace

TEST_CASE("an on-bin tone produces a unit peak at its own bin") {
  // 3.125 Hz is exactly bin 16 of a 256-point transform at 50 Hz, so the
  // 64-sample window holds exactly 4 cycles and there is no leakage ambiguity.
  const body_block b = tone_block(3.125, 0.5, 0.2);
  const normalized_spectrum sp = normalized_spectrum_of(b);
  REQUIRE(sp.magnitudes.size() == 129);
  CHECK(sp.bin_hz == Catch::Approx(50.0 / 256.0));
  CHECK_FALSE(sp.energy_floor_hit);

  const auto peak = find_peak(sp);
  REQUIRE(peak.has_value());
  CHECK(peak->bin == 16);
  CHECK(peak->freq_hz == Catch::Approx(3.125));
  CHECK(peak->magnitude == 1.0);
}

TEST_CASE("the block mean does not masquerade as a low-frequency peak") {
  // A large offset with a small tone: without mean removal the rectangular
  // window would smear the offset into the lowest bins and win.
  const body_block b = tone_block(2.0, 0.05, 5.0);
  const auto peak = find_peak(normalized_spectrum_of(b));
  REQUIRE(peak.has_value());
  // 2.0 Hz falls between bins 10 (1.953) and 11 (2.148); bin 10 is closer.
  CHECK((peak->bin == 10 || peak->bin == 11));
  CHECK(peak->freq_hz > 1.5);
}

TEST_CASE("an all-zero block hits the energy floor") {
  body_block b;
  b.values.assign(64, 0.0);
  const normalized_spectrum sp = normalized_spectrum_of(b);
  CHECK(sp.energy_floor_hit);
  for (double m : sp.magnitudes) CHECK(m == 0.0);
  CHECK_FALSE(find_peak(sp).has_value());
  CHECK(sp.prominence == 0.0);
}

TEST_CASE("a constant block also hits the floor after mean removal") {
  body_block b;
  b.values.assign(64, 0.73);
  const normalized_spectrum sp = normalized_spectrum_of(b);
  CHECK(sp.energy_floor_hit);
  CHECK_FALSE(find_peak(sp).has_value());
}

TEST_CASE("normalization is scale invariant") {
  const body_block base = tone_block(2.5, 0.4, 0.3);
  const normalized_spectrum ref = normalized_spectrum_of(base);
  for (double c : {0.001, 0.5, 3.0, 1000.0}) {
    body_block scaled = base;
    for (double& v : scaled.values) v *= c;
    const normalized_spectrum sp = normalized_spectrum_of(scaled);
    REQUIRE(sp.magnitudes.size() == ref.magnitudes.size());
    for (std::size_t k = 0; k < sp.magnitudes.size(); ++k) {
      INFO("scale " << c << ", bin " << k);
      REQUIRE(sp.magnitudes[k] == Catch::Approx(ref.magnitudes[k]).margin(1e-9));
    }
    // Prominence is a ratio of magnitudes, so it is scale invariant too.
    CHECK(sp.prominence == Catch::Approx(ref.prominence).margin(1e-9));
  }
}

TEST_CASE("find_peak breaks exact ties toward the higher bin") {
  normalized_spectrum sp;
  sp.n_fft = 256;
  sp.bin_hz = 50.0 / 256.0;
  sp.magnitudes.assign(129, 0.0);
  sp.magnitudes[10] = 1.0;
  sp.magnitudes[18] = 1.0;
  sp.peak_abs = 1.0;
  sp.prominence = 1.0;
  const auto peak = find_peak(sp);
  REQUIRE(peak.has_value());
  CHECK(peak->bin == 18);
}

TEST_CASE("find_peak never selects the DC bin") {
  normalized_spectrum sp;
  sp.n_fft = 256;
  sp.bin_hz = 50.0 / 256.0;
  sp.magnitudes.assign(129, 0.0);
  sp.magnitudes[0] = 1.0;
  sp.magnitudes[25] = 0.4;
  const auto peak = find_peak(sp);
  REQUIRE(peak.has_value());
  CHECK(peak->bin == 25);
}

TEST_CASE("spectrum parameters are validated") {
  body_block b;
  b.values.assign(60, 0.1);  // not a power of two
  CHECK(raises(errc::parameter, [&] { normalized_spectrum_of(b); }));
  b.values.assign(64, 0.1);
  CHECK(raises(errc::parameter, [&] { normalized_spectrum_of(b, 32); }));   // n_fft < block
  CHECK(raises(errc::parameter, [&] { normalized_spectrum_of(b, 200); }));  // not a power of two
  b.values.assign(1, 0.1);
  CHECK(raises(errc::parameter, [&] { normalized_spectrum_of(b); }));
}

TEST_CASE("a generated walking stretch peaks within one bin of its target") {
  // End-to-end: synthesize a walking segment, run the real preprocessing, and
  // check the spectral peak of an interior block against the script target.
  activity_script script;
  script.name = "walk-spectrum";
  script.seed = 500;
  script.noise_sigma_g = 0.0;
  script.segments.push_back({activity::walk, 20.48, 10.0 * (50.0 / 256.0), 1.0});

  calibration_params params;
  params.offset_x = params.offset_y = params.offset_z = 2048.0;
  params.gain_x = params.gain_y = params.gain_z = default_gain_counts_per_g;

  const gen_result r = synthesize(script, params, 50.0);
  std::vector<calibrated_sample> cal;
  for (const auto& s : r.data.samples) cal.push_back(apply(s, params));
  const body_signal sig = body_accel(cal, 50.0);

  // Use an interior block (index 8 of 16): warm-up and edge effects are over.
  body_block blk;
  blk.sample_rate_hz = 50.0;
  blk.block_index = 8;
  blk.values.assign(sig.ba.begin() + 8 * 64, sig.ba.begin() + 9 * 64);
  const auto peak = find_peak(normalized_spectrum_of(blk));
  REQUIRE(peak.has_value());
  CHECK(std::abs(static_cast<double>(peak->bin) - 10.0) <= 1.0);
}
