// actispec — frequency-band activity classification for tri-axial accelerometer streams.
// SPDX-License-Identifier: MIT
#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "actispec/config.hpp"
#include "test_util.hpp"

using namespace actispec;
using test_util::raises;

TEST_CASE("default configuration is the documented pipeline") {
  const run_config c;
  CHECK(c.sample_rate_hz == 50.0);
  CHECK(c.block_size == 64);
  CHECK(c.n_fft == 256);
  CHECK(c.cal_window == 100);
  CHECK(c.adc_full_scale == 4095);
  CHECK(c.accel_range_g == 6.0);
  CHECK(c.gain_x == Catch::Approx(248.2424242424).epsilon(1e-12));
  CHECK(c.bands.rest_max_hz == 0.5);
  CHECK(c.bands.walk_lo_hz == 1.5);
  CHECK(c.bands.walk_hi_hz == 2.5);
  CHECK(c.bands.run_lo_hz == 2.5);
  CHECK(c.bands.run_hi_hz == 4.0);
  CHECK(c.min_prominence == 0.23);
  CHECK(c.mode == signal_mode::ba);
  CHECK(c.block_duration_s() == 1.28);
  CHECK_NOTHROW(c.validate());
}

TEST_CASE("validation rejects inconsistent configurations") {
  run_config c;
  c.n_fft = 32;  // smaller than the block
  CHECK(raises(errc::parameter, [&] { c.validate(); }));

  c = {};
  c.block_size = 60;  // not a power of two
  CHECK(raises(errc::parameter, [&] { c.validate(); }));

  c = {};
  c.bands.run_hi_hz = 25.0;  // at Nyquist
  CHECK(raises(errc::parameter, [&] { c.validate(); }));

  c = {};
  c.bands.walk_hi_hz = 1.0;  // inverted walk band
  CHECK(raises(errc::parameter, [&] { c.validate(); }));

  c = {};
  c.cal_window = 0;
  CHECK(raises(errc::parameter, [&] { c.validate(); }));

  c = {};
  c.gain_y = 0.0;
  CHECK(raises(errc::parameter, [&] { c.validate(); }));

  c = {};
  c.min_prominence = -0.1;
  CHECK(raises(errc::parameter, [&] { c.validate(); }));

  c = {};
  c.sample_rate_hz = 0.0;
  CHECK(raises(errc::parameter, [&] { c.validate(); }));
}

TEST_CASE("configuration round-trips through print and parse exactly") {
  run_config c;
  c.sample_rate_hz = 100.0;
  c.block_size = 128;
  c.n_fft = 512;
  c.cal_window = 250;
  c.gain_x = 248.24242424242425;
  c.gain_y = 250.125;
  c.gain_z = 247.875;
  c.bands.rest_max_hz = 0.6;
  c.bands.walk_lo_hz = 1.4;
  c.bands.walk_hi_hz = 2.6;
  c.bands.run_lo_hz = 2.6;
  c.bands.run_hi_hz = 4.5;
  c.min_prominence = 0.3125;
  c.mode = signal_mode::axis_z;

  const run_config back = parse_config(print_config(c));
  CHECK(back.sample_rate_hz == c.sample_rate_hz);
  CHECK(back.block_size == c.block_size);
  CHECK(back.n_fft == c.n_fft);
  CHECK(back.cal_window == c.cal_window);
  CHECK(back.adc_full_scale == c.adc_full_scale);
  CHECK(back.accel_range_g == c.accel_range_g);
  CHECK(back.gain_x == c.gain_x);
  CHECK(back.gain_y == c.gain_y);
  CHECK(back.gain_z == c.gain_z);
  CHECK(back.bands.rest_max_hz == c.bands.rest_max_hz);
  CHECK(back.bands.walk_lo_hz == c.bands.walk_lo_hz);
  CHECK(back.bands.walk_hi_hz == c.bands.walk_hi_hz);
  CHECK(back.bands.run_lo_hz == c.bands.run_lo_hz);
  CHECK(back.bands.run_hi_hz == c.bands.run_hi_hz);
  CHECK(back.min_prominence == c.min_prominence);
  CHECK(back.mode == c.mode);
}

TEST_CASE("parse_config overlays keys onto a base configuration") {
  run_config base;
  base.block_size = 128;
  const run_config c = parse_config(std::string("n_fft = 512\nmode = x\n"), base);
  CHECK(c.block_size == 128);  // untouched base value survives
  CHECK(c.n_fft == 512);
  CHECK(c.mode == signal_mode::axis_x);
}

TEST_CASE("parse_config accepts comments and blank lines") {
  const run_config c = parse_config(
      std::string("# pipeline tweaks\n\nsample_rate_hz = 64\n  \nblock_size = 64\n"));
  CHECK(c.sample_rate_hz == 64.0);
  CHECK(c.block_size == 64);
}

TEST_CASE("parse_config reports bad lines with their numbers") {
  CHECK(raises(errc::parse, [] { parse_config(std::string("block_size\n")); }, 1));
  CHECK(raises(errc::parse, [] { parse_config(std::string("welp = 3\n")); }, 1));
  CHECK(raises(errc::parse, [] {
    parse_config(std::string("n_fft = 256\nsample_rate_hz = fast\n"));
  }, 2));
  CHECK(raises(errc::parse, [] { parse_config(std::string("mode = sideways\n")); }, 1));
}

TEST_CASE("derived option views agree with the config fields") {
  run_config c;
  c.min_prominence = 0.5;
  c.mode = signal_mode::axis_y;
  c.accel_range_g = 8.0;
  const classify_options o = c.classify_opts();
  CHECK(o.block_size == c.block_size);
  CHECK(o.n_fft == c.n_fft);
  CHECK(o.min_prominence == 0.5);
  CHECK(o.mode == signal_mode::axis_y);
  CHECK(o.accel_range_g == 8.0);

  const ingest_config ing = c.ingest();
  CHECK(ing.adc_full_scale == c.adc_full_scale);
  CHECK(ing.sample_rate_hz == c.sample_rate_hz);
}
