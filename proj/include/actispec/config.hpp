// actispec — frequency-band activity classification for tri-axial accelerometer streams.
// SPDX-License-Identifier: MIT
#ifndef ACTISPEC_CONFIG_HPP
#define ACTISPEC_CONFIG_HPP

#include <cstdint>
#include <istream>
#include <map>
#include <sstream>
#include <string>

#include "actispec/calibration.hpp"
#include "actispec/classifier.hpp"
#include "actispec/error.hpp"
#include "actispec/ingest.hpp"
#include "actispec/types.hpp"

namespace actispec {

// Every knob of the pipeline in one place. Defaults: 50 Hz sampling, 64-sample
// blocks padded to a 256-point transform, 100-sample calibration window,
// 12-bit ADC, rest ≤ 0.5 Hz / walk 1.5–2.5 Hz / run 2.5–4 Hz.
struct run_config {
  double sample_rate_hz = 50.0;
  std::size_t block_size = 64;
  std::size_t n_fft = 256;
  std::size_t cal_window = 100;
  std::int64_t adc_full_scale = 4095;
  double accel_range_g = 6.0;
  double gain_x = default_gain_counts_per_g;
  double gain_y = default_gain_counts_per_g;
  double gain_z = default_gain_counts_per_g;
  band_table bands;
  double min_prominence = 0.23;
  signal_mode mode = signal_mode::ba;

  void validate() const {
    classify_options o = classify_opts();
    o.validate(sample_rate_hz);  // covers rate, block, n_fft, bands, prominence
    if (cal_window < 1) raise(errc::parameter, "cal_window must be >= 1");
    if (adc_full_scale < 1) raise(errc::parameter, "adc_full_scale must be >= 1");
    if (!(accel_range_g > 0.0)) raise(errc::parameter, "accel_range_g must be > 0");
    for (double g : {gain_x, gain_y, gain_z})
      if (!(g > 0.0)) raise(errc::parameter, "gains must be > 0");
  }

  classify_options classify_opts() const {
    classify_options o;
    o.bands = bands;
    o.block_size = block_size;
    o.n_fft = n_fft;
    o.min_prominence = min_prominence;
    o.mode = mode;
    o.accel_range_g = accel_range_g;
    return o;
  }

  ingest_config ingest() const { return {adc_full_scale, sample_rate_hz}; }

  double block_duration_s() const {
    return static_cast<double>(block_size) / sample_rate_hz;
  }
};

inline signal_mode parse_mode(const std::string& v, std::size_t line_no = 0) {
  if (v == "ba") return signal_mode::ba;
  if (v == "x") return signal_mode::axis_x;
  if (v == "y") return signal_mode::axis_y;
  if (v == "z") return signal_mode::axis_z;
  raise(errc::parse, "mode must be one of ba, x, y, z (got '" + v + "')", line_no);
}

// The exact inverse of parse_config: every value prints with enough digits to
// reparse to the same bits.
inline std::string print_config(const run_config& c) {
  std::ostringstream os;
  os.precision(17);
  os << "sample_rate_hz = " << c.sample_rate_hz << "\n"
     << "block_size = " << c.block_size << "\n"
     << "n_fft = " << c.n_fft << "\n"
     << "cal_window = " << c.cal_window << "\n"
     << "adc_full_scale = " << c.adc_full_scale << "\n"
     << "accel_range_g = " << c.accel_range_g << "\n"
     << "gain_x = " << c.gain_x << "\n"
     << "gain_y = " << c.gain_y << "\n"
     << "gain_z = " << c.gain_z << "\n"
     << "rest_max_hz = " << c.bands.rest_max_hz << "\n"
     << "walk_lo_hz = " << c.bands.walk_lo_hz << "\n"
     << "walk_hi_hz = " << c.bands.walk_hi_hz << "\n"
     << "run_lo_hz = " << c.bands.run_lo_hz << "\n"
     << "run_hi_hz = " << c.bands.run_hi_hz << "\n"
     << "min_prominence = " << c.min_prominence << "\n"
     << "mode = " << to_string(c.mode) << "\n";
  return os.str();
}

inline run_config parse_config(std::istream& in, run_config base = {}) {
  run_config c = base;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::skippable(line)) continue;
    line = detail::strip_cr(line);
    const auto eq = line.find('=');
    if (eq == std::string::npos) raise(errc::parse, "expected key = value", line_no);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto as_double = [&](double& dst) {
      try {
        std::size_t pos = 0;
        dst = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        raise(errc::parse, "bad numeric value '" + value + "' for '" + key + "'", line_no);
      }
    };
    auto as_size = [&](std::size_t& dst) {
      try {
        dst = std::stoull(value);
      } catch (const std::exception&) {
        raise(errc::parse, "bad integer value '" + value + "' for '" + key + "'", line_no);
      }
    };
    if (key == "sample_rate_hz") as_double(c.sample_rate_hz);
    else if (key == "block_size") as_size(c.block_size);
    else if (key == "n_fft") as_size(c.n_fft);
    else if (key == "cal_window") as_size(c.cal_window);
    else if (key == "adc_full_scale") {
      std::size_t v = 0;
      as_size(v);
      c.adc_full_scale = static_cast<std::int64_t>(v);
    }
    else if (key == "accel_range_g") as_double(c.accel_range_g);
    else if (key == "gain_x") as_double(c.gain_x);
    else if (key == "gain_y") as_double(c.gain_y);
    else if (key == "gain_z") as_double(c.gain_z);
    else if (key == "rest_max_hz") as_double(c.bands.rest_max_hz);
    else if (key == "walk_lo_hz") as_double(c.bands.walk_lo_hz);
    else if (key == "walk_hi_hz") as_double(c.bands.walk_hi_hz);
    else if (key == "run_lo_hz") as_double(c.bands.run_lo_hz);
    else if (key == "run_hi_hz") as_double(c.bands.run_hi_hz);
    else if (key == "min_prominence") as_double(c.min_prominence);
    else if (key == "mode") c.mode = parse_mode(value, line_no);
    else raise(errc::parse, "unknown config key '" + key + "'", line_no);
  }
  return c;
}

inline run_config parse_config(const std::string& text, run_config base = {}) {
  std::istringstream in(text);
  return parse_config(in, base);
}

}  // namespace actispec

#endif  // ACTISPEC_CONFIG_HPP
