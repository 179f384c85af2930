// actispec — frequency-band activity classification for tri-axial accelerometer streams.
// SPDX-License-Identifier: MIT
#ifndef ACTISPEC_CALIBRATION_HPP
#define ACTISPEC_CALIBRATION_HPP

#include <cmath>
#include <cstddef>
#include <fstream>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "actispec/error.hpp"
#include "actispec/types.hpp"

namespace actispec {

// Default axis gain in ADC counts per g: a 200 mV/g sensor read by a 12-bit
// converter spanning 3.3 V, i.e. 0.2 / (3.3 / 4096) ≈ 248.24 counts/g.
inline constexpr double default_gain_counts_per_g = 0.2 / (3.3 / 4096.0);

// Linear per-axis map between ADC counts and acceleration in g:
// accel = (counts − offset) / gain.
struct calibration_params {
  double offset_x = 0.0;
  double offset_y = 0.0;
  double offset_z = 0.0;
  double gain_x = default_gain_counts_per_g;
  double gain_y = default_gain_counts_per_g;
  double gain_z = default_gain_counts_per_g;

  void validate() const {
    for (double g : {gain_x, gain_y, gain_z})
      if (!(g > 0.0) || !std::isfinite(g))
        raise(errc::parameter, "calibration gains must be strictly positive and finite");
  }
};

struct calibrated_sample {
  double ax = 0.0;  // g
  double ay = 0.0;  // g
  double az = 0.0;  // g
  std::int64_t index = 0;
  bool clamped = false;  // true when any axis was clamped to ±range_g
};

// Estimates per-axis offsets from the first `window` samples, which are
// assumed stationary with the device vertical upright: x = 0 g, y = 0 g,
// z = +1 g, so the z offset is the mean minus one gain. Gains pass through
// from the caller (one stationary pose cannot determine them).
inline calibration_params estimate_params(std::span<const raw_sample> samples,
                                          std::size_t window,
                                          double gain_x = default_gain_counts_per_g,
                                          double gain_y = default_gain_counts_per_g,
                                          double gain_z = default_gain_counts_per_g) {
  if (window < 1) raise(errc::parameter, "calibration window must be >= 1");
  if (samples.size() < window)
    raise(errc::insufficient_data,
          "calibration needs " + std::to_string(window) + " samples, dataset has " +
              std::to_string(samples.size()));
  double sx = 0.0, sy = 0.0, sz = 0.0;
  for (std::size_t i = 0; i < window; ++i) {
    sx += static_cast<double>(samples[i].ax);
    sy += static_cast<double>(samples[i].ay);
    sz += static_cast<double>(samples[i].az);
  }
  const double n = static_cast<double>(window);
  calibration_params p;
  p.offset_x = sx / n;
  p.offset_y = sy / n;
  p.offset_z = sz / n - gain_z * 1.0;
  p.gain_x = gain_x;
  p.gain_y = gain_y;
  p.gain_z = gain_z;
  p.validate();
  return p;
}

// Applies the linear map to one sample. Values beyond ±range_g are clamped and
// flagged (never fatal); clamp_count, when given, accumulates the number of
// clamped axes.
inline calibrated_sample apply(const raw_sample& s, const calibration_params& p,
                               double range_g = 6.0, std::size_t* clamp_count = nullptr) {
  calibrated_sample out;
  out.index = s.index;
  const double vals[3] = {
      (static_cast<double>(s.ax) - p.offset_x) / p.gain_x,
      (static_cast<double>(s.ay) - p.offset_y) / p.gain_y,
      (static_cast<double>(s.az) - p.offset_z) / p.gain_z,
  };
  double clamped_vals[3];
  for (int i = 0; i < 3; ++i) {
    double v = vals[i];
    if (v > range_g) {
      v = range_g;
      out.clamped = true;
      if (clamp_count) ++*clamp_count;
    } else if (v < -range_g) {
      v = -range_g;
      out.clamped = true;
      if (clamp_count) ++*clamp_count;
    }
    clamped_vals[i] = v;
  }
  out.ax = clamped_vals[0];
  out.ay = clamped_vals[1];
  out.az = clamped_vals[2];
  return out;
}

// --- flat key=value persistence so a calibration can be reused across runs ---

inline std::string format_params(const calibration_params& p) {
  std::ostringstream os;
  os.precision(17);
  os << "offset_x = " << p.offset_x << "\n"
     << "offset_y = " << p.offset_y << "\n"
     << "offset_z = " << p.offset_z << "\n"
     << "gain_x = " << p.gain_x << "\n"
     << "gain_y = " << p.gain_y << "\n"
     << "gain_z = " << p.gain_z << "\n";
  return os.str();
}

inline calibration_params parse_params(std::istream& in) {
  calibration_params p;
  std::map<std::string, double*> fields{
      {"offset_x", &p.offset_x}, {"offset_y", &p.offset_y}, {"offset_z", &p.offset_z},
      {"gain_x", &p.gain_x},     {"gain_y", &p.gain_y},     {"gain_z", &p.gain_z},
  };
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      raise(errc::parse, "expected key = value", line_no);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = fields.find(key);
    if (it == fields.end())
      raise(errc::parse, "unknown calibration key '" + key + "'", line_no);
    try {
      std::size_t pos = 0;
      *it->second = std::stod(value, &pos);
      if (pos != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      raise(errc::parse, "bad numeric value '" + value + "' for key '" + key + "'", line_no);
    }
  }
  p.validate();
  return p;
}

inline void save_params(const calibration_params& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) raise(errc::io, "cannot open '" + path + "' for writing");
  out << format_params(p);
  if (!out) raise(errc::io, "write failed for '" + path + "'");
}

inline calibration_params load_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::io, "cannot open '" + path + "'");
  return parse_params(in);
}

}  // namespace actispec

#endif  // ACTISPEC_CALIBRATION_HPP
