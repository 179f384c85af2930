// actispec — frequency-band activity classification for tri-axial accelerometer streams.
// SPDX-License-Identifier: MIT
#ifndef ACTISPEC_GEN_HPP
#define ACTISPEC_GEN_HPP

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "actispec/calibration.hpp"
#include "actispec/error.hpp"
#include "actispec/ingest.hpp"
#include "actispec/rng.hpp"
#include "actispec/spectrum.hpp"
#include "actispec/types.hpp"

namespace actispec {

// One scripted bout of an activity. target_ba_freq_hz is where the fused
// body-acceleration spectrum should peak; the axis drive runs at half that
// frequency because the magnitude fusion rectifies a zero-mean sinusoid and
// doubles its fundamental.
struct script_segment {
  activity kind = activity::rest;
  double duration_s = 0.0;
  double target_ba_freq_hz = 0.0;
  double amplitude_g = 0.0;
};

// Axis codes: ±1 → ±x, ±2 → ±y, ±3 → ±z.
struct activity_script {
  std::string name = "dataset";
  std::vector<script_segment> segments;
  double noise_sigma_g = 0.0;
  std::uint64_t seed = 0;
  int gravity_axis = 3;
};

struct gen_options {
  band_table bands;
  std::size_t block_size = 64;
  std::int64_t adc_full_scale = 4095;
  double accel_range_g = 6.0;
  bool self_check = true;  // verify each activity segment's spectral peak
};

inline void validate_script(const activity_script& script, const gen_options& opt,
                            double sample_rate_hz) {
  const double nyquist = sample_rate_hz / 2.0;
  opt.bands.validate(nyquist);
  if (script.segments.empty()) raise(errc::script, "script has no segments");
  if (!(script.noise_sigma_g >= 0.0)) raise(errc::script, "noise sigma must be >= 0");
  const int axis = std::abs(script.gravity_axis);
  if (axis < 1 || axis > 3) raise(errc::script, "gravity axis must be one of ±x, ±y, ±z");
  for (const script_segment& seg : script.segments) {
    if (!(seg.duration_s > 0.0)) raise(errc::script, "segment durations must be > 0");
    if (!(seg.amplitude_g >= 0.0)) raise(errc::script, "segment amplitude must be >= 0");
    if (seg.amplitude_g + 1.0 > opt.accel_range_g)
      raise(errc::script, "amplitude " + std::to_string(seg.amplitude_g) +
                              " g plus gravity exceeds the ±" +
                              std::to_string(opt.accel_range_g) + " g range");
    const double f = seg.target_ba_freq_hz;
    const band_table& b = opt.bands;
    // Targets must sit strictly inside the band of their activity (or, for
    // miscellaneous, strictly outside every band) so a one-bin wobble cannot
    // cross a boundary.
    switch (seg.kind) {
      case activity::rest:
        if (!(f > 0.0 && f < b.rest_max_hz))
          raise(errc::script, "rest target must lie strictly inside (0, " +
                                  std::to_string(b.rest_max_hz) + ") Hz");
        break;
      case activity::walk:
        if (!(f > b.walk_lo_hz && f < b.walk_hi_hz))
          raise(errc::script, "walk target must lie strictly inside the walk band");
        break;
      case activity::run:
        if (!(f > b.run_lo_hz && f < b.run_hi_hz))
          raise(errc::script, "run target must lie strictly inside the run band");
        break;
      case activity::misc:
        if (!(f > 0.0 && f < nyquist) || band_label(b, f) != activity::misc)
          raise(errc::script, "misc target must lie outside every activity band");
        break;
    }
  }
}

struct gen_result {
  dataset data;
  label_track labels;
};

// True for every full block whose samples all come from one segment. Majority
// labels on the remaining (transition) blocks are inherently contested; this
// mask lets callers score pure blocks separately.
inline std::vector<bool> block_purity(const activity_script& script, double sample_rate_hz,
                                      std::size_t block_size) {
  std::vector<std::size_t> bounds{0};
  for (const script_segment& seg : script.segments)
    bounds.push_back(bounds.back() +
                     static_cast<std::size_t>(std::llround(seg.duration_s * sample_rate_hz)));
  const std::size_t n_blocks = bounds.back() / block_size;
  std::vector<bool> pure(n_blocks, false);
  for (std::size_t b = 0; b < n_blocks; ++b) {
    const std::size_t lo = b * block_size, hi = lo + block_size;
    for (std::size_t s = 0; s + 1 < bounds.size(); ++s)
      if (bounds[s] <= lo && hi <= bounds[s + 1]) {
        pure[b] = true;
        break;
      }
  }
  return pure;
}

// Synthesizes raw counts plus per-block ground truth for a script.
//
// Signal model per sample: gravity (±1 g on the gravity axis) + a single-axis
// drive sinusoid (on x, or y when gravity occupies x) + Gaussian noise on all
// three axes. The drive runs at target/2 with one phase accumulator that
// carries across consecutive activity segments and resets only after rest —
// a phase restart at a walk→run boundary would inject a value/slope
// discontinuity whose spectral splash lands well below the walk band and can
// steal the first block's peak. Physical counts come from the inverse
// calibration map, rounded and clamped to the ADC range.
//
// Ground truth: one label per full block, the majority activity over its
// samples (ties go to the kind of the block's last sample). When self_check
// is on, each activity segment long enough to own a full block has its ideal
// rectified drive spectrum verified to peak within one bin of the target.
inline gen_result synthesize(const activity_script& script, const calibration_params& params,
                             double sample_rate_hz, const gen_options& opt = {}) {
  validate_script(script, opt, sample_rate_hz);
  params.validate();

  std::size_t total = 0;
  std::vector<std::size_t> seg_samples;
  for (const script_segment& seg : script.segments) {
    const auto ns = static_cast<std::size_t>(std::llround(seg.duration_s * sample_rate_hz));
    if (ns == 0) raise(errc::script, "segment shorter than one sample period");
    seg_samples.push_back(ns);
    total += ns;
  }

  const int gaxis = std::abs(script.gravity_axis) - 1;           // 0..2
  const double gsign = script.gravity_axis < 0 ? -1.0 : 1.0;
  const int daxis = gaxis == 0 ? 1 : 0;                          // drive axis index

  std::vector<double> accel[3];
  for (auto& a : accel) a.assign(total, 0.0);
  std::vector<activity> kinds(total, activity::rest);

  double phase = 0.0;
  std::size_t n0 = 0;
  for (std::size_t si = 0; si < script.segments.size(); ++si) {
    const script_segment& seg = script.segments[si];
    const std::size_t ns = seg_samples[si];
    for (std::size_t i = 0; i < ns; ++i) kinds[n0 + i] = seg.kind;
    if (seg.kind == activity::rest) {
      phase = 0.0;
    } else {
      const double step = 2.0 * std::numbers::pi * (seg.target_ba_freq_hz / 2.0) / sample_rate_hz;
      for (std::size_t i = 0; i < ns; ++i) {
        accel[daxis][n0 + i] = seg.amplitude_g * std::sin(phase);
        phase += step;
      }
    }
    n0 += ns;
  }
  for (std::size_t i = 0; i < total; ++i) accel[gaxis][i] += gsign;

  if (script.noise_sigma_g > 0.0) {
    normal_sampler noise(script.seed);
    for (std::size_t i = 0; i < total; ++i)
      for (auto& a : accel) a[i] += script.noise_sigma_g * noise();
  }

  gen_result out;
  out.data.sample_rate_hz = sample_rate_hz;
  out.data.samples.reserve(total);
  const double offsets[3] = {params.offset_x, params.offset_y, params.offset_z};
  const double gains[3] = {params.gain_x, params.gain_y, params.gain_z};
  for (std::size_t i = 0; i < total; ++i) {
    raw_sample s;
    s.index = static_cast<std::int64_t>(i);
    std::int64_t counts[3];
    for (int ax = 0; ax < 3; ++ax) {
      std::int64_t c = std::llround(offsets[ax] + gains[ax] * accel[ax][i]);
      if (c < 0) c = 0;
      if (c > opt.adc_full_scale) c = opt.adc_full_scale;
      counts[ax] = c;
    }
    s.ax = counts[0];
    s.ay = counts[1];
    s.az = counts[2];
    out.data.samples.push_back(s);
  }

  // Majority ground truth per full block.
  const std::size_t n_blocks = total / opt.block_size;
  out.labels.block_labels.reserve(n_blocks);
  for (std::size_t b = 0; b < n_blocks; ++b) {
    std::size_t counts_by_kind[4] = {0, 0, 0, 0};
    for (std::size_t i = b * opt.block_size; i < (b + 1) * opt.block_size; ++i)
      ++counts_by_kind[static_cast<std::size_t>(kinds[i])];
    const auto last_kind = static_cast<std::size_t>(kinds[(b + 1) * opt.block_size - 1]);
    std::size_t best = last_kind;  // ties resolve to the block's closing activity
    for (std::size_t k = 0; k < 4; ++k)
      if (counts_by_kind[k] > counts_by_kind[best]) best = k;
    out.labels.block_labels.push_back(static_cast<activity>(best));
  }

  // Self-check: the generator's contract is that an activity segment's ideal
  // rectified drive peaks within one bin of its target.
  if (opt.self_check) {
    std::size_t start = 0;
    double chk_phase = 0.0;
    for (std::size_t si = 0; si < script.segments.size(); ++si) {
      const script_segment& seg = script.segments[si];
      const std::size_t ns = seg_samples[si];
      if (seg.kind == activity::rest) {
        chk_phase = 0.0;
        start += ns;
        continue;
      }
      const double step = 2.0 * std::numbers::pi * (seg.target_ba_freq_hz / 2.0) / sample_rate_hz;
      const std::size_t first_block = (start + opt.block_size - 1) / opt.block_size;
      const std::size_t last_block_end = (start + ns) / opt.block_size;
      if (last_block_end > first_block + 1) {
        // Use the segment's last fully-interior block, away from the onset.
        const std::size_t b = last_block_end - 1;
        body_block blk;
        blk.sample_rate_hz = sample_rate_hz;
        blk.values.reserve(opt.block_size);
        const double base = chk_phase + step * static_cast<double>(b * opt.block_size - start);
        for (std::size_t i = 0; i < opt.block_size; ++i)
          blk.values.push_back(
              std::abs(seg.amplitude_g * std::sin(base + step * static_cast<double>(i))));
        const auto peak = find_peak(normalized_spectrum_of(blk, 256));
        const double bin_hz = sample_rate_hz / 256.0;
        if (!peak.has_value() ||
            std::abs(peak->freq_hz - seg.target_ba_freq_hz) > bin_hz + 1e-9)
          raise(errc::script,
                "generator self-check failed: segment targeting " +
                    std::to_string(seg.target_ba_freq_hz) + " Hz peaked at " +
                    std::to_string(peak ? peak->freq_hz : 0.0) + " Hz");
      }
      chk_phase += step * static_cast<double>(ns);
      start += ns;
    }
  }
  return out;
}

// ---------- script files (flat key=value plus repeated segment lines) ----------

inline std::string format_axis(int axis) {
  const char* names[3] = {"x", "y", "z"};
  std::string s = axis < 0 ? "-" : "+";
  return s + names[std::abs(axis) - 1];
}

inline int parse_axis(const std::string& token, std::size_t line_no) {
  std::string t = token;
  int sign = 1;
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
    sign = t[0] == '-' ? -1 : 1;
    t = t.substr(1);
  }
  if (t == "x") return sign * 1;
  if (t == "y") return sign * 2;
  if (t == "z") return sign * 3;
  raise(errc::parse, "bad axis '" + token + "' (use ±x, ±y or ±z)", line_no);
}

inline std::string format_script(const activity_script& script) {
  std::ostringstream os;
  os.precision(17);
  os << "name = " << script.name << "\n"
     << "seed = " << script.seed << "\n"
     << "noise_sigma_g = " << script.noise_sigma_g << "\n"
     << "gravity_axis = " << format_axis(script.gravity_axis) << "\n";
  for (const script_segment& seg : script.segments)
    os << "segment = " << to_string(seg.kind) << ' ' << seg.duration_s << ' '
       << seg.target_ba_freq_hz << ' ' << seg.amplitude_g << "\n";
  return os.str();
}

inline activity_script parse_script(std::istream& in) {
  activity_script script;
  std::string line;
  std::size_t line_no = 0;
  auto to_double = [](const std::string& v, std::size_t ln) {
    try {
      std::size_t pos = 0;
      const double d = std::stod(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
      return d;
    } catch (const std::exception&) {
      raise(errc::parse, "bad numeric value '" + v + "'", ln);
    }
  };
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
    if (key == "name") {
      script.name = value;
    } else if (key == "seed") {
      try {
        // stoull accepts a leading '-' (wrapping modulo 2^64) and stops at the
        // first non-digit, so both conditions need explicit rejection.
        if (value.empty() || value[0] == '-') throw std::invalid_argument(value);
        std::size_t pos = 0;
        script.seed = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        raise(errc::parse, "bad seed '" + value + "'", line_no);
      }
    } else if (key == "noise_sigma_g") {
      script.noise_sigma_g = to_double(value, line_no);
    } else if (key == "gravity_axis") {
      script.gravity_axis = parse_axis(value, line_no);
    } else if (key == "segment") {
      const auto fields = detail::split_fields(value);
      if (fields.size() != 4)
        raise(errc::parse, "segment needs: kind duration_s target_hz amplitude_g", line_no);
      script_segment seg;
      seg.kind = parse_activity(fields[0], line_no);
      seg.duration_s = to_double(fields[1], line_no);
      seg.target_ba_freq_hz = to_double(fields[2], line_no);
      seg.amplitude_g = to_double(fields[3], line_no);
      script.segments.push_back(seg);
    } else {
      raise(errc::parse, "unknown script key '" + key + "'", line_no);
    }
  }
  return script;
}

inline activity_script parse_script(const std::string& text) {
  std::istringstream in(text);
  return parse_script(in);
}

// ---------- corpus ----------

struct corpus_entry {
  std::string name;
  std::string samples_file;
  std::string labels_file;
  std::uint64_t seed = 0;
};

struct corpus_manifest {
  std::vector<corpus_entry> entries;
};

// Writes one samples file and one labels file per script plus a manifest that
// records names, files, seeds and full script parameters, sufficient to
// regenerate the corpus byte for byte.
inline corpus_manifest write_corpus(const std::vector<activity_script>& scripts,
                                    const std::string& directory,
                                    const calibration_params& params, double sample_rate_hz,
                                    const gen_options& opt = {}) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(directory, ec);
  if (ec) raise(errc::io, "cannot create directory '" + directory + "': " + ec.message());

  corpus_manifest manifest;
  std::string manifest_text = "# corpus manifest\n";
  manifest_text += "sample_rate_hz = " + std::to_string(sample_rate_hz) + "\n\n";
  for (const activity_script& script : scripts) {
    const gen_result r = synthesize(script, params, sample_rate_hz, opt);
    corpus_entry e;
    e.name = script.name;
    e.samples_file = script.name + ".csv";
    e.labels_file = script.name + ".labels";
    e.seed = script.seed;
    const std::string samples_path = (fs::path(directory) / e.samples_file).string();
    const std::string labels_path = (fs::path(directory) / e.labels_file).string();
    {
      std::ofstream out(samples_path);
      if (!out) raise(errc::io, "cannot open '" + samples_path + "' for writing");
      out << write_samples(r.data);
      if (!out) raise(errc::io, "write failed for '" + samples_path + "'");
    }
    {
      std::ofstream out(labels_path);
      if (!out) raise(errc::io, "cannot open '" + labels_path + "' for writing");
      out << write_labels(r.labels);
      if (!out) raise(errc::io, "write failed for '" + labels_path + "'");
    }
    manifest_text += "samples = " + e.samples_file + "\n";
    manifest_text += "labels = " + e.labels_file + "\n";
    manifest_text += format_script(script);
    manifest_text += "\n";
    manifest.entries.push_back(std::move(e));
  }
  const std::string manifest_path = (fs::path(directory) / "manifest.txt").string();
  std::ofstream out(manifest_path);
  if (!out) raise(errc::io, "cannot open '" + manifest_path + "' for writing");
  out << manifest_text;
  if (!out) raise(errc::io, "write failed for '" + manifest_path + "'");
  return manifest;
}

// The seeded 17-dataset demonstration corpus: two groups (A1..A7, B8..B17),
// each dataset a rest→walk→run sequence. Walk targets sit on padded-FFT bin
// centers 9..11 (1.76–2.15 Hz) and run targets on bins 14..19 (2.73–3.71 Hz)
// at the default 50 Hz rate; half the scripts use block-aligned durations and
// half deliberately leave a trailing remainder.
inline std::vector<activity_script> builtin_corpus(double noise_sigma_g) {
  constexpr double bin_hz = 50.0 / 256.0;
  const double rest_even[4] = {10.24, 12.8, 16.64, 20.48};
  const double rest_odd[4] = {10.0, 13.0, 17.0, 21.0};
  const double walk_even[3] = {30.72, 40.96, 35.84};
  const double walk_odd[3] = {31.0, 41.0, 36.5};
  const double run_even[3] = {28.16, 35.84, 33.28};
  const double run_odd[3] = {29.0, 36.0, 33.0};
  const int walk_bins[3] = {9, 10, 11};
  const int run_bins[6] = {14, 15, 16, 17, 18, 19};
  const double walk_amp[4] = {1.0, 1.2, 0.9, 1.1};
  const double run_amp[4] = {1.4, 1.5, 1.2, 1.3};

  std::vector<activity_script> scripts;
  for (int i = 0; i < 17; ++i) {
    activity_script s;
    s.name = (i < 7 ? "A" : "B") + std::to_string(i + 1);
    s.seed = 1101 + static_cast<std::uint64_t>(i);
    s.noise_sigma_g = noise_sigma_g;
    const bool even = i % 2 == 0;
    const double rest_d = (even ? rest_even : rest_odd)[i % 4];
    const double walk_d = (even ? walk_even : walk_odd)[i % 3];
    const double run_d = (even ? run_even : run_odd)[i % 3];
    s.segments.push_back({activity::rest, rest_d, 0.25, 0.0});
    s.segments.push_back({activity::walk, walk_d, walk_bins[i % 3] * bin_hz, walk_amp[i % 4]});
    s.segments.push_back({activity::run, run_d, run_bins[i % 6] * bin_hz, run_amp[(i + 1) % 4]});
    scripts.push_back(std::move(s));
  }
  return scripts;
}

}  // namespace actispec

#endif  // ACTISPEC_GEN_HPP
