// actispec — frequency-band activity classification for tri-axial accelerometer streams.
// SPDX-License-Identifier: MIT
#ifndef ACTISPEC_TYPES_HPP
#define ACTISPEC_TYPES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "actispec/error.hpp"

namespace actispec {

// One quantized tri-axial reading as delivered by the sensor feed, in ADC counts.
// Counts are non-negative and bounded by the configured full scale; the parser
// enforces both. Stored signed so offset arithmetic never wraps.
struct raw_sample {
  std::int64_t index = 0;  // position in the stream, strictly increasing
  std::int64_t ax = 0;
  std::int64_t ay = 0;
  std::int64_t az = 0;

  friend bool operator==(const raw_sample&, const raw_sample&) = default;
};

struct dataset {
  std::vector<raw_sample> samples;
  double sample_rate_hz = 50.0;
};

enum class activity : int { rest = 0, walk = 1, run = 2, misc = 3 };

inline const char* to_string(activity a) {
  switch (a) {
    case activity::rest: return "rest";
    case activity::walk: return "walk";
    case activity::run: return "run";
    case activity::misc: return "misc";
  }
  return "?";
}

// Case-insensitive parse of an activity token; throws errc::parse on unknown
// tokens, tagging the given 1-based line number.
inline activity parse_activity(std::string token, std::size_t line = 0) {
  for (auto& ch : token)
    if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
  if (token == "rest") return activity::rest;
  if (token == "walk") return activity::walk;
  if (token == "run") return activity::run;
  if (token == "misc" || token == "miscellaneous") return activity::misc;
  raise(errc::parse, "unknown activity label '" + token + "'", line);
}

// Ground-truth labels, one per full block of the paired dataset.
struct label_track {
  std::vector<activity> block_labels;
};

// Classifier verdict for one block. peak_freq_hz is absent when the block was
// routed to rest by the energy floor or the weak-peak rule (no usable peak).
struct activity_label {
  activity kind = activity::rest;
  std::size_t block_index = 0;
  std::optional<double> peak_freq_hz;

  friend bool operator==(const activity_label&, const activity_label&) = default;
};

// Frequency bands that map a spectral peak to an activity. The defaults place
// rest below 0.5 Hz, walk across 1.5–2.5 Hz and run across 2.5–4 Hz. The
// decision order in classify_block makes 2.5 Hz belong to walk: run's interval
// is half-open (run_lo, run_hi], walk's closed [walk_lo, walk_hi].
struct band_table {
  double rest_max_hz = 0.5;
  double walk_lo_hz = 1.5;
  double walk_hi_hz = 2.5;
  double run_lo_hz = 2.5;
  double run_hi_hz = 4.0;

  // Rejects inverted or out-of-range tables instead of silently reordering.
  void validate(double nyquist_hz) const {
    const bool ordered = 0.0 < rest_max_hz && rest_max_hz < walk_lo_hz &&
                         walk_lo_hz <= walk_hi_hz && walk_hi_hz <= run_lo_hz &&
                         run_lo_hz < run_hi_hz;
    if (!ordered)
      raise(errc::parameter, "band table must satisfy 0 < rest < walk_lo <= walk_hi <= run_lo < run_hi");
    if (!(run_hi_hz < nyquist_hz))
      raise(errc::parameter, "band table exceeds Nyquist frequency (" + std::to_string(nyquist_hz) + " Hz)");
  }
};

// Pure peak-frequency -> activity decision. Checked in priority order run,
// walk, rest; anything else (the 0.5–1.5 Hz gap and everything above run_hi)
// is miscellaneous.
inline activity band_label(const band_table& bands, double peak_freq_hz) {
  if (peak_freq_hz > bands.run_lo_hz && peak_freq_hz <= bands.run_hi_hz) return activity::run;
  if (peak_freq_hz >= bands.walk_lo_hz && peak_freq_hz <= bands.walk_hi_hz) return activity::walk;
  if (peak_freq_hz > 0.0 && peak_freq_hz <= bands.rest_max_hz) return activity::rest;
  return activity::misc;
}

}  // namespace actispec

#endif  // ACTISPEC_TYPES_HPP
