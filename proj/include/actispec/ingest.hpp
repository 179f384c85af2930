// actispec — frequency-band activity classification for tri-axial accelerometer streams.
// SPDX-License-Identifier: MIT
#ifndef ACTISPEC_INGEST_HPP
#define ACTISPEC_INGEST_HPP

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "actispec/error.hpp"
#include "actispec/types.hpp"

namespace actispec {

struct ingest_config {
  std::int64_t adc_full_scale = 4095;  // 12-bit converter by default
  double sample_rate_hz = 50.0;
};

namespace detail {

// Splits on commas and/or runs of whitespace; returns the non-empty fields.
inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',' || ch == ' ' || ch == '\t') {
      if (!cur.empty()) fields.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) fields.push_back(std::move(cur));
  return fields;
}

inline std::int64_t parse_count(const std::string& token, std::size_t line_no) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(token, &pos);
    if (pos != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    raise(errc::parse, "expected an integer field, got '" + token + "'", line_no);
  }
}

// True for comment ('#'-leading) and blank lines.
inline bool skippable(const std::string& line) {
  for (char ch : line) {
    if (ch == ' ' || ch == '\t' || ch == '\r') continue;
    return ch == '#';
  }
  return true;
}

inline std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace detail

// Parses one data line of the sample grammar `[index,]ax,ay,az` (fields
// separated by commas and/or whitespace). When the index column is absent the
// caller-provided fallback_index is used. line_no (1-based) tags errors.
inline raw_sample parse_sample_line(const std::string& raw_line, std::size_t line_no,
                                    const ingest_config& cfg, std::int64_t fallback_index) {
  const std::string line = detail::strip_cr(raw_line);
  const auto fields = detail::split_fields(line);
  if (fields.size() != 3 && fields.size() != 4)
    raise(errc::parse,
          "expected 3 or 4 fields, got " + std::to_string(fields.size()), line_no);
  raw_sample s;
  std::size_t base = 0;
  if (fields.size() == 4) {
    s.index = detail::parse_count(fields[0], line_no);
    base = 1;
  } else {
    s.index = fallback_index;
  }
  s.ax = detail::parse_count(fields[base + 0], line_no);
  s.ay = detail::parse_count(fields[base + 1], line_no);
  s.az = detail::parse_count(fields[base + 2], line_no);
  for (std::int64_t v : {s.ax, s.ay, s.az})
    if (v < 0 || v > cfg.adc_full_scale)
      raise(errc::range,
            "count " + std::to_string(v) + " outside [0, " +
                std::to_string(cfg.adc_full_scale) + "]", line_no);
  return s;
}

// Streaming entry point: one line in, one sample out. The caller keeps the
// running index for index-less lines.
inline raw_sample read_stream_frame(const std::string& line, std::int64_t fallback_index = 0,
                                    const ingest_config& cfg = {}) {
  return parse_sample_line(line, 1, cfg, fallback_index);
}

// Parses a whole sample file. Comment and blank lines are skipped; valid lines
// are never reordered, dropped, or duplicated. Throws errc::empty_input when
// no data line is present.
inline dataset parse_samples(std::istream& in, const ingest_config& cfg = {}) {
  dataset d;
  d.sample_rate_hz = cfg.sample_rate_hz;
  std::string line;
  std::size_t line_no = 0;
  bool have_prev_index = false;
  std::int64_t prev_index = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::skippable(line)) continue;
    const std::int64_t fallback = static_cast<std::int64_t>(d.samples.size());
    raw_sample s = parse_sample_line(line, line_no, cfg, fallback);
    if (have_prev_index && s.index <= prev_index)
      raise(errc::parse,
            "index " + std::to_string(s.index) + " not strictly increasing (previous " +
                std::to_string(prev_index) + ")", line_no);
    prev_index = s.index;
    have_prev_index = true;
    d.samples.push_back(s);
  }
  if (d.samples.empty()) raise(errc::empty_input, "no data lines in input");
  return d;
}

inline dataset parse_samples(const std::string& text, const ingest_config& cfg = {}) {
  std::istringstream in(text);
  return parse_samples(in, cfg);
}

// One activity token per line, case-insensitive, from {rest, walk, run, misc}.
inline label_track parse_labels(std::istream& in) {
  label_track t;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::skippable(line)) continue;
    const auto fields = detail::split_fields(detail::strip_cr(line));
    if (fields.size() != 1)
      raise(errc::parse, "expected one label per line, got " + std::to_string(fields.size()) + " fields",
            line_no);
    t.block_labels.push_back(parse_activity(fields[0], line_no));
  }
  return t;
}

inline label_track parse_labels(const std::string& text) {
  std::istringstream in(text);
  return parse_labels(in);
}

// Serializations chosen so that parse(write(x)) == x exactly.
inline std::string write_samples(const dataset& d) {
  std::string out;
  for (const raw_sample& s : d.samples) {
    out += std::to_string(s.index);
    out += ',';
    out += std::to_string(s.ax);
    out += ',';
    out += std::to_string(s.ay);
    out += ',';
    out += std::to_string(s.az);
    out += '\n';
  }
  return out;
}

inline std::string write_labels(const label_track& t) {
  std::string out;
  for (activity a : t.block_labels) {
    out += to_string(a);
    out += '\n';
  }
  return out;
}

}  // namespace actispec

#endif  // ACTISPEC_INGEST_HPP
