// actispec — frequency-band activity classification for tri-axial accelerometer streams.
// SPDX-License-Identifier: MIT
#ifndef ACTISPEC_EVAL_HPP
#define ACTISPEC_EVAL_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "actispec/error.hpp"
#include "actispec/ingest.hpp"
#include "actispec/types.hpp"

namespace actispec {

// Block-by-block tally indexed [truth][predicted] over {rest, walk, run, misc}.
struct confusion_matrix {
  std::array<std::array<std::uint64_t, 4>, 4> counts{};

  std::uint64_t total() const {
    std::uint64_t n = 0;
    for (const auto& row : counts)
      for (std::uint64_t c : row) n += c;
    return n;
  }

  std::uint64_t correct() const {
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < 4; ++i) n += counts[i][i];
    return n;
  }

  confusion_matrix& operator+=(const confusion_matrix& other) {
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) counts[i][j] += other.counts[i][j];
    return *this;
  }
};

inline confusion_matrix score(std::span<const activity> predicted,
                              std::span<const activity> truth) {
  if (predicted.size() != truth.size())
    raise(errc::alignment,
          "predicted has " + std::to_string(predicted.size()) + " blocks, truth has " +
              std::to_string(truth.size()));
  confusion_matrix m;
  for (std::size_t i = 0; i < truth.size(); ++i)
    ++m.counts[static_cast<std::size_t>(truth[i])][static_cast<std::size_t>(predicted[i])];
  return m;
}

// One decimal place, ties rounded away from zero (0.05 → 0.1).
inline double round_pct(double pct) { return std::round(pct * 10.0) / 10.0; }

inline std::string format_pct(double pct) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", round_pct(pct));
  return buf;
}

struct dataset_score {
  std::string name;
  std::uint64_t n_blocks = 0;
  std::uint64_t n_correct = 0;
  std::uint64_t n_wrong = 0;
  double accuracy_pct = 0.0;  // full precision; render with format_pct
};

// Per-dataset rows plus a pooled aggregate row. The aggregate divides pooled
// counts (sum of correct over sum of blocks), not the mean of percentages.
struct accuracy_report {
  std::vector<dataset_score> per_dataset;
  dataset_score aggregate;
};

inline accuracy_report report(const std::vector<std::pair<std::string, confusion_matrix>>& matrices) {
  if (matrices.empty()) raise(errc::parameter, "report needs at least one confusion matrix");
  accuracy_report rep;
  rep.aggregate.name = "total";
  for (const auto& [name, m] : matrices) {
    dataset_score s;
    s.name = name;
    s.n_blocks = m.total();
    s.n_correct = m.correct();
    s.n_wrong = s.n_blocks - s.n_correct;
    s.accuracy_pct = s.n_blocks ? 100.0 * static_cast<double>(s.n_correct) /
                                      static_cast<double>(s.n_blocks)
                                : 0.0;
    rep.aggregate.n_blocks += s.n_blocks;
    rep.aggregate.n_correct += s.n_correct;
    rep.per_dataset.push_back(std::move(s));
  }
  rep.aggregate.n_wrong = rep.aggregate.n_blocks - rep.aggregate.n_correct;
  rep.aggregate.accuracy_pct =
      rep.aggregate.n_blocks ? 100.0 * static_cast<double>(rep.aggregate.n_correct) /
                                   static_cast<double>(rep.aggregate.n_blocks)
                             : 0.0;
  return rep;
}

namespace detail {

inline std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace detail

// Aligned per-dataset table.
inline std::string render_table(const accuracy_report& rep) {
  std::string out = detail::pad("dataset", 12) + detail::pad("blocks", 8) +
                    detail::pad("correct", 9) + detail::pad("wrong", 7) + "accuracy %\n";
  auto row = [&out](const dataset_score& s) {
    out += detail::pad(s.name, 12) + detail::pad(std::to_string(s.n_blocks), 8) +
           detail::pad(std::to_string(s.n_correct), 9) +
           detail::pad(std::to_string(s.n_wrong), 7) + format_pct(s.accuracy_pct) + "\n";
  };
  for (const auto& s : rep.per_dataset) row(s);
  row(rep.aggregate);
  return out;
}

// Two-row grouped table (group = leading letter of the dataset name, e.g.
// A1..A7 and B8..B17) plus the pooled total — the shape used for corpus-level
// summaries.
inline std::string render_grouped(const accuracy_report& rep) {
  struct group {
    std::uint64_t datasets = 0, blocks = 0, correct = 0;
  };
  std::map<char, group> groups;
  for (const auto& s : rep.per_dataset) {
    group& g = groups[s.name.empty() ? '?' : s.name[0]];
    ++g.datasets;
    g.blocks += s.n_blocks;
    g.correct += s.n_correct;
  }
  std::string out = detail::pad("group", 7) + detail::pad("datasets", 10) +
                    detail::pad("blocks", 8) + detail::pad("correct", 9) +
                    detail::pad("wrong", 7) + "accuracy %\n";
  std::uint64_t tot_d = 0;
  for (const auto& [name, g] : groups) {
    tot_d += g.datasets;
    const double pct = g.blocks ? 100.0 * static_cast<double>(g.correct) /
                                      static_cast<double>(g.blocks)
                                : 0.0;
    out += detail::pad(std::string(1, name), 7) + detail::pad(std::to_string(g.datasets), 10) +
           detail::pad(std::to_string(g.blocks), 8) + detail::pad(std::to_string(g.correct), 9) +
           detail::pad(std::to_string(g.blocks - g.correct), 7) + format_pct(pct) + "\n";
  }
  out += detail::pad("total", 7) + detail::pad(std::to_string(tot_d), 10) +
         detail::pad(std::to_string(rep.aggregate.n_blocks), 8) +
         detail::pad(std::to_string(rep.aggregate.n_correct), 9) +
         detail::pad(std::to_string(rep.aggregate.n_wrong), 7) +
         format_pct(rep.aggregate.accuracy_pct) + "\n";
  return out;
}

// Machine-readable form: one `name,blocks,correct,wrong,accuracy` row per
// dataset plus the total row. parse_report reads it back exactly.
inline std::string render_csv(const accuracy_report& rep) {
  std::string out = "name,blocks,correct,wrong,accuracy_pct\n";
  auto row = [&out](const dataset_score& s) {
    out += s.name + ',' + std::to_string(s.n_blocks) + ',' + std::to_string(s.n_correct) + ',' +
           std::to_string(s.n_wrong) + ',' + format_pct(s.accuracy_pct) + '\n';
  };
  for (const auto& s : rep.per_dataset) row(s);
  row(rep.aggregate);
  return out;
}

inline accuracy_report parse_report(const std::string& csv) {
  accuracy_report rep;
  std::istringstream in(csv);
  std::string line;
  std::size_t line_no = 0;
  bool have_total = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line_no == 1) continue;  // header
    const auto fields = detail::split_fields(line);
    if (fields.size() != 5) raise(errc::parse, "expected 5 fields", line_no);
    dataset_score s;
    s.name = fields[0];
    try {
      s.n_blocks = std::stoull(fields[1]);
      s.n_correct = std::stoull(fields[2]);
      s.n_wrong = std::stoull(fields[3]);
      s.accuracy_pct = std::stod(fields[4]);
    } catch (const std::exception&) {
      raise(errc::parse, "bad numeric field", line_no);
    }
    if (s.n_correct + s.n_wrong != s.n_blocks)
      raise(errc::parse, "correct + wrong != blocks", line_no);
    if (s.name == "total") {
      rep.aggregate = s;
      have_total = true;
    } else {
      rep.per_dataset.push_back(std::move(s));
    }
  }
  if (!have_total && rep.per_dataset.empty())
    raise(errc::empty_input, "report has no rows");
  return rep;
}

}  // namespace actispec

#endif  // ACTISPEC_EVAL_HPP
