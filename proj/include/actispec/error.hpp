// actispec — frequency-band activity classification for tri-axial accelerometer streams.
// SPDX-License-Identifier: MIT
#ifndef ACTISPEC_ERROR_HPP
#define ACTISPEC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace actispec {

// Every failure the library can raise belongs to one of these categories.
// The CLI maps each category to the distinct process exit code given by
// exit_code(); library users can switch on category() instead of parsing
// messages.
enum class errc {
  usage = 1,              // bad command line / unknown flag
  parse = 2,              // malformed input text (samples, labels, config, ...)
  range = 3,              // numeric field outside its permitted range
  empty_input = 4,        // an input that must be non-empty was empty
  insufficient_data = 5,  // not enough samples for the requested operation
  parameter = 6,          // invalid parameter value (order 0, bad n_fft, ...)
  alignment = 7,          // paired sequences of mismatched length
  io = 8,                 // file system failure
  script = 9,             // invalid synthesis script
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::usage: return "usage";
    case errc::parse: return "parse";
    case errc::range: return "range";
    case errc::empty_input: return "empty_input";
    case errc::insufficient_data: return "insufficient_data";
    case errc::parameter: return "parameter";
    case errc::alignment: return "alignment";
    case errc::io: return "io";
    case errc::script: return "script";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc category, std::string message, std::size_t line = 0)
      : std::runtime_error(line == 0 ? std::move(message)
                                     : "line " + std::to_string(line) + ": " + message),
        category_(category),
        line_(line) {}

  errc category() const noexcept { return category_; }

  // 1-based line number of the offending input line; 0 when not applicable.
  std::size_t line() const noexcept { return line_; }

  int exit_code() const noexcept { return static_cast<int>(category_); }

 private:
  errc category_;
  std::size_t line_;
};

[[noreturn]] inline void raise(errc category, std::string message, std::size_t line = 0) {
  throw error(category, std::move(message), line);
}

}  // namespace actispec

#endif  // ACTISPEC_ERROR_HPP
