#pragma once

// SLPZ v1 text container:
//
//   SLPZ 1
//   alphabet 256
//   length <N>
//   start <id>
//   rules <m>
//   <lhs> <left> <right>      (m lines, lhs = alphabet, alphabet+1, ...)
//
// LF line endings, trailing newline required.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slpz/grammar.hpp"
#include "slpz/model.hpp"

namespace slpz {

class FormatError : public std::runtime_error {
public:
  FormatError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line),
        message_(message) {}

  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] const std::string& message() const { return message_; }

private:
  std::size_t line_;
  std::string message_;
};

struct SlpzFile {
  Slp slp;
  std::uint64_t length = 0;
};

std::string write_slpz(const Slp& slp);

/// Parses and fully validates a container, including that the declared
/// length matches the grammar. Throws FormatError.
SlpzFile parse_slpz(std::string_view text);

/// One JSON object with exactly the per-phase trace keys.
std::string phase_to_json(const PhaseStats& stats);
std::string trace_to_jsonl(const std::vector<PhaseStats>& stats);

std::string report_to_json(const GrammarReport& report);

}  // namespace slpz
