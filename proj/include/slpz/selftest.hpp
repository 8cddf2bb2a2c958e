#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slpz/model.hpp"

namespace slpz {

struct SelftestOptions {
  /// Exhaustive binary words of length 1..limit; 0 disables every suite.
  std::size_t limit = 12;
  std::uint64_t seed = 42;
  std::size_t random_cases = 200;
  std::size_t random_max_length = 2000;
  /// Corrupt the first pairing of every word so the checks must fire.
  bool inject_fault = false;
};

struct SelftestFailure {
  std::string word;       // printable rendering of the failing input
  std::string phase;      // phase index or "-" when not phase specific
  std::string invariant;
  std::string detail;
};

struct SelftestSuite {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
};

struct SelftestReport {
  std::vector<SelftestSuite> suites;
  std::optional<SelftestFailure> first_failure;

  [[nodiscard]] bool passed() const { return !first_failure.has_value(); }
  [[nodiscard]] std::string summary() const;
};

/// Runs one input through every oracle and bound. Empty optional on success.
std::optional<SelftestFailure> check_input(const Word& word, Symbol alphabet_size,
                                           bool inject_fault = false);

SelftestReport run_selftest(const SelftestOptions& options);

std::string render_word(const Word& word);

}  // namespace slpz
