#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "slpz/model.hpp"

namespace slpz {

/// Properties checked after every phase when CompressOptions::verify is set.
enum class Check {
  Factorization,       // repaired / inherited factorisations stay proper
  PairingProperties,   // P1-P3
  DefinitionGap,       // multi-letter factors defined >= 2 positions left
  FreeLetterBound,     // <= 6 new free letters per factor per phase
  FactorCount,         // pairing never adds factors, replacement keeps them
  ShrinkBound,         // |w'| <= (2|w| + 1) / 3
  FreshAccounting,     // fresh letters == drop in free letters
  RoundTrip,           // one-level expansion of w' gives w
  PhaseCount,          // phases <= ceil(log_{3/2} N) + 1
};

const char* to_string(Check check);

class InvariantViolation : public std::logic_error {
public:
  InvariantViolation(std::size_t phase, Check check, const std::string& detail);

  [[nodiscard]] std::size_t phase() const { return phase_; }
  [[nodiscard]] Check check() const { return check_; }

private:
  std::size_t phase_;
  Check check_;
};

struct CompressOptions {
  /// Reuse one fresh letter for repeated free pairs within a phase.
  bool dedup = false;
  /// Check every per-phase invariant; throws InvariantViolation.
  bool verify = true;
  std::function<void(const PhaseStats&)> trace;
  /// Called with each phase's pairing before it is checked and used. Only
  /// meant for fault-injection tests.
  std::function<void(std::size_t phase, Pairing&)> pairing_hook;
};

struct CompressResult {
  Slp slp;
  std::vector<PhaseStats> stats;
  std::size_t lz_phrases = 0;
  std::size_t input_length = 0;
};

/// LZ77 factorisation followed by pairing/replacement phases until one
/// letter is left. Throws EmptyInputError on empty input.
CompressResult compress(std::span<const std::uint8_t> input,
                        const CompressOptions& options = {});

/// Same over an arbitrary integer alphabet; every letter must be below
/// `alphabet_size`.
CompressResult compress_word(const Word& word, Symbol alphabet_size,
                             const CompressOptions& options = {});

class SlpError : public std::runtime_error {
public:
  /// `rule` is the offending rule index, or npos for header-level problems.
  SlpError(std::size_t rule, const std::string& what)
      : std::runtime_error(what), rule_(rule) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  [[nodiscard]] std::size_t rule() const { return rule_; }

private:
  std::size_t rule_;
};

/// Throws SlpError on id gaps, forward references or an undefined start.
void validate_slp(const Slp& slp);

/// Length of the generated string; throws SlpError if it overflows 64 bits.
std::uint64_t expanded_length(const Slp& slp);

Word expand_word(const Slp& slp);
std::vector<std::uint8_t> expand(const Slp& slp);

/// ceil(log_{3/2} n) + 1.
std::size_t phase_bound(std::size_t n);

/// l * (1 + log2(max(n / l, 2))): the scale of the size guarantee.
double size_scale(std::size_t lz_phrases, std::size_t n);

/// 6 * l * (2 + log2(max(n / l, 2))) + l.
double rule_count_bound(std::size_t lz_phrases, std::size_t n);

struct GrammarReport {
  std::size_t n = 0;
  std::size_t lz_phrases = 0;
  std::size_t phases = 0;
  std::size_t rules = 0;
  std::size_t distinct_terminals = 0;
  std::size_t cnf_nonterminals = 0;
  std::size_t free_letters_created = 0;
  std::size_t max_free_per_factor = 0;
  double ratio = 0.0;
  double rule_bound = 0.0;
  std::size_t phase_bound = 0;
};

GrammarReport grammar_report(const Slp& slp, const std::vector<PhaseStats>& stats,
                             std::size_t lz_phrases, std::size_t n);

}  // namespace slpz
