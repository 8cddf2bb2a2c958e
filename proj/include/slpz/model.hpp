#pragma once

// Shared domain types: words over an integer alphabet, LZ77 factorisations
// stored per position, pairings, straight-line programs and per-phase
// counters. All positions are 0-based.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace slpz {

/// Letter id. Ids below the alphabet size are terminals, the rest are
/// grammar nonterminals ("fresh" letters) allocated in increasing order.
using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

/// Position inside a word. Inputs are limited to kMaxInputLength letters so
/// that positions and symbols fit in 32 bits.
using Pos = std::uint32_t;
inline constexpr Pos kNoPos = std::numeric_limits<Pos>::max();
inline constexpr std::size_t kMaxInputLength = (std::size_t{1} << 31) - 1;

class EmptyInputError : public std::invalid_argument {
public:
  EmptyInputError() : std::invalid_argument("empty input") {}
};

/// One phrase of a factorisation in list form (derived view).
struct Factor {
  Pos begin = 0;
  Pos end = 0;  // inclusive
  Pos definition = 0;

  [[nodiscard]] Pos length() const { return end - begin + 1; }
  bool operator==(const Factor&) const = default;
};

/// LZ77-style factorisation kept as two per-position tables: `begin[i]` is
/// the definition start of a factor starting at i (kNoPos otherwise) and
/// `end[i]` flags the last position of a factor. Positions not covered by a
/// factor are free letters.
class Factorization {
public:
  Factorization() = default;

  /// All positions free.
  explicit Factorization(std::size_t length)
      : begin_(length, kNoPos), end_(length, 0) {}

  static Factorization from_factors(std::size_t length,
                                    const std::vector<Factor>& factors);

  [[nodiscard]] std::size_t size() const { return begin_.size(); }

  [[nodiscard]] bool is_begin(std::size_t i) const {
    return i < begin_.size() && begin_[i] != kNoPos;
  }
  [[nodiscard]] Pos definition(std::size_t i) const { return begin_[i]; }
  [[nodiscard]] bool is_end(std::size_t i) const { return end_[i] != 0; }

  void set_begin(std::size_t i, Pos definition) { begin_[i] = definition; }
  void clear_begin(std::size_t i) { begin_[i] = kNoPos; }
  void set_end(std::size_t i, bool flag) { end_[i] = flag ? 1 : 0; }

  void add_factor(Pos begin, Pos end, Pos definition) {
    begin_[begin] = definition;
    end_[end] = 1;
  }

  /// Factors in position order. Assumes the tables are well formed; use
  /// validate_factorization first on untrusted data.
  [[nodiscard]] std::vector<Factor> factors() const;

  [[nodiscard]] std::size_t factor_count() const;
  [[nodiscard]] std::size_t free_count() const;

  bool operator==(const Factorization&) const = default;

private:
  std::vector<Pos> begin_;
  std::vector<std::uint8_t> end_;
};

/// Pairing mark of one position. Unset marks a position a sweep has not
/// assigned yet and is never valid in a finished pairing.
enum class Mark : std::uint8_t { Unset, First, Second, Unpaired };

using Pairing = std::vector<Mark>;

char mark_char(Mark m);

enum class ViolationKind {
  // factorisation
  DefinitionNotLeft,
  DefinitionMismatch,
  NestedBegin,
  EndWithoutBegin,
  UnterminatedFactor,
  // pairing
  UnsetMark,
  FirstWithoutSecond,
  SecondWithoutFirst,
  AdjacentUnpaired,       // P1
  FactorStartNotPaired,   // P2
  FactorEndNotPaired,     // P2
  PairingDiffersFromDefinition,  // P3
};

const char* to_string(ViolationKind kind);

struct Violation {
  std::size_t position = 0;
  ViolationKind kind{};

  bool operator==(const Violation&) const = default;
};

std::string describe(const std::vector<Violation>& violations);

/// Every invariant violation of `fact` as a factorisation of `word`. Throws
/// std::invalid_argument on a length mismatch.
std::vector<Violation> validate_factorization(const Word& word,
                                              const Factorization& fact);

/// Factorisation violations plus pairing-shape violations and P1-P3.
std::vector<Violation> validate_pairing(const Word& word,
                                        const Factorization& fact,
                                        const Pairing& pairing);

/// Multi-letter factors whose definition starts exactly one position to the
/// left (letter runs the pairing sweep must split).
std::vector<Pos> adjacent_definitions(const Factorization& fact);

struct Rule {
  Symbol lhs = 0;
  Symbol left = 0;
  Symbol right = 0;

  bool operator==(const Rule&) const = default;
};

/// Straight-line program in Chomsky normal form. Terminals are
/// 0..alphabet_size-1; rule i defines symbol alphabet_size + i.
struct Slp {
  Symbol alphabet_size = 256;
  std::vector<Rule> rules;
  Symbol start = 0;

  bool operator==(const Slp&) const = default;
};

struct PhaseStats {
  std::size_t phase = 0;
  std::size_t len_before = 0;
  std::size_t len_after = 0;
  std::size_t factors_before = 0;
  std::size_t factors_after = 0;
  std::size_t free_before = 0;
  std::size_t free_after = 0;
  std::size_t free_created_by_pairing = 0;
  std::size_t fresh_letters = 0;
  // State between the pairing sweep and the replacement.
  std::size_t factors_paired = 0;
  std::size_t free_paired = 0;
  std::size_t max_free_per_factor = 0;
};

}  // namespace slpz
