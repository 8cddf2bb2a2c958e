#pragma once

#include <vector>

#include "slpz/model.hpp"

namespace slpz {

struct PairingResult {
  Pairing marks;
  Factorization fact;         // repaired factorisation the marks refer to
  std::size_t free_created = 0;
  /// Free letters created on behalf of each input factor, in input order.
  /// Factors that survive unchanged contribute 0.
  std::vector<std::size_t> created_per_factor;
  std::size_t max_created_per_factor = 0;
  std::size_t steps = 0;      // letter visits by the sweep
};

/// Single left-to-right sweep that pairs the word so that
///   P1  no two adjacent letters are unpaired,
///   P2  every factor starts and ends with a full pair,
///   P3  every factor is paired exactly like its definition,
/// repairing the factorisation on the way: one-letter factors are demoted,
/// letter runs whose definition is one position to the left are split, and
/// factors are shortened from the left or right until P2 holds. The number
/// of factors never grows; every input factor yields at most 6 new free
/// letters.
///
/// Throws std::invalid_argument if `fact` is not a valid factorisation of
/// `word`, std::logic_error if an internal sweep invariant breaks.
PairingResult find_pairing(const Word& word, Factorization fact);

}  // namespace slpz
