#pragma once

#include <vector>

#include "slpz/model.hpp"

namespace slpz {

/// Hands out nonterminal ids in strictly increasing order, never reusing one.
class FreshAllocator {
public:
  explicit FreshAllocator(Symbol first) : next_(first) {}

  Symbol allocate();
  [[nodiscard]] Symbol next() const { return next_; }

private:
  Symbol next_;
};

struct ReplaceResult {
  Word word;
  Factorization fact;
  std::size_t fresh_count = 0;
  /// Position in `word` for every input position that is Unpaired or First;
  /// kNoPos for the second letter of a pair.
  std::vector<Pos> pos_map;
};

/// Replaces every pair by one letter. Pairs of free letters get a fresh
/// letter and a rule appended to `rules` (one per occurrence, or one per
/// distinct pair in this call when `dedup` is set); pairs inside a factor
/// copy the letter already written for the matching pair of the definition,
/// so factors survive one-to-one into the new word.
///
/// Throws std::invalid_argument if `pairing` violates P1-P3 for `fact`.
ReplaceResult replace_pairs(const Word& word, const Factorization& fact,
                            const Pairing& pairing, std::vector<Rule>& rules,
                            FreshAllocator& fresh, bool dedup = false);

}  // namespace slpz
