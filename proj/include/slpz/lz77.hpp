#pragma once

#include "slpz/model.hpp"
#include "slpz/suffix_array.hpp"

namespace slpz {

/// Greedy LZ77 factorisation with self-referential copies. At every position
/// the longest match starting strictly to the left is taken, ties going to
/// the leftmost definition; matches of length <= 1 become free letters.
Factorization lz_factorize(const Word& word);
Factorization lz_factorize(const Word& word, const SuffixArrayBundle& index);

/// Quadratic reference implementation of the same contract.
Factorization naive_lz_factorize(const Word& word);

/// Number of phrases (factors plus free letters).
std::size_t phrase_count(const Factorization& fact);

}  // namespace slpz
