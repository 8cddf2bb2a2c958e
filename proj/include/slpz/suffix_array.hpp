#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "slpz/model.hpp"

namespace slpz {

/// Suffix array of a word together with its inverse and the LCP array
/// (lcp[r] = longest common prefix of suffixes sa[r-1] and sa[r], lcp[0] = 0).
struct SuffixArrayBundle {
  std::vector<Pos> sa;
  std::vector<Pos> rank;
  std::vector<Pos> lcp;
};

/// Induced sorting (SA-IS), linear in |word| + alphabet size.
std::vector<Pos> suffix_array(std::span<const Symbol> word);

/// Kasai et al. LCP construction.
std::vector<Pos> lcp_array(std::span<const Symbol> word,
                           std::span<const Pos> sa,
                           std::span<const Pos> rank);

SuffixArrayBundle build_suffix_array(const Word& word);

/// Range-minimum over a fixed array: a sparse table over blocks of 64
/// entries plus linear scans inside blocks. O(n) extra words of memory.
class RangeMin {
public:
  RangeMin() = default;
  explicit RangeMin(std::span<const Pos> values);

  /// Minimum of values[lo..hi], lo <= hi.
  [[nodiscard]] Pos min(std::size_t lo, std::size_t hi) const;

private:
  static constexpr std::size_t kBlock = 64;

  std::span<const Pos> values_;
  std::vector<std::vector<Pos>> table_;  // table_[k][b] = min of blocks b..b+2^k-1
};

}  // namespace slpz
