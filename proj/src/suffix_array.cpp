#include "slpz/suffix_array.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace slpz {

namespace {

// SA-IS over symbols in [0, upper]. Works on int32 and recurses on the
// reduced string of LMS substrings.
std::vector<std::int32_t> sa_is(const std::vector<std::int32_t>& s,
                                std::int32_t upper) {
  const auto n = static_cast<std::int32_t>(s.size());
  if (n == 0) {
    return {};
  }
  if (n == 1) {
    return {0};
  }
  if (n == 2) {
    return s[0] < s[1] ? std::vector<std::int32_t>{0, 1}
                       : std::vector<std::int32_t>{1, 0};
  }

  std::vector<std::int32_t> sa(n);
  // is_s[i]: suffix i is S-type. The last suffix is L-type (virtual sentinel).
  std::vector<std::uint8_t> is_s(n, 0);
  for (std::int32_t i = n - 2; i >= 0; --i) {
    is_s[i] = s[i] == s[i + 1] ? is_s[i + 1] : (s[i] < s[i + 1]);
  }

  // bucket_l[c]: start of c's bucket; bucket_s[c]: start of c's S part.
  std::vector<std::int32_t> bucket_l(upper + 2, 0), bucket_s(upper + 2, 0);
  for (std::int32_t i = 0; i < n; ++i) {
    if (!is_s[i]) {
      ++bucket_s[s[i]];
    } else {
      ++bucket_l[s[i] + 1];
    }
  }
  for (std::int32_t c = 0; c <= upper; ++c) {
    bucket_s[c] += bucket_l[c];
    if (c < upper) {
      bucket_l[c + 1] += bucket_s[c];
    }
  }

  auto is_lms = [&](std::int32_t i) { return i > 0 && !is_s[i - 1] && is_s[i]; };

  auto induce = [&](const std::vector<std::int32_t>& lms) {
    std::fill(sa.begin(), sa.end(), -1);
    std::vector<std::int32_t> head(bucket_s);
    for (std::int32_t d : lms) {
      sa[head[s[d]]++] = d;
    }
    head = bucket_l;
    sa[head[s[n - 1]]++] = n - 1;
    for (std::int32_t r = 0; r < n; ++r) {
      const std::int32_t v = sa[r];
      if (v >= 1 && !is_s[v - 1]) {
        sa[head[s[v - 1]]++] = v - 1;
      }
    }
    head = bucket_l;
    for (std::int32_t r = n - 1; r >= 0; --r) {
      const std::int32_t v = sa[r];
      if (v >= 1 && is_s[v - 1]) {
        sa[--head[s[v - 1] + 1]] = v - 1;
      }
    }
  };

  std::vector<std::int32_t> lms_index(n, -1);
  std::vector<std::int32_t> lms;
  for (std::int32_t i = 1; i < n; ++i) {
    if (is_lms(i)) {
      lms_index[i] = static_cast<std::int32_t>(lms.size());
      lms.push_back(i);
    }
  }
  const auto m = static_cast<std::int32_t>(lms.size());

  induce(lms);
  if (m == 0) {
    return sa;
  }

  std::vector<std::int32_t> sorted_lms;
  sorted_lms.reserve(m);
  for (std::int32_t v : sa) {
    if (lms_index[v] != -1) {
      sorted_lms.push_back(v);
    }
  }

  // Name LMS substrings; equal substrings share a name.
  std::vector<std::int32_t> reduced(m);
  std::int32_t name = 0;
  reduced[lms_index[sorted_lms[0]]] = 0;
  for (std::int32_t k = 1; k < m; ++k) {
    std::int32_t l = sorted_lms[k - 1];
    std::int32_t r = sorted_lms[k];
    const std::int32_t end_l = lms_index[l] + 1 < m ? lms[lms_index[l] + 1] : n;
    const std::int32_t end_r = lms_index[r] + 1 < m ? lms[lms_index[r] + 1] : n;
    bool same = end_l - l == end_r - r;
    if (same) {
      while (l < end_l && s[l] == s[r]) {
        ++l;
        ++r;
      }
      if (l == n || s[l] != s[r]) {
        same = false;
      }
    }
    if (!same) {
      ++name;
    }
    reduced[lms_index[sorted_lms[k]]] = name;
  }

  const std::vector<std::int32_t> reduced_sa = sa_is(reduced, name);
  for (std::int32_t k = 0; k < m; ++k) {
    sorted_lms[k] = lms[reduced_sa[k]];
  }
  induce(sorted_lms);
  return sa;
}

}  // namespace

std::vector<Pos> suffix_array(std::span<const Symbol> word) {
  if (word.size() > kMaxInputLength) {
    throw std::length_error("word too long for 32-bit positions");
  }
  std::vector<std::int32_t> s(word.begin(), word.end());
  std::int32_t upper = 0;
  for (Symbol c : word) {
    if (c > static_cast<Symbol>(std::numeric_limits<std::int32_t>::max() - 2)) {
      throw std::invalid_argument("symbol id out of range");
    }
    upper = std::max(upper, static_cast<std::int32_t>(c));
  }
  const std::vector<std::int32_t> sa = sa_is(s, upper);
  return {sa.begin(), sa.end()};
}

std::vector<Pos> lcp_array(std::span<const Symbol> word,
                           std::span<const Pos> sa,
                           std::span<const Pos> rank) {
  const std::size_t n = word.size();
  std::vector<Pos> lcp(n, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && word[i + h] == word[j + h]) {
      ++h;
    }
    lcp[rank[i]] = static_cast<Pos>(h);
    if (h > 0) {
      --h;
    }
  }
  return lcp;
}

SuffixArrayBundle build_suffix_array(const Word& word) {
  if (word.empty()) {
    throw EmptyInputError();
  }
  SuffixArrayBundle out;
  out.sa = suffix_array(word);
  out.rank.resize(word.size());
  for (std::size_t r = 0; r < out.sa.size(); ++r) {
    out.rank[out.sa[r]] = static_cast<Pos>(r);
  }
  out.lcp = lcp_array(word, out.sa, out.rank);
  return out;
}

RangeMin::RangeMin(std::span<const Pos> values) : values_(values) {
  const std::size_t blocks = (values.size() + kBlock - 1) / kBlock;
  if (blocks == 0) {
    return;
  }
  std::vector<Pos> level(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t lo = b * kBlock;
    const std::size_t hi = std::min(values.size(), lo + kBlock);
    level[b] = *std::min_element(values.begin() + lo, values.begin() + hi);
  }
  table_.push_back(std::move(level));
  for (std::size_t width = 2; width <= blocks; width *= 2) {
    const std::vector<Pos>& prev = table_.back();
    std::vector<Pos> next(blocks - width + 1);
    for (std::size_t b = 0; b < next.size(); ++b) {
      next[b] = std::min(prev[b], prev[b + width / 2]);
    }
    table_.push_back(std::move(next));
  }
}

Pos RangeMin::min(std::size_t lo, std::size_t hi) const {
  const std::size_t lo_block = lo / kBlock;
  const std::size_t hi_block = hi / kBlock;
  if (hi_block <= lo_block + 1) {
    return *std::min_element(values_.begin() + lo, values_.begin() + hi + 1);
  }
  Pos best = *std::min_element(values_.begin() + lo,
                               values_.begin() + (lo_block + 1) * kBlock);
  best = std::min(best, *std::min_element(values_.begin() + hi_block * kBlock,
                                          values_.begin() + hi + 1));
  const std::size_t first = lo_block + 1;
  const std::size_t count = hi_block - first;
  const auto k = static_cast<std::size_t>(std::bit_width(count) - 1);
  best = std::min(best, table_[k][first]);
  best = std::min(best, table_[k][hi_block - (std::size_t{1} << k)]);
  return best;
}

}  // namespace slpz
