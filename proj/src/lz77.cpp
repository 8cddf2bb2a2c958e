#include "slpz/lz77.hpp"

#include <algorithm>

namespace slpz {

namespace {

std::size_t common_prefix(const Word& word, std::size_t a, std::size_t b) {
  std::size_t k = 0;
  while (a + k < word.size() && b + k < word.size() && word[a + k] == word[b + k]) {
    ++k;
  }
  return k;
}

// Nearest rank to the left (previous) and right (next) whose suffix starts
// at a smaller text position.
void nearest_smaller(const std::vector<Pos>& sa, std::vector<Pos>& prev,
                     std::vector<Pos>& next) {
  const std::size_t n = sa.size();
  prev.assign(n, kNoPos);
  next.assign(n, kNoPos);
  std::vector<Pos> stack;
  stack.reserve(64);
  for (std::size_t r = 0; r < n; ++r) {
    while (!stack.empty() && sa[stack.back()] > sa[r]) {
      next[stack.back()] = static_cast<Pos>(r);
      stack.pop_back();
    }
    if (!stack.empty()) {
      prev[r] = stack.back();
    }
    stack.push_back(static_cast<Pos>(r));
  }
}

// Smallest lo <= r with lcp[lo+1..r] >= length everywhere.
std::size_t extend_left(const RangeMin& lcp, std::size_t r, Pos length) {
  std::size_t good = r;
  std::size_t step = 1;
  while (good > 0) {
    const std::size_t cand = good >= step ? good - step : 0;
    if (lcp.min(cand + 1, r) >= length) {
      good = cand;
      step *= 2;
      continue;
    }
    std::size_t bad = cand;
    while (good - bad > 1) {
      const std::size_t mid = bad + (good - bad) / 2;
      if (lcp.min(mid + 1, r) >= length) {
        good = mid;
      } else {
        bad = mid;
      }
    }
    break;
  }
  return good;
}

// Largest hi >= r with lcp[r+1..hi] >= length everywhere.
std::size_t extend_right(const RangeMin& lcp, std::size_t n, std::size_t r,
                         Pos length) {
  std::size_t good = r;
  std::size_t step = 1;
  while (good + 1 < n) {
    const std::size_t cand = std::min(n - 1, good + step);
    if (lcp.min(r + 1, cand) >= length) {
      good = cand;
      step *= 2;
      continue;
    }
    std::size_t bad = cand;
    while (bad - good > 1) {
      const std::size_t mid = good + (bad - good) / 2;
      if (lcp.min(r + 1, mid) >= length) {
        good = mid;
      } else {
        bad = mid;
      }
    }
    break;
  }
  return good;
}

}  // namespace

Factorization lz_factorize(const Word& word) {
  if (word.empty()) {
    throw EmptyInputError();
  }
  return lz_factorize(word, build_suffix_array(word));
}

Factorization lz_factorize(const Word& word, const SuffixArrayBundle& index) {
  if (word.empty()) {
    throw EmptyInputError();
  }
  const std::size_t n = word.size();
  std::vector<Pos> prev, next;
  nearest_smaller(index.sa, prev, next);
  const RangeMin lcp_min(index.lcp);
  const RangeMin position_min(index.sa);

  Factorization fact(n);
  std::size_t i = 0;
  while (i < n) {
    const std::size_t r = index.rank[i];
    std::size_t length = 0;
    if (prev[r] != kNoPos) {
      length = common_prefix(word, index.sa[prev[r]], i);
    }
    if (next[r] != kNoPos) {
      length = std::max(length, common_prefix(word, index.sa[next[r]], i));
    }
    if (length <= 1) {
      ++i;
      continue;
    }
    // Every suffix sharing `length` letters with suffix i sits in one rank
    // interval; its smallest text position is the leftmost definition.
    const auto len = static_cast<Pos>(length);
    const std::size_t lo = extend_left(lcp_min, r, len);
    const std::size_t hi = extend_right(lcp_min, n, r, len);
    const Pos definition = position_min.min(lo, hi);
    fact.add_factor(static_cast<Pos>(i), static_cast<Pos>(i + length - 1),
                    definition);
    i += length;
  }
  return fact;
}

Factorization naive_lz_factorize(const Word& word) {
  if (word.empty()) {
    throw EmptyInputError();
  }
  const std::size_t n = word.size();
  Factorization fact(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t best = 0;
    std::size_t best_definition = 0;
    for (std::size_t j = 0; j < i && best < n - i; ++j) {
      std::size_t k = 0;
      while (i + k < n && word[j + k] == word[i + k]) {
        ++k;
      }
      if (k > best) {
        best = k;
        best_definition = j;
      }
    }
    if (best <= 1) {
      ++i;
      continue;
    }
    fact.add_factor(static_cast<Pos>(i), static_cast<Pos>(i + best - 1),
                    static_cast<Pos>(best_definition));
    i += best;
  }
  return fact;
}

std::size_t phrase_count(const Factorization& fact) {
  return fact.factor_count() + fact.free_count();
}

}  // namespace slpz
