#include "slpz/replace.hpp"

#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace slpz {

Symbol FreshAllocator::allocate() {
  if (next_ == std::numeric_limits<Symbol>::max()) {
    throw std::overflow_error("fresh symbol ids exhausted");
  }
  return next_++;
}

ReplaceResult replace_pairs(const Word& word, const Factorization& fact,
                            const Pairing& pairing, std::vector<Rule>& rules,
                            FreshAllocator& fresh, bool dedup) {
  if (word.empty()) {
    throw EmptyInputError();
  }
  if (const auto violations = validate_pairing(word, fact, pairing);
      !violations.empty()) {
    throw std::invalid_argument("pairing rejected: " + describe(violations));
  }

  const std::size_t n = word.size();
  ReplaceResult out;
  out.word.reserve((2 * n + 1) / 3);
  out.pos_map.assign(n, kNoPos);
  std::vector<Pos> begin_out;
  std::vector<std::uint8_t> end_out;
  begin_out.reserve((2 * n + 1) / 3);
  end_out.reserve((2 * n + 1) / 3);

  std::unordered_map<std::uint64_t, Symbol> seen;

  auto emit = [&](Symbol s) {
    out.word.push_back(s);
    begin_out.push_back(kNoPos);
    end_out.push_back(0);
  };

  std::size_t i = 0;
  while (i < n) {
    if (fact.is_begin(i)) {
      // Copy the already compressed definition.
      const Pos definition = out.pos_map[fact.definition(i)];
      const std::size_t first = out.word.size();
      std::size_t source = definition;
      do {
        out.pos_map[i] = static_cast<Pos>(out.word.size());
        emit(out.word[source]);
        ++source;
        i += pairing[i] == Mark::First ? 2 : 1;
      } while (!fact.is_end(i - 1));
      begin_out[first] = definition;
      end_out.back() = 1;
    }
    if (i < n && !fact.is_begin(i)) {
      out.pos_map[i] = static_cast<Pos>(out.word.size());
      if (pairing[i] == Mark::Unpaired) {
        emit(word[i]);
        ++i;
        continue;
      }
      const Symbol left = word[i];
      const Symbol right = word[i + 1];
      Symbol letter = 0;
      const std::uint64_t key = (std::uint64_t{left} << 32) | right;
      if (auto it = seen.find(key); dedup && it != seen.end()) {
        letter = it->second;
      } else {
        letter = fresh.allocate();
        rules.push_back({letter, left, right});
        ++out.fresh_count;
        if (dedup) {
          seen.emplace(key, letter);
        }
      }
      emit(letter);
      i += 2;
    }
  }

  out.fact = Factorization(out.word.size());
  for (std::size_t k = 0; k < out.word.size(); ++k) {
    if (begin_out[k] != kNoPos) {
      out.fact.set_begin(k, begin_out[k]);
    }
    out.fact.set_end(k, end_out[k] != 0);
  }
  return out;
}

}  // namespace slpz
