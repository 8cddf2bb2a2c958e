#include "slpz/pairing.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace slpz {

namespace {

[[noreturn]] void sweep_failure(const char* what, std::size_t position) {
  throw std::logic_error(std::string("pairing sweep: ") + what + " at " +
                         std::to_string(position));
}

}  // namespace

PairingResult find_pairing(const Word& word, Factorization fact) {
  if (word.empty()) {
    throw EmptyInputError();
  }
  if (const auto violations = validate_factorization(word, fact);
      !violations.empty()) {
    throw std::invalid_argument("invalid factorisation: " + describe(violations));
  }

  const std::size_t n = word.size();
  PairingResult out;
  out.created_per_factor.assign(fact.factor_count(), 0);
  Pairing& marks = out.marks;
  marks.assign(n, Mark::Unset);
  marks[0] = Mark::Unpaired;
  out.steps = 1;

  // A factor moved one position right by a split keeps its identity.
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::size_t carried_position = kNone;
  std::size_t carried_ordinal = 0;
  std::size_t next_ordinal = 0;

  std::size_t i = 1;
  while (i < n) {
    if (fact.is_begin(i)) {
      const std::size_t ordinal =
          i == carried_position ? carried_ordinal : next_ordinal++;
      std::size_t& created = out.created_per_factor[ordinal];
      const Pos definition = fact.definition(i);

      if (fact.is_end(i)) {
        // One-letter factor: demote to a free letter.
        fact.clear_begin(i);
        fact.set_end(i, false);
        ++created;
      } else if (std::size_t{definition} + 1 == i) {
        // Letter run a^k defined one to the left: w[i] becomes free and the
        // rest of the run keeps the same definition start.
        fact.set_begin(i + 1, definition);
        fact.clear_begin(i);
        ++created;
        carried_position = i + 1;
        carried_ordinal = ordinal;
      } else if (marks[definition] != Mark::First) {
        // Definition starts mid-pair or unpaired: drop the first letter.
        fact.set_begin(i + 1, definition + 1);
        fact.clear_begin(i);
        ++created;
        carried_position = i + 1;
        carried_ordinal = ordinal;
      } else {
        const std::size_t start = i;
        std::size_t j = definition;
        do {
          if (j + 2 > i || marks[j] == Mark::Unset) {
            sweep_failure("definition cursor caught up with the sweep", i);
          }
          marks[i] = marks[j];
          ++i;
          ++j;
          ++out.steps;
        } while (!fact.is_end(i - 1));
        // Trim from the right until the factor ends with a full pair; the
        // trimmed letters are re-read below as free letters.
        while (marks[i - 1] != Mark::Second) {
          --i;
          if (i < start + 2) {
            sweep_failure("right trimming shortened a factor below two letters",
                          start);
          }
          fact.set_end(i - 1, true);
          fact.set_end(i, false);
          marks[i] = Mark::Unset;
          ++created;
        }
      }
    }
    if (i < n && !fact.is_begin(i)) {
      if (marks[i - 1] == Mark::Unpaired) {
        marks[i - 1] = Mark::First;
        marks[i] = Mark::Second;
      } else {
        marks[i] = Mark::Unpaired;
      }
      ++i;
      ++out.steps;
    }
  }

  if (out.steps > 2 * n) {
    sweep_failure("more than two visits per letter", n);
  }
  if (const auto unset = std::find(marks.begin(), marks.end(), Mark::Unset);
      unset != marks.end()) {
    sweep_failure("position left unassigned", unset - marks.begin());
  }
  out.free_created = std::accumulate(out.created_per_factor.begin(),
                                     out.created_per_factor.end(), std::size_t{0});
  if (!out.created_per_factor.empty()) {
    out.max_created_per_factor = *std::max_element(
        out.created_per_factor.begin(), out.created_per_factor.end());
  }
  out.fact = std::move(fact);
  return out;
}

}  // namespace slpz
