#include "slpz/grammar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "slpz/lz77.hpp"
#include "slpz/pairing.hpp"
#include "slpz/replace.hpp"

namespace slpz {

const char* to_string(Check check) {
  switch (check) {
    case Check::Factorization: return "proper factorisation";
    case Check::PairingProperties: return "pairing properties P1-P3";
    case Check::DefinitionGap: return "definition at least two positions left";
    case Check::FreeLetterBound: return "at most 6 new free letters per factor";
    case Check::FactorCount: return "factor count preserved";
    case Check::ShrinkBound: return "length shrinks to (2|w|+1)/3";
    case Check::FreshAccounting: return "fresh letters equal free-letter drop";
    case Check::RoundTrip: return "one-level expansion round trip";
    case Check::PhaseCount: return "phase count bound";
  }
  return "unknown check";
}

InvariantViolation::InvariantViolation(std::size_t phase, Check check,
                                       const std::string& detail)
    : std::logic_error("phase " + std::to_string(phase) + ": " +
                       to_string(check) + ": " + detail),
      phase_(phase),
      check_(check) {}

namespace {

void require(bool ok, std::size_t phase, Check check, const std::string& detail) {
  if (!ok) {
    throw InvariantViolation(phase, check, detail);
  }
}

std::string count_pair(std::size_t a, std::size_t b) {
  return std::to_string(a) + " vs " + std::to_string(b);
}

void check_after_pairing(const Word& word, const PhaseStats& s,
                         const Pairing& marks, const Factorization& fact) {
  const std::size_t p = s.phase;
  const auto violations = validate_pairing(word, fact, marks);
  require(violations.empty(), p, Check::PairingProperties, describe(violations));
  const auto adjacent = adjacent_definitions(fact);
  require(adjacent.empty(), p, Check::DefinitionGap,
          adjacent.empty() ? "" : "factor at " + std::to_string(adjacent.front()));
  require(s.free_created_by_pairing <= 6 * s.factors_before, p,
          Check::FreeLetterBound,
          count_pair(s.free_created_by_pairing, 6 * s.factors_before));
  require(s.max_free_per_factor <= 6, p, Check::FreeLetterBound,
          "one factor created " + std::to_string(s.max_free_per_factor));
  require(s.factors_paired <= s.factors_before, p, Check::FactorCount,
          count_pair(s.factors_paired, s.factors_before));
  require(s.free_paired == s.free_before + s.free_created_by_pairing, p,
          Check::FreeLetterBound,
          count_pair(s.free_paired, s.free_before + s.free_created_by_pairing));
}

void check_after_replace(const Word& before, const Word& after,
                         const Factorization& fact, const PhaseStats& s,
                         const std::vector<Rule>& rules, Symbol alphabet_size,
                         Symbol phase_first, bool dedup) {
  const std::size_t p = s.phase;
  const auto violations = validate_factorization(after, fact);
  require(violations.empty(), p, Check::Factorization, describe(violations));
  require(3 * s.len_after <= 2 * s.len_before + 1, p, Check::ShrinkBound,
          count_pair(s.len_after, s.len_before));
  require(s.factors_after == s.factors_paired, p, Check::FactorCount,
          count_pair(s.factors_after, s.factors_paired));
  const std::size_t drop = s.free_paired - s.free_after;
  require(s.free_paired >= s.free_after &&
              (dedup ? s.fresh_letters <= drop : s.fresh_letters == drop),
          p, Check::FreshAccounting, count_pair(s.fresh_letters, drop));

  std::size_t k = 0;
  for (std::size_t q = 0; q < after.size(); ++q) {
    const Symbol c = after[q];
    if (c >= phase_first) {
      const Rule& r = rules[c - alphabet_size];
      require(k + 1 < before.size() && before[k] == r.left &&
                  before[k + 1] == r.right,
              p, Check::RoundTrip, "at output position " + std::to_string(q));
      k += 2;
    } else {
      require(k < before.size() && before[k] == c, p, Check::RoundTrip,
              "at output position " + std::to_string(q));
      k += 1;
    }
  }
  require(k == before.size(), p, Check::RoundTrip, "length");
}

}  // namespace

CompressResult compress(std::span<const std::uint8_t> input,
                        const CompressOptions& options) {
  return compress_word(Word(input.begin(), input.end()), 256, options);
}

CompressResult compress_word(const Word& input, Symbol alphabet_size,
                             const CompressOptions& options) {
  if (input.empty()) {
    throw EmptyInputError();
  }
  if (input.size() > kMaxInputLength) {
    throw std::length_error("input longer than 2^31 - 1 letters");
  }
  if (alphabet_size == 0 ||
      std::any_of(input.begin(), input.end(),
                  [&](Symbol c) { return c >= alphabet_size; })) {
    throw std::invalid_argument("letter outside the alphabet");
  }

  CompressResult out;
  out.input_length = input.size();
  out.slp.alphabet_size = alphabet_size;

  Word word = input;
  Factorization fact = lz_factorize(word);
  out.lz_phrases = phrase_count(fact);
  FreshAllocator fresh(alphabet_size);

  while (word.size() > 1) {
    PhaseStats s;
    s.phase = out.stats.size();
    s.len_before = word.size();
    s.factors_before = fact.factor_count();
    s.free_before = fact.free_count();

    PairingResult paired = find_pairing(word, std::move(fact));
    if (options.pairing_hook) {
      options.pairing_hook(s.phase, paired.marks);
    }
    s.free_created_by_pairing = paired.free_created;
    s.max_free_per_factor = paired.max_created_per_factor;
    s.factors_paired = paired.fact.factor_count();
    s.free_paired = paired.fact.free_count();
    if (options.verify) {
      check_after_pairing(word, s, paired.marks, paired.fact);
    }

    const Symbol phase_first = fresh.next();
    ReplaceResult next = replace_pairs(word, paired.fact, paired.marks,
                                       out.slp.rules, fresh, options.dedup);
    s.len_after = next.word.size();
    s.factors_after = next.fact.factor_count();
    s.free_after = next.fact.free_count();
    s.fresh_letters = next.fresh_count;
    if (options.verify) {
      check_after_replace(word, next.word, next.fact, s, out.slp.rules,
                          alphabet_size, phase_first, options.dedup);
    }
    if (options.trace) {
      options.trace(s);
    }
    out.stats.push_back(s);
    word = std::move(next.word);
    fact = std::move(next.fact);
  }

  out.slp.start = word.front();
  if (options.verify) {
    require(out.stats.size() <= phase_bound(input.size()), out.stats.size(),
            Check::PhaseCount,
            count_pair(out.stats.size(), phase_bound(input.size())));
  }
  return out;
}

void validate_slp(const Slp& slp) {
  if (slp.alphabet_size == 0) {
    throw SlpError(SlpError::npos, "empty alphabet");
  }
  for (std::size_t k = 0; k < slp.rules.size(); ++k) {
    const Rule& r = slp.rules[k];
    const std::uint64_t expected = std::uint64_t{slp.alphabet_size} + k;
    if (r.lhs != expected) {
      throw SlpError(k, "id gap: rule defines " + std::to_string(r.lhs) +
                            ", expected " + std::to_string(expected));
    }
    if (r.left >= r.lhs || r.right >= r.lhs) {
      throw SlpError(k, "forward reference in rule for " + std::to_string(r.lhs));
    }
  }
  if (std::uint64_t{slp.start} >= slp.alphabet_size + slp.rules.size()) {
    throw SlpError(SlpError::npos,
                   "undefined start symbol " + std::to_string(slp.start));
  }
}

namespace {

std::vector<std::uint64_t> symbol_lengths(const Slp& slp) {
  std::vector<std::uint64_t> lengths(slp.rules.size());
  auto length_of = [&](Symbol s) -> std::uint64_t {
    return s < slp.alphabet_size ? 1 : lengths[s - slp.alphabet_size];
  };
  for (std::size_t k = 0; k < slp.rules.size(); ++k) {
    const std::uint64_t a = length_of(slp.rules[k].left);
    const std::uint64_t b = length_of(slp.rules[k].right);
    if (a > std::numeric_limits<std::uint64_t>::max() - b) {
      throw SlpError(k, "expanded length overflows");
    }
    lengths[k] = a + b;
  }
  return lengths;
}

}  // namespace

std::uint64_t expanded_length(const Slp& slp) {
  validate_slp(slp);
  if (slp.start < slp.alphabet_size) {
    return 1;
  }
  return symbol_lengths(slp)[slp.start - slp.alphabet_size];
}

Word expand_word(const Slp& slp) {
  const std::uint64_t length = expanded_length(slp);
  if (length > kMaxInputLength) {
    throw SlpError(SlpError::npos, "expanded length too large");
  }
  Word out;
  out.reserve(static_cast<std::size_t>(length));
  std::vector<Symbol> stack{slp.start};
  while (!stack.empty()) {
    const Symbol s = stack.back();
    stack.pop_back();
    if (s < slp.alphabet_size) {
      out.push_back(s);
      continue;
    }
    const Rule& r = slp.rules[s - slp.alphabet_size];
    stack.push_back(r.right);
    stack.push_back(r.left);
  }
  return out;
}

std::vector<std::uint8_t> expand(const Slp& slp) {
  if (slp.alphabet_size > 256) {
    throw SlpError(SlpError::npos, "alphabet larger than a byte");
  }
  const Word word = expand_word(slp);
  return {word.begin(), word.end()};
}

std::size_t phase_bound(std::size_t n) {
  std::size_t k = 0;
  for (double power = 1.0; power < static_cast<double>(n); power *= 1.5) {
    ++k;
  }
  return k + 1;
}

double size_scale(std::size_t lz_phrases, std::size_t n) {
  if (lz_phrases == 0) {
    return 0.0;
  }
  const double l = static_cast<double>(lz_phrases);
  return l * (1.0 + std::log2(std::max(static_cast<double>(n) / l, 2.0)));
}

double rule_count_bound(std::size_t lz_phrases, std::size_t n) {
  if (lz_phrases == 0) {
    return 0.0;
  }
  const double l = static_cast<double>(lz_phrases);
  return 6.0 * l * (2.0 + std::log2(std::max(static_cast<double>(n) / l, 2.0))) + l;
}

GrammarReport grammar_report(const Slp& slp, const std::vector<PhaseStats>& stats,
                             std::size_t lz_phrases, std::size_t n) {
  GrammarReport r;
  r.n = n;
  r.lz_phrases = lz_phrases;
  r.phases = stats.size();
  r.rules = slp.rules.size();

  std::vector<bool> used(slp.alphabet_size, false);
  auto mark = [&](Symbol s) {
    if (s < slp.alphabet_size) {
      used[s] = true;
    }
  };
  mark(slp.start);
  for (const Rule& rule : slp.rules) {
    mark(rule.left);
    mark(rule.right);
  }
  r.distinct_terminals = static_cast<std::size_t>(std::count(used.begin(), used.end(), true));
  r.cnf_nonterminals = r.rules + r.distinct_terminals;

  for (const PhaseStats& s : stats) {
    r.free_letters_created += s.free_created_by_pairing;
    r.max_free_per_factor = std::max(r.max_free_per_factor, s.max_free_per_factor);
  }
  const double scale = size_scale(lz_phrases, n);
  r.ratio = scale > 0.0 ? static_cast<double>(r.rules) / scale : 0.0;
  r.rule_bound = rule_count_bound(lz_phrases, n);
  r.phase_bound = phase_bound(n);
  return r;
}

}  // namespace slpz
