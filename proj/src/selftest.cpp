#include "slpz/selftest.hpp"

#include <cstdio>
#include <random>
#include <sstream>

#include "slpz/grammar.hpp"
#include "slpz/lz77.hpp"

namespace slpz {

namespace {

constexpr std::size_t kNaiveLimit = 4000;

void break_first_pair(std::size_t phase, Pairing& marks) {
  if (phase != 0) {
    return;
  }
  for (std::size_t i = 0; i + 1 < marks.size(); ++i) {
    if (marks[i] == Mark::First) {
      marks[i] = Mark::Unpaired;
      marks[i + 1] = Mark::Unpaired;
      return;
    }
  }
}

SelftestFailure failure(const Word& word, std::string phase, std::string invariant,
                        std::string detail) {
  return {render_word(word), std::move(phase), std::move(invariant), std::move(detail)};
}

}  // namespace

std::string render_word(const Word& word) {
  std::string out;
  for (Symbol c : word) {
    if (c >= 0x20 && c < 0x7f && c != '\\' && c != '"') {
      out += static_cast<char>(c);
    } else {
      char buf[16];
      std::snprintf(buf, sizeof buf, c < 256 ? "\\x%02x" : "\\u{%x}", c);
      out += buf;
    }
  }
  return out;
}

std::optional<SelftestFailure> check_input(const Word& word, Symbol alphabet_size,
                                           bool inject_fault) {
  const Factorization lz = lz_factorize(word);
  if (auto v = validate_factorization(word, lz); !v.empty()) {
    return failure(word, "-", "lz77 factorisation is proper", describe(v));
  }
  if (word.size() <= kNaiveLimit && lz != naive_lz_factorize(word)) {
    return failure(word, "-", "lz77 oracle equivalence",
                   "suffix-array and naive factorisations differ");
  }

  for (const bool dedup : {false, true}) {
    CompressOptions options;
    options.dedup = dedup;
    if (inject_fault) {
      options.pairing_hook = break_first_pair;
    }
    CompressResult result;
    try {
      result = compress_word(word, alphabet_size, options);
    } catch (const InvariantViolation& e) {
      return failure(word, std::to_string(e.phase()), to_string(e.check()), e.what());
    } catch (const std::exception& e) {
      return failure(word, "-", "compression succeeds", e.what());
    }
    if (expand_word(result.slp) != word) {
      return failure(word, "-", "round trip", dedup ? "dedup on" : "dedup off");
    }
    const double bound = rule_count_bound(result.lz_phrases, word.size());
    if (static_cast<double>(result.slp.rules.size()) > bound) {
      return failure(word, "-", "rule count bound",
                     std::to_string(result.slp.rules.size()) + " rules");
    }
  }
  return std::nullopt;
}

SelftestReport run_selftest(const SelftestOptions& options) {
  SelftestReport report;
  if (options.limit == 0) {
    return report;
  }

  auto record = [&](SelftestSuite& suite, const Word& word, Symbol alphabet) {
    ++suite.cases;
    if (auto f = check_input(word, alphabet, options.inject_fault)) {
      ++suite.failures;
      if (!report.first_failure) {
        report.first_failure = std::move(f);
      }
    }
  };

  SelftestSuite exhaustive{"exhaustive binary, length <= " + std::to_string(options.limit)};
  for (std::size_t len = 1; len <= options.limit && len < 40; ++len) {
    Word word(len);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      for (std::size_t k = 0; k < len; ++k) {
        word[k] = 'a' + ((bits >> (len - 1 - k)) & 1);
      }
      record(exhaustive, word, 256);
    }
  }
  report.suites.push_back(exhaustive);

  SelftestSuite random{"random, seed " + std::to_string(options.seed)};
  std::mt19937_64 rng(options.seed);
  constexpr Symbol kAlphabets[] = {2, 4, 26, 256};
  for (std::size_t c = 0; c < options.random_cases; ++c) {
    const Symbol sigma = kAlphabets[c % 4];
    const std::size_t len = 1 + rng() % options.random_max_length;
    Word word(len);
    for (Symbol& s : word) {
      const auto r = static_cast<Symbol>(rng() % sigma);
      s = sigma == 256 ? r : 'a' + r;
    }
    record(random, word, 256);
  }
  report.suites.push_back(random);
  return report;
}

std::string SelftestReport::summary() const {
  std::ostringstream out;
  char line[128];
  std::snprintf(line, sizeof line, "%-36s %10s %10s\n", "suite", "cases", "failures");
  out << line;
  std::size_t total = 0;
  for (const SelftestSuite& s : suites) {
    std::snprintf(line, sizeof line, "%-36s %10zu %10zu\n", s.name.c_str(), s.cases,
                  s.failures);
    out << line;
    total += s.cases;
  }
  std::snprintf(line, sizeof line, "%-36s %10zu\n", "total", total);
  out << line;
  if (first_failure) {
    out << "first failure: word \"" << first_failure->word << "\" phase "
        << first_failure->phase << ": " << first_failure->invariant << " ("
        << first_failure->detail << ")\n";
  }
  out << "result: " << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace slpz
