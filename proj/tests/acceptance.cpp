// Acceptance gate: prints one PASS/FAIL line per criterion and exits non-zero
// if any hard criterion fails.
//
//   acceptance [real-file]
//
// The optional argument names a file of at least 1 MiB for the real-data
// round trip; without it a system file is used.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "slpz/grammar.hpp"
#include "slpz/lz77.hpp"
#include "slpz/pairing.hpp"
#include "slpz/replace.hpp"
#include "slpz/slpz_format.hpp"
#include "test_support.hpp"

using namespace slpz;
using namespace slpz::testing;

namespace {

constexpr std::size_t kMiB = std::size_t{1} << 20;

struct Tally {
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::string first;

  void check(bool ok, const std::string& label, const std::string& what) {
    ++cases;
    if (!ok) {
      if (violations == 0) {
        first = label + ": " + what;
      }
      ++violations;
    }
  }
  [[nodiscard]] bool passed() const { return violations == 0; }
};

std::array<Tally, 10> tally;  // index = criterion number
std::map<Check, std::size_t> library_violations;

std::string shorten(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < std::min<std::size_t>(w.size(), 24); ++k) {
    const Symbol c = w[k];
    s += (c >= 'a' && c <= 'z') ? static_cast<char>(c) : '?';
  }
  if (w.size() > 24) s += "...(" + std::to_string(w.size()) + ")";
  return s;
}

int criterion_for(Check check) {
  switch (check) {
    case Check::Factorization:
    case Check::PairingProperties:
    case Check::DefinitionGap:
      return 3;
    case Check::FreeLetterBound:
      return 4;
    case Check::FactorCount:
    case Check::ShrinkBound:
    case Check::FreshAccounting:
      return 5;
    case Check::PhaseCount:
      return 6;
    case Check::RoundTrip:
      return 1;
  }
  return 1;
}

struct Audit {
  std::size_t n = 0;
  std::size_t lz_phrases = 0;
  std::size_t rules = 0;
  std::size_t phases = 0;
  double ratio = 0.0;
};

// Runs the phase loop by hand over the public building blocks, checking
// every phase against the test-side oracles, then cross-checks the library's
// own compress() (with its internal verification) against the result.
Audit audit(const Word& w, const std::string& label, bool with_dedup, bool with_format) {
  Audit a;
  a.n = w.size();
  Factorization fact = lz_factorize(w);
  a.lz_phrases = phrase_count(fact);
  tally[3].check(proper_factorization_oracle(w, fact), label, "LZ77 factorisation not proper");

  Word word = w;
  std::vector<Rule> rules;
  FreshAllocator fresh(256);
  while (word.size() > 1) {
    const std::size_t phase = a.phases;
    const std::string where = label + " phase " + std::to_string(phase);
    const std::size_t len_before = word.size();
    const std::size_t factors_before = fact.factor_count();
    const std::size_t free_before = fact.free_count();

    const PairingResult p = find_pairing(word, fact);
    tally[3].check(validate_pairing(word, p.fact, p.marks).empty() &&
                       pairing_oracle(word, p.fact, p.marks),
                   where, "P1-P3 violated: " + describe(validate_pairing(word, p.fact, p.marks)));

    const std::size_t created = p.fact.free_count() - free_before;
    const std::size_t per_factor =
        p.created_per_factor.empty()
            ? 0
            : *std::max_element(p.created_per_factor.begin(), p.created_per_factor.end());
    tally[4].check(created == p.free_created, where, "reported free-letter count disagrees");
    tally[4].check(created <= 6 * factors_before, where,
                   std::to_string(created) + " free letters for " +
                       std::to_string(factors_before) + " factors");
    tally[4].check(per_factor <= 6, where,
                   std::to_string(per_factor) + " free letters from one factor");

    const std::size_t rules_before = rules.size();
    const ReplaceResult r = replace_pairs(word, p.fact, p.marks, rules, fresh, false);
    const std::size_t drop = p.fact.free_count() - r.fact.free_count();
    tally[5].check(3 * r.word.size() <= 2 * len_before + 1, where,
                   "length " + std::to_string(len_before) + " -> " +
                       std::to_string(r.word.size()));
    tally[5].check(r.fact.factor_count() == p.fact.factor_count(), where,
                   "factor count changed by replacement");
    tally[5].check(r.fresh_count == drop && rules.size() - rules_before == drop, where,
                   "fresh letters " + std::to_string(r.fresh_count) + " vs drop " +
                       std::to_string(drop));
    tally[3].check(proper_factorization_oracle(r.word, r.fact), where,
                   "replacement broke the factorisation");

    word = r.word;
    fact = r.fact;
    ++a.phases;
  }
  const Slp driver{256, rules, word.front()};
  a.rules = rules.size();
  a.ratio = a.n > 1 ? static_cast<double>(a.rules) / size_scale(a.lz_phrases, a.n) : 0.0;

  tally[1].check(expand_word(driver) == w, label, "driver grammar does not expand to input");
  tally[6].check(a.phases <= phase_bound(a.n), label,
                 std::to_string(a.phases) + " phases, bound " +
                     std::to_string(phase_bound(a.n)));
  tally[7].check(static_cast<double>(a.rules) <= rule_count_bound(a.lz_phrases, a.n), label,
                 std::to_string(a.rules) + " rules, bound " +
                     std::to_string(rule_count_bound(a.lz_phrases, a.n)));

  // The library path, with its own per-phase verification switched on.
  try {
    const CompressResult c = compress_word(w, 256);
    tally[1].check(c.slp.rules == driver.rules && c.slp.start == driver.start, label,
                   "compress() differs from the phase-by-phase driver");
    tally[1].check(expand_word(c.slp) == w, label, "compress() does not round-trip");
    for (const PhaseStats& s : c.stats) {
      const std::string where = label + " phase " + std::to_string(s.phase) + " (stats)";
      tally[4].check(s.free_created_by_pairing <= 6 * s.factors_before &&
                         s.max_free_per_factor <= 6,
                     where, "free-letter bound");
      tally[5].check(3 * s.len_after <= 2 * s.len_before + 1, where, "shrink bound");
      tally[5].check(s.factors_after == s.factors_paired, where, "factor count");
      tally[5].check(s.free_paired == s.free_before + s.free_created_by_pairing &&
                         s.fresh_letters == s.free_paired - s.free_after,
                     where, "fresh-letter accounting");
    }
    if (with_format) {
      const std::string text = write_slpz(c.slp);
      const SlpzFile f = parse_slpz(text);
      const auto bytes = expand(f.slp);
      tally[9].check(write_slpz(f.slp) == text && f.length == w.size() &&
                         std::equal(bytes.begin(), bytes.end(), w.begin(), w.end()),
                     label, "SLPZ round trip not byte-exact");
    }
  } catch (const InvariantViolation& e) {
    ++library_violations[e.check()];
    tally[criterion_for(e.check())].check(false, label, e.what());
  } catch (const std::exception& e) {
    tally[1].check(false, label, std::string("compress() threw: ") + e.what());
  }

  if (with_dedup) {
    try {
      CompressOptions options;
      options.dedup = true;
      const CompressResult d = compress_word(w, 256, options);
      tally[1].check(expand_word(d.slp) == w, label + " (dedup)", "no round trip");
      tally[7].check(d.slp.rules.size() <= a.rules, label + " (dedup)", "dedup grew the grammar");
    } catch (const InvariantViolation& e) {
      ++library_violations[e.check()];
      tally[criterion_for(e.check())].check(false, label + " (dedup)", e.what());
    } catch (const std::exception& e) {
      tally[1].check(false, label + " (dedup)", std::string("compress() threw: ") + e.what());
    }
  }
  return a;
}

struct Family {
  explicit Family(std::string family_name) : name(std::move(family_name)) {}

  std::string name;
  std::size_t words = 0;
  std::size_t letters = 0;
  double max_ratio = 0.0;
  Audit worst;

  void add(const Audit& a) {
    ++words;
    letters += a.n;
    if (a.ratio >= max_ratio) {
      max_ratio = a.ratio;
      worst = a;
    }
  }
};

std::vector<std::string> report_lines;

void report(const std::string& line) { report_lines.push_back(line); }

std::string fixed(double v, int digits = 3) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

void report_audit(const std::string& name, const Audit& a) {
  report("  " + name + ": N=" + std::to_string(a.n) + " l=" + std::to_string(a.lz_phrases) +
         " rules=" + std::to_string(a.rules) + " phases=" + std::to_string(a.phases) +
         " ratio=" + fixed(a.ratio) + " bound=" + fixed(rule_count_bound(a.lz_phrases, a.n), 0));
}

void report_family(const Family& f) {
  report("  " + f.name + ": " + std::to_string(f.words) + " words, " +
         std::to_string(f.letters) + " letters, max ratio " + fixed(f.max_ratio) +
         " (N=" + std::to_string(f.worst.n) + " l=" + std::to_string(f.worst.lz_phrases) +
         " rules=" + std::to_string(f.worst.rules) + ")");
}

std::optional<std::vector<std::uint8_t>> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>());
}

// A real file of at least 1 MiB: the named file, else a known large system
// text file, else system headers concatenated until 1 MiB is reached.
std::pair<std::string, std::vector<std::uint8_t>> real_file(int argc, char** argv) {
  std::vector<std::filesystem::path> candidates;
  if (argc > 1) candidates.emplace_back(argv[1]);
  candidates.emplace_back("/usr/share/perl/5.34.0/Unicode/Collate/allkeys.txt");
  for (const auto& path : candidates) {
    std::error_code ec;
    if (std::filesystem::file_size(path, ec) >= kMiB && !ec) {
      if (auto data = read_file(path)) return {path.string(), std::move(*data)};
    }
  }
  std::vector<std::uint8_t> data;
  std::vector<std::filesystem::path> headers;
  std::error_code ec;
  for (const auto& entry : std::filesystem::recursive_directory_iterator("/usr/include", ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".h") headers.push_back(entry.path());
  }
  std::sort(headers.begin(), headers.end());
  for (const auto& path : headers) {
    if (data.size() >= kMiB) break;
    if (auto chunk = read_file(path)) data.insert(data.end(), chunk->begin(), chunk->end());
  }
  return {"/usr/include/**/*.h (concatenated)", std::move(data)};
}

template <typename F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string format_error(std::string_view text) {
  try {
    parse_slpz(text);
  } catch (const FormatError& e) {
    return e.what();
  }
  return "(accepted)";
}

bool print(int number, bool ok, const std::string& title, const std::string& detail,
           bool soft = false) {
  std::cout << (ok ? "PASS" : (soft ? "WARN" : "FAIL")) << "  criterion " << number << ": "
            << title;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << '\n';
  return ok || soft;
}

std::string tally_detail(const Tally& t, const std::string& unit) {
  std::string s = std::to_string(t.cases) + " " + unit + ", " + std::to_string(t.violations) +
                  " violations";
  if (!t.passed()) s += "; first: " + t.first;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  std::mt19937_64 rng(20240601);
  const auto wall_start = std::chrono::steady_clock::now();

  // 1(a) all binary words up to 14, exhaustively.
  Family binary{"binary words, length 1..14"};
  for (std::size_t len = 1; len <= 14; ++len) {
    for (const Word& w : binary_words(len)) binary.add(audit(w, shorten(w), len <= 10, len <= 8));
  }

  // 1(b) 10^4 seeded random words over alphabets {2, 4, 26, 256}.
  const std::array<Symbol, 4> alphabets{2, 4, 26, 256};
  std::vector<Family> random_families;
  for (Symbol sigma : alphabets) random_families.emplace_back("random, sigma " + std::to_string(sigma));
  for (int k = 0; k < 10000; ++k) {
    const std::size_t family = static_cast<std::size_t>(k) % alphabets.size();
    const std::size_t n = 1 + rng() % 10000;
    const Word w = random_word(rng, n, alphabets[family]);
    random_families[family].add(audit(w, "random#" + std::to_string(k) + " sigma " +
                                             std::to_string(alphabets[family]) + " n " +
                                             std::to_string(n),
                                      k % 10 == 0, k % 10 == 0));
  }

  // 1(c) runs and Fibonacci words up to 10^6.
  std::vector<std::pair<std::string, Audit>> structured;
  for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3}, std::size_t{10},
                        std::size_t{1000}, std::size_t{100000}, std::size_t{1000000}}) {
    const Word run(n, 'a');
    structured.emplace_back("a^" + std::to_string(n), audit(run, "a^" + std::to_string(n), true, true));
  }
  const Word run20(kMiB, 'a');
  const Audit a20 = audit(run20, "a^(2^20)", true, true);
  structured.emplace_back("a^(2^20)", a20);
  for (std::size_t n : {std::size_t{10}, std::size_t{1000}, std::size_t{100000},
                        std::size_t{1000000}}) {
    Word fib = fibonacci_word(n);
    fib.resize(n);
    structured.emplace_back("fibonacci " + std::to_string(n),
                            audit(fib, "fibonacci " + std::to_string(n), true, true));
  }

  // 1(d) one real file of at least 1 MiB.
  const auto [real_name, real_bytes] = real_file(argc, argv);
  const bool real_ok = real_bytes.size() >= kMiB;
  tally[1].check(real_ok, "real file", "no file of at least 1 MiB found");
  Audit real_audit;
  if (real_ok) {
    const Word w(real_bytes.begin(), real_bytes.end());
    real_audit = audit(w, real_name, true, true);
    structured.emplace_back("real file " + real_name, real_audit);
  }

  // 2. LZ77 against the quadratic reference.
  for (std::size_t len = 1; len <= 12; ++len) {
    for (const Word& w : binary_words(len)) {
      tally[2].check(lz_factorize(w) == naive_lz_factorize(w), shorten(w), "factorisations differ");
    }
  }
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = 1 + rng() % 2000;
    const Word w = k % 2 == 0 ? random_word(rng, n, alphabets[(k / 2) % alphabets.size()])
                              : adversarial_word(rng, n);
    tally[2].check(lz_factorize(w) == naive_lz_factorize(w), "lz-random#" + std::to_string(k),
                   "factorisations differ");
  }

  // 8. Scaling: 2^20 vs 2^21 random letters, best of three each.
  const auto best_of_three = [](const Word& w) {
    double best = 1e300;
    for (int k = 0; k < 3; ++k) best = std::min(best, seconds([&] { (void)compress_word(w, 256); }));
    return best;
  };
  std::mt19937_64 timing_rng(7);
  const Word small = random_word(timing_rng, kMiB, 26);
  const Word large = random_word(timing_rng, 2 * kMiB, 26);
  const double t_small = best_of_three(small);
  const double t_large = best_of_three(large);
  const double scaling = t_large / t_small;
  double t_real = 0.0;
  if (real_ok) {
    const std::vector<std::uint8_t> mib(real_bytes.begin(), real_bytes.begin() + kMiB);
    t_real = seconds([&] { (void)compress(mib); });
  }

  // 9. Format: the documented example byte for byte, and malformed files.
  const std::vector<std::uint8_t> abab{'a', 'b', 'a', 'b'};
  const std::string abab_text = write_slpz(compress(abab).slp);
  tally[9].check(abab_text ==
                     "SLPZ 1\nalphabet 256\nlength 4\nstart 257\nrules 2\n256 97 98\n257 256 256\n",
                 "abab", "unexpected SLPZ text");
  const std::vector<std::pair<std::string, std::string>> malformed{
      {"ZPLS 1\nalphabet 256\nlength 4\nstart 257\nrules 2\n256 97 98\n257 256 256\n",
       "line 1: bad magic"},
      {"SLPZ 1\nalphabet 256\nlength 2\nstart 256\nrules 1\n256 300 97\n",
       "line 6: forward reference to 300"},
      {"SLPZ 1\nalphabet 256\nlength 4\nstart 258\nrules 2\n256 97 98\n258 256 256\n",
       "line 7: id gap: rule defines 258, expected 257"},
      {abab_text.substr(0, abab_text.size() - 1), "line 7: truncated"},
      {abab_text.substr(0, abab_text.find("256 97 98")), "line 6: truncated"},
  };
  for (const auto& [text, expected] : malformed) {
    const std::string got = format_error(text);
    tally[9].check(got == expected, "malformed file", "expected '" + expected + "', got '" + got + "'");
  }

  // Verdicts.
  bool ok = true;
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();

  ok &= print(1, tally[1].passed(), "round trip expand(compress(w)) = w",
              tally_detail(tally[1], "checks") + "; real file " + real_name + " (" +
                  std::to_string(real_bytes.size()) + " bytes)");
  ok &= print(2, tally[2].passed(), "lz_factorize = naive_lz_factorize",
              tally_detail(tally[2], "words"));
  ok &= print(3, tally[3].passed(), "P1-P3 after every find_pairing",
              tally_detail(tally[3], "checks"));
  ok &= print(4, tally[4].passed(), "free letters per phase <= 6m, <= 6 per factor",
              tally_detail(tally[4], "checks"));
  ok &= print(5, tally[5].passed(), "shrink, factor count and fresh-letter accounting",
              tally_detail(tally[5], "checks"));
  ok &= print(6, tally[6].passed(), "phases <= ceil(log_1.5 N) + 1",
              tally_detail(tally[6], "inputs"));

  const bool run_ok = a20.lz_phrases == 2 && a20.rules <= 254;
  ok &= print(7, tally[7].passed() && run_ok, "rules <= 6 l (2 + log2 max(N/l, 2)) + l",
              tally_detail(tally[7], "checks") + "; a^(2^20): l=" +
                  std::to_string(a20.lz_phrases) + " rules=" + std::to_string(a20.rules) +
                  " (limit 254)");
  report_family(binary);
  for (const Family& f : random_families) report_family(f);
  for (const auto& [name, a] : structured) report_audit(name, a);
  for (const auto& line : report_lines) std::cout << line << '\n';

  const bool fast = real_ok && t_real < 10.0;
  ok &= print(8, fast, "1 MiB compresses in under 10 s",
              "1 MiB of " + real_name + ": " + fixed(t_real) + " s");
  print(8, scaling <= 2.6, "time(2^21) / time(2^20) <= 2.6 (soft)",
        fixed(t_small) + " s vs " + fixed(t_large) + " s, ratio " + fixed(scaling, 2), true);

  ok &= print(9, tally[9].passed(), "SLPZ byte-exact round trip and malformed-file errors",
              tally_detail(tally[9], "checks"));

  if (!library_violations.empty()) {
    std::cout << "library invariant violations by check:\n";
    for (const auto& [check, count] : library_violations) {
      std::cout << "  " << to_string(check) << ": " << count << '\n';
    }
  }
  std::cout << "total time " << fixed(elapsed, 1) << " s; overall " << (ok ? "PASS" : "FAIL")
            << '\n';
  return ok ? 0 : 1;
}
