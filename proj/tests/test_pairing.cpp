#include <doctest.h>

#include <random>

#include "slpz/lz77.hpp"
#include "slpz/pairing.hpp"
#include "test_support.hpp"

using namespace slpz;
using namespace slpz::testing;

namespace {

// Full postcondition suite for one sweep.
void check_postconditions(const Word& w, const Factorization& in, const PairingResult& r) {
  INFO("word " << to_string(w) << " marks " << marks_string(r.marks));
  const std::size_t n = w.size();
  REQUIRE(validate_pairing(w, r.fact, r.marks).empty());
  REQUIRE(pairing_oracle(w, r.fact, r.marks));
  CHECK(r.fact.factor_count() <= in.factor_count());
  CHECK(r.free_created <= 6 * in.factor_count());
  CHECK(r.max_created_per_factor <= 6);
  CHECK(r.fact.free_count() == in.free_count() + r.free_created);
  CHECK(adjacent_definitions(r.fact).empty());
  CHECK(r.steps <= 2 * n);

  std::size_t pairs = 0;
  for (Mark m : r.marks) pairs += m == Mark::First;
  CHECK(3 * pairs >= n - 1);

  // Each surviving factor descends from an input factor: same or trimmed
  // span, definition shifted with it (or, after a run split, two to the left).
  const auto before = in.factors();
  for (const Factor& g : r.fact.factors()) {
    const auto parent = std::find_if(before.begin(), before.end(), [&](const Factor& f) {
      return f.begin <= g.begin && g.end <= f.end;
    });
    REQUIRE(parent != before.end());
    const auto old_offset = static_cast<long>(parent->definition) - static_cast<long>(parent->begin);
    const auto new_offset = static_cast<long>(g.definition) - static_cast<long>(g.begin);
    CHECK((new_offset == old_offset || (old_offset == -1 && new_offset == -2)));
  }
}

}  // namespace

TEST_CASE("find_pairing hand-traced examples") {
  SUBCASE("abab keeps its factor") {
    const Factorization in = lz_factorize(to_word("abab"));
    const PairingResult r = find_pairing(to_word("abab"), in);
    CHECK(marks_string(r.marks) == "FSFS");
    CHECK(r.fact == in);
    CHECK(r.free_created == 0);
  }
  SUBCASE("aaaa splits the run") {
    const Factorization in = Factorization::from_factors(4, {{1, 3, 0}});
    const PairingResult r = find_pairing(to_word("aaaa"), in);
    CHECK(marks_string(r.marks) == "FSFS");
    CHECK(r.fact.factors() == std::vector<Factor>{{2, 3, 0}});
    CHECK(r.free_created == 1);
  }
  SUBCASE("single letter") {
    const PairingResult r = find_pairing(to_word("a"), Factorization(1));
    CHECK(marks_string(r.marks) == "U");
    CHECK(r.free_created == 0);
  }
  SUBCASE("aba all free") {
    const PairingResult r = find_pairing(to_word("aba"), Factorization(3));
    CHECK(marks_string(r.marks) == "FSU");
  }
  SUBCASE("bad left end shifts the definition, then the one-letter rest is demoted") {
    // abcbc: factor [3..4] def 1, but position 1 is the second of a pair.
    const Factorization in = Factorization::from_factors(5, {{3, 4, 1}});
    const PairingResult r = find_pairing(to_word("abcbc"), in);
    CHECK(marks_string(r.marks) == "FSFSU");
    CHECK(r.fact.factor_count() == 0);
    CHECK(r.free_created == 2);
    CHECK(r.created_per_factor == std::vector<std::size_t>{2});
  }
  SUBCASE("right end trimmed to a full pair") {
    // abcdabc: copying FSF from the definition ends on a First.
    const Factorization in = Factorization::from_factors(7, {{4, 6, 0}});
    const PairingResult r = find_pairing(to_word("abcdabc"), in);
    CHECK(marks_string(r.marks) == "FSFSFSU");
    CHECK(r.fact.factors() == std::vector<Factor>{{4, 5, 0}});
    CHECK(r.free_created == 1);
  }
  SUBCASE("two-letter run becomes two free letters") {
    const Factorization in = Factorization::from_factors(3, {{1, 2, 0}});
    const PairingResult r = find_pairing(to_word("aaa"), in);
    CHECK(marks_string(r.marks) == "FSU");
    CHECK(r.fact.factor_count() == 0);
    CHECK(r.created_per_factor == std::vector<std::size_t>{2});
  }
  SUBCASE("one-letter factor is demoted") {
    const Factorization in = Factorization::from_factors(3, {{2, 2, 0}});
    const PairingResult r = find_pairing(to_word("aba"), in);
    CHECK(marks_string(r.marks) == "FSU");
    CHECK(r.fact.factor_count() == 0);
    CHECK(r.free_created == 1);
  }
}

TEST_CASE("find_pairing rejects invalid factorisations") {
  CHECK_THROWS_AS(find_pairing(to_word("ab"), Factorization::from_factors(2, {{1, 1, 1}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(find_pairing(to_word("ab"), Factorization::from_factors(2, {{1, 1, 0}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(find_pairing(Word{}, Factorization{}), EmptyInputError);
}

TEST_CASE("find_pairing postconditions on all binary words up to 12") {
  for (std::size_t len = 1; len <= 12; ++len) {
    for (const Word& w : binary_words(len)) {
      const Factorization in = lz_factorize(w);
      check_postconditions(w, in, find_pairing(w, in));
    }
  }
}

TEST_CASE("find_pairing postconditions on random valid factorisations") {
  std::mt19937_64 rng(2024);
  std::size_t max_seen = 0;
  for (int round = 0; round < 100000; ++round) {
    const std::size_t n = 1 + rng() % 40;
    const Word w = round % 2 == 0 ? adversarial_word(rng, n) : random_word(rng, n, 2);
    const Factorization in = random_factorization(w, rng, 0.6);
    const PairingResult r = find_pairing(w, in);
    check_postconditions(w, in, r);
    max_seen = std::max(max_seen, r.max_created_per_factor);
  }
  MESSAGE("largest per-factor free-letter count observed: " << max_seen);
  CHECK(max_seen <= 6);
}

TEST_CASE("find_pairing is deterministic") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 200; ++round) {
    const Word w = adversarial_word(rng, 1 + rng() % 200);
    const Factorization in = random_factorization(w, rng, 0.5);
    const PairingResult a = find_pairing(w, in);
    const PairingResult b = find_pairing(w, in);
    CHECK(a.marks == b.marks);
    CHECK(a.fact == b.fact);
    CHECK(a.free_created == b.free_created);
  }
}
