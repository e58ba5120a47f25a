#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "milnor4/error.hpp"
#include "milnor4/word.hpp"
#include "support/oracles.hpp"
#include "support/printing.hpp"

using namespace milnor4;

namespace {

Word w3(std::string_view s) { return parse_word(s, 3); }

// Reduces a letter string by cancelling adjacent inverse pairs at random
// positions until none are left.
std::vector<Letter> reduce_randomly(std::vector<Letter> v, std::mt19937& rng) {
  for (;;) {
    std::vector<std::size_t> spots;
    for (std::size_t t = 0; t + 1 < v.size(); ++t)
      if (v[t].gen == v[t + 1].gen && v[t].sign == -v[t + 1].sign)
        spots.push_back(t);
    if (spots.empty()) return v;
    std::uniform_int_distribution<std::size_t> pick(0, spots.size() - 1);
    const auto t = spots[pick(rng)];
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(t),
            v.begin() + static_cast<std::ptrdiff_t>(t + 2));
  }
}

}  // namespace

TEST_SUITE_BEGIN("word");

TEST_CASE("concat reduces at the seam") {
  CHECK(w3("x1") * w3("X1") == Word(3));
  CHECK(w3("x1 x2") * w3("X2 x3") == w3("x1 x3"));
  CHECK(w3("X2 X3") * w3("x3") == w3("X2"));
}

TEST_CASE("invert") {
  CHECK(invert(w3("x1 x2")) == w3("X2 X1"));
  CHECK(invert(Word(3)) == Word(3));
  CHECK(invert(w3("X2 X3")) == w3("x3 x2"));
}

TEST_CASE("commutator") {
  CHECK(commutator(w3("x1"), w3("x2")) == w3("X1 X2 x1 x2"));
  CHECK(commutator(w3("x1"), w3("x1")).empty());
  CHECK(commutator(w3("x1 x2"), w3("x1 x2")).empty());
}

TEST_CASE("exponent_sum") {
  CHECK(exponent_sum(w3("x1 x2 X1"), 1) == 0);
  CHECK(exponent_sum(w3("x2 x1"), 1) == 1);
  CHECK(exponent_sum(Word(3), 3) == 0);
}

TEST_CASE("power") {
  CHECK(power(w3("x1 x2"), 2) == w3("x1 x2 x1 x2"));
  CHECK(power(w3("x1 x2"), -1) == w3("X2 X1"));
  CHECK(power(w3("x3"), 0).empty());
}

TEST_CASE("text form") {
  CHECK(to_string(Word(2)) == "1");
  CHECK(to_string(w3("x3X2x1")) == "x3 X2 x1");
  CHECK(parse_word("  1 ", 2).empty());
  CHECK_THROWS_AS(parse_word("x4", 3), ParseError);
  CHECK_THROWS_AS(parse_word("x1 y2", 3), ParseError);
  CHECK_THROWS_AS(parse_word("1 x1", 3), ParseError);
  CHECK_THROWS_AS(parse_word("x", 3), ParseError);
  try {
    parse_word("x1 x2 q", 3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("strand counts must agree") {
  CHECK_THROWS_AS(Word(2) * Word(3), SemanticError);
  CHECK_THROWS_AS(Word::generator(2, 3), SemanticError);
}

TEST_CASE("property: a * a^-1 is empty") {
  std::mt19937 rng(11);
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + t % 4;
    const auto a = oracle::random_word(rng, n, 40);
    CHECK((a * invert(a)).empty());
    CHECK((invert(a) * a).empty());
  }
}

TEST_CASE("property: free reduction is confluent") {
  std::mt19937 rng(12);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + t % 3;
    const auto raw = oracle::random_letters(rng, n, 40);
    const Word eager(n, raw);
    for (int order = 0; order < 4; ++order) {
      const auto v = reduce_randomly(raw, rng);
      CHECK(std::ranges::equal(v, eager.letters()));
    }
  }
}

TEST_CASE("property: exponent_sum is additive") {
  std::mt19937 rng(13);
  for (int t = 0; t < 300; ++t) {
    const auto a = oracle::random_word(rng, 3, 20);
    const auto b = oracle::random_word(rng, 3, 20);
    for (int i = 1; i <= 3; ++i)
      CHECK(exponent_sum(a * b, i) == exponent_sum(a, i) + exponent_sum(b, i));
  }
}

TEST_CASE("property: print then parse") {
  std::mt19937 rng(14);
  for (int t = 0; t < 200; ++t) {
    const auto a = oracle::random_word(rng, 4, 20);
    CHECK(parse_word(to_string(a), 4) == a);
  }
}

TEST_SUITE_END();
