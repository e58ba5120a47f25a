#include <random>
#include <vector>

#include "doctest.h"
#include "milnor4/autc.hpp"
#include "milnor4/error.hpp"
#include "milnor4/io.hpp"
#include "support/oracles.hpp"
#include "support/printing.hpp"

using namespace milnor4;

namespace {

Word w(std::string_view s, int n) { return parse_word(s, n); }

ConjAut aut(const QuotientContext& ctx, std::initializer_list<const char*> l) {
  std::vector<Word> c;
  for (const char* s : l) c.push_back(parse_word(s, ctx.strands()));
  return ConjAut(ctx, c);
}

ConjAut random_aut(std::mt19937& rng, const QuotientContext& ctx, int len) {
  std::vector<Word> c;
  for (int i = 1; i <= ctx.strands(); ++i)
    c.push_back(oracle::random_word(rng, ctx.strands(), len));
  return ConjAut(ctx, c);
}

}  // namespace

TEST_SUITE_BEGIN("autc");

TEST_CASE("from_gauss") {
  const auto K = QuotientContext::nilpotent(2, 4);
  CHECK(equal(from_gauss(GaussData(2), K), ConjAut::identity(K)));
  const auto f = from_gauss(parse_braid("a[1,2]"), K);
  CHECK(f.conjugator(2) == w("x1", 2));
  CHECK(f.conjugator(1).empty());
  CHECK(f.image(2) == w("X1 x2 x1", 2));
  const auto R = QuotientContext::reduced(3);
  const auto F = aut(R, {"x3", "1", "X2 X3"});
  CHECK(equal(from_gauss(realize(F.conjugators()), R), F));
}

TEST_CASE("apply is letterwise") {
  const auto K = QuotientContext::nilpotent(2, 3);
  const auto f = aut(K, {"1", "x1"});
  CHECK(f.apply(w("x2 x1", 2)) == w("X1 x2 x1 x1", 2));
  CHECK(f.apply(w("X2", 2)) == w("X1 X2 x1", 2));
}

TEST_CASE("composition") {
  const auto K = QuotientContext::nilpotent(2, 4);
  const auto f = aut(K, {"x2 x1 X2", "X1"});
  CHECK(equal(compose(ConjAut::identity(K), f), f));
  CHECK(equal(compose(f, ConjAut::identity(K)), f));

  // x1 -> x2^-1 x1 x2 after x2 -> x1^-1 x2 x1
  const auto a12 = from_gauss(parse_braid("a[1,2]"), K);
  const auto a21 = from_gauss(parse_braid("a[2,1]"), K);
  const auto c = compose(a21, a12);
  CHECK(equal(c, aut(K, {"X1 x2 x1", "x1"})));
  CHECK(c.image(1) == a12.apply(a21.image(1)));
  CHECK(c.conjugator(2) == w("x1", 2));
  CHECK(equal(c, from_gauss(parse_braid("a[1,2] a[2,1]"), K)));
}

TEST_CASE("equality") {
  const auto R = QuotientContext::reduced(2);
  CHECK(equal(aut(R, {"x1 x2", "1"}), aut(R, {"x2", "1"})));
  const auto ab = parse_braid("a[1,2] a[2,1]");
  const auto ba = parse_braid("a[2,1] a[1,2]");
  CHECK(equal(from_gauss(ab, R), from_gauss(ba, R)));
  CHECK(equal(from_gauss(ab, QuotientContext::nilpotent(2, 3)),
              from_gauss(ba, QuotientContext::nilpotent(2, 3))));
  CHECK_FALSE(equal(from_gauss(ab, QuotientContext::nilpotent(2, 4)),
                    from_gauss(ba, QuotientContext::nilpotent(2, 4))));
  CHECK_THROWS_AS(equal(ConjAut::identity(R),
                        ConjAut::identity(QuotientContext::nilpotent(2, 3))),
                  SemanticError);
}

TEST_CASE("inverse") {
  const auto K = QuotientContext::nilpotent(2, 4);
  CHECK(equal(inverse(ConjAut::identity(K)), ConjAut::identity(K)));
  const auto inv = inverse(from_gauss(parse_braid("a[1,2]"), K));
  CHECK(inv.conjugator(2) == w("X1", 2));
  CHECK(inv.conjugator(1).empty());
}

TEST_CASE("constructor validation") {
  const auto K = QuotientContext::nilpotent(2, 3);
  CHECK_THROWS_AS(ConjAut(K, {Word(2)}), SemanticError);
  CHECK_THROWS_AS(ConjAut(K, {Word(2), Word(3)}), SemanticError);
  CHECK_THROWS_AS(ConjAut::identity(K).conjugator(3), SemanticError);
}

TEST_CASE("property: inverse is two-sided and an involution") {
  std::mt19937 rng(51);
  for (int t = 0; t < 150; ++t) {
    const int n = 2 + t % 2;
    const auto ctx = t % 3 == 0 ? QuotientContext::reduced(n)
                                : QuotientContext::nilpotent(n, 2 + t % 3);
    const auto f = random_aut(rng, ctx, 4);
    const auto id = ConjAut::identity(ctx);
    CHECK(equal(compose(f, inverse(f)), id));
    CHECK(equal(compose(inverse(f), f), id));
    CHECK(equal(inverse(inverse(f)), f));
  }
}

TEST_CASE("property: compose is associative") {
  std::mt19937 rng(52);
  for (int t = 0; t < 150; ++t) {
    const int n = 2 + t % 2;
    const auto ctx = t % 2 ? QuotientContext::reduced(n)
                           : QuotientContext::nilpotent(n, 4);
    const auto f = random_aut(rng, ctx, 3);
    const auto g = random_aut(rng, ctx, 3);
    const auto h = random_aut(rng, ctx, 3);
    CHECK(equal(compose(compose(f, g), h), compose(f, compose(g, h))));
  }
}

TEST_CASE("property: equal is an equivalence relation") {
  std::mt19937 rng(53);
  const auto ctx = QuotientContext::nilpotent(2, 3);
  std::vector<ConjAut> corpus;
  for (int t = 0; t < 40; ++t) corpus.push_back(random_aut(rng, ctx, 2));
  for (const auto& f : corpus) CHECK(equal(f, f));
  for (const auto& f : corpus)
    for (const auto& g : corpus) {
      CHECK(equal(f, g) == equal(g, f));
      if (!equal(f, g)) continue;
      for (const auto& h : corpus)
        if (equal(g, h)) CHECK(equal(f, h));
    }
}

TEST_CASE("property: left powers of x_i do not change the automorphism") {
  std::mt19937 rng(54);
  for (int t = 0; t < 100; ++t) {
    const auto ctx = QuotientContext::nilpotent(3, 4);
    const auto f = random_aut(rng, ctx, 5);
    std::vector<Word> shifted;
    for (int i = 1; i <= 3; ++i)
      shifted.push_back(power(Word::generator(3, i), t % 5 - 2) *
                        f.conjugator(i));
    CHECK(equal(f, ConjAut(ctx, shifted)));
  }
}

TEST_CASE("property: stacking is composition") {
  std::mt19937 rng(55);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 3;
    const auto a = oracle::random_gauss(rng, n, 6);
    const auto b = oracle::random_gauss(rng, n, 6);
    const auto ctx = QuotientContext::nilpotent(n, 2 + t % 3);
    CHECK(equal(from_gauss(stack(a, b), ctx),
                compose(from_gauss(b, ctx), from_gauss(a, ctx))));
  }
}

TEST_SUITE_END();
