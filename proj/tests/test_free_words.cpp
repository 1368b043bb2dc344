#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isgcoh/fixtures.hpp"
#include "isgcoh/free_words.hpp"

#include <random>

using namespace isgcoh;

namespace {
Word random_word(std::mt19937_64& rng, int n_letters, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> base(0, n_letters - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  Word w(len(rng));
  for (auto& l : w) l = Letter{base(rng), sign(rng) ? +1 : -1};
  return w;
}
}  // namespace

TEST_CASE("involution reverses and flips") {
  Word w{pos(0), neg(1), pos(2)};
  Word wi = involution(w);
  CHECK(wi == Word{neg(2), pos(1), neg(0)});
  CHECK(involution(wi) == w);
  CHECK(involution(Word{}) == Word{});
}

TEST_CASE("reduce cancels adjacent inverse pairs") {
  CHECK(reduce({pos(0), neg(0)}) == Word{});
  CHECK(reduce({pos(0), pos(1), neg(1), neg(0)}) == Word{});
  CHECK(reduce({pos(0), neg(1), pos(1), pos(2)}) == Word{pos(0), pos(2)});
  CHECK(is_reduced(reduce({pos(0), pos(0), neg(0), neg(0), pos(1)})));
  // same base, same sign does not cancel
  CHECK(reduce({pos(0), pos(0)}) == Word{pos(0), pos(0)});
}

TEST_CASE("reduction is idempotent and involution-compatible") {
  std::mt19937_64 rng(7);
  auto T = fixtures::clifford4();
  for (int k = 0; k < 2000; ++k) {
    Word w = random_word(rng, T.size(), 8);
    Word r = reduce(w);
    CHECK(is_reduced(r));
    CHECK(reduce(r) == r);
    CHECK(reduce(involution(w)) == involution(r));
    // concatenating a word with its involution reduces to the empty word
    CHECK(reduce(concat(w, involution(w))).empty());
  }
}

TEST_CASE("phi evaluates words in T") {
  auto T = fixtures::clifford4();
  // g * gf = f
  CHECK(phi({pos(1), pos(3)}, T) == 2);
  // g^-1 = g in Z2 components
  CHECK(phi({neg(1)}, T) == 1);
  CHECK_THROWS(phi({}, T));
}

TEST_CASE("nu and the adjoined identity") {
  auto T = fixtures::clifford4();
  CHECK(nu({}, T) == kAdjoinedOne);
  CHECK(nu({pos(1), neg(1)}, T) == kAdjoinedOne);
  CHECK(nu({pos(1), pos(1)}, T) == 0);
  // t <= 1 iff t idempotent
  CHECK(cover_member(0, {}, T));
  CHECK(cover_member(2, {pos(1), neg(1)}, T));
  CHECK(!cover_member(1, {}, T));
}

TEST_CASE("nu is monotone under concatenation") {
  // nu(u) nu(v) <= nu(uv), equality when no cancellation across the seam
  std::mt19937_64 rng(11);
  auto T = fixtures::clifford4();
  auto mul1 = [&](int a, int b) {  // product in T^1
    if (a == kAdjoinedOne) return b;
    if (b == kAdjoinedOne) return a;
    return T.mul(a, b);
  };
  auto leq1 = [&](int a, int b) {
    if (b == kAdjoinedOne) return a == kAdjoinedOne || T.idem(a);
    if (a == kAdjoinedOne) return false;
    return T.leq(a, b);
  };
  for (int k = 0; k < 2000; ++k) {
    Word u = random_word(rng, T.size(), 5);
    Word v = random_word(rng, T.size(), 5);
    int nuv = nu(concat(u, v), T);
    int prod = mul1(nu(u, T), nu(v, T));
    CHECK(leq1(prod, nuv));
    Word ru = reduce(u), rv = reduce(v);
    if (is_reduced(concat(ru, rv))) CHECK(prod == nuv);
  }
}

TEST_CASE("cover membership over all elements and short words") {
  auto T = fixtures::clifford4();
  std::mt19937_64 rng(3);
  for (int k = 0; k < 500; ++k) {
    Word w = random_word(rng, T.size(), 4);
    int v = nu(w, T);
    for (int t = 0; t < T.size(); ++t)
      CHECK(cover_member(t, w, T) ==
            (v == kAdjoinedOne ? T.idem(t) : T.leq(t, v)));
  }
}

TEST_CASE("word literals round-trip") {
  auto T = fixtures::clifford4();
  Word w{pos(1), neg(3), pos(0)};
  CHECK(format_word(w, T) == "g,gf^-1,1");
  CHECK(parse_word("g,gf^-1,1", T) == w);
  CHECK(parse_word("", T) == Word{});
  CHECK(format_word({}, T) == "");
  CHECK_THROWS(parse_word("nope", T));
}
