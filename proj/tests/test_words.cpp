#include <doctest.h>

#include "braidquot/word.hpp"
#include <limits>

using namespace braidquot;

static const GroupParams P{3, 3, 1};

TEST_CASE("parse/print round trip") {
  for (const char* text : {"1", "s1", "s2^-1", "ts1 ts2", "a1 b1^-3 z3",
                           "ta1^2 tb1^-2 z1 z2 z3", "s1^5 s1^5"}) {
    const Word w = parse_word(text, P);
    CHECK(w.str() == text);
    CHECK(parse_word(w.str(), P) == w);
  }
}

TEST_CASE("exponent 1 is omitted when printing") {
  CHECK(parse_word("s1^1", P).str() == "s1");
  CHECK(parse_word("a1^1 a1^1", P).str() == "a1 a1");
}

TEST_CASE("the token 1 is the empty word") {
  CHECK(parse_word("1", P).empty());
  CHECK(parse_word("1", P).str() == "1");
  CHECK_THROWS_AS(parse_word("1 s1", P), ParseError);
}

TEST_CASE("tilde prefixes win over their one-letter stems") {
  CHECK(parse_word("ts1", P).letters()[0].gen == sigma_t(1));
  CHECK(parse_word("ta1", P).letters()[0].gen == gen_ta(1));
  CHECK(parse_word("tb1", P).letters()[0].gen == gen_tb(1));
  CHECK(parse_word("s1", P).letters()[0].gen == sigma(1));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_word("q1", P), ParseError);
  CHECK_THROWS_AS(parse_word("s", P), ParseError);       // missing index
  CHECK_THROWS_AS(parse_word("s0", P), ParseError);      // bad index
  CHECK_THROWS_AS(parse_word("s3", P), ParseError);      // k-1 = 2
  CHECK_THROWS_AS(parse_word("a2", P), ParseError);      // g = 1
  CHECK_THROWS_AS(parse_word("z4", P), ParseError);      // n = 3
  CHECK_THROWS_AS(parse_word("s1^0", P), ParseError);    // zero exponent
  CHECK_THROWS_AS(parse_word("s1^x", P), ParseError);
  CHECK_THROWS_AS(parse_word("s1^", P), ParseError);
  try {
    parse_word("s1 q7", P);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 3);
  }
}

TEST_CASE("alphabet shrinks with the parameters") {
  const GroupParams small{1, 2, 0};
  CHECK_THROWS_AS(parse_word("s1", small), ParseError);  // k-1 = 0
  CHECK_THROWS_AS(parse_word("a1", small), ParseError);  // g = 0
  CHECK(parse_word("z1 z2 ts1", small).size() == 3);
}

TEST_CASE("free reduction merges runs and cancels") {
  CHECK(free_reduce(parse_word("s1 s1^2 s1^-3", P)).empty());
  CHECK(free_reduce(parse_word("a1 b1 b1^-1 a1^-1", P)).empty());
  CHECK(free_reduce(parse_word("a1 b1 b1^2 a1", P)).str() == "a1 b1^3 a1");
  CHECK(free_reduce(parse_word("s1 s2 s2^-1 s1 z1", P)).str() == "s1^2 z1");
}

TEST_CASE("invert reverses and negates") {
  const Word w = parse_word("s1 a1^2 z3^-1", P);
  CHECK(invert(w).str() == "z3 a1^-2 s1^-1");
  CHECK(free_reduce(w * invert(w)).empty());
}

TEST_CASE("commutator and conjugate conventions") {
  const Word x = parse_word("a1", P);
  const Word y = parse_word("b1", P);
  // [x,y] = x y x^-1 y^-1
  CHECK(commutator(x, y).str() == "a1 b1 a1^-1 b1^-1");
  // x^y = y^-1 x y
  CHECK(conjugate(x, y).str() == "b1^-1 a1 b1");
  CHECK(commutator(x, x).empty());
}

TEST_CASE("word_pow") {
  const Word w = parse_word("s1 z1", P);
  CHECK(word_pow(w, 0).empty());
  CHECK(word_pow(w, 2).str() == "s1 z1 s1 z1");
  CHECK(free_reduce(word_pow(w, -1) * w).empty());
}

TEST_CASE("checked arithmetic overflows loudly") {
  constexpr Int big = std::numeric_limits<Int>::max();
  CHECK_THROWS_AS(checked_add(big, Int{1}), OverflowError);
  CHECK_THROWS_AS(checked_mul(big, Int{2}), OverflowError);
  CHECK(checked_add(big, Int{0}) == big);
}
