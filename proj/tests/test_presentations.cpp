#include <doctest.h>

#include "braidquot/presentation.hpp"

using namespace braidquot;

TEST_CASE("degenerate punctured group is free on the zetas") {
  const Presentation pres = presentation_punctured({1, 2, 0});
  CHECK(pres.generators == std::vector<Generator>{zeta(1), zeta(2)});
  CHECK(pres.relators.empty());
}

TEST_CASE("mixed generators for g = 0") {
  const Presentation pres = presentation_mixed({3, 3, 0});
  std::vector<std::string> names;
  for (const Generator& x : pres.generators) names.push_back(x.name());
  CHECK(names == std::vector<std::string>{"s1", "s2", "ts1", "ts2", "z1", "z2", "z3"});
}

TEST_CASE("relator lists are deterministic") {
  const Presentation a = presentation_mixed({3, 3, 1});
  const Presentation b = presentation_mixed({3, 3, 1});
  CHECK(a.relators.size() == b.relators.size());
  for (std::size_t i = 0; i < a.relators.size(); ++i)
    CHECK(a.relators[i] == b.relators[i]);
}

TEST_CASE("base presentation mirrors the punctured one without punctures") {
  const Presentation base = presentation_base({3, 3, 1});
  for (const Generator& x : base.generators) CHECK(x.is_tilde());
  for (const Word& r : base.relators)
    for (const Letter& l : r.letters()) CHECK(l.gen.is_tilde());
}

TEST_CASE("act_outer implements the (c) relations") {
  const GroupParams p{3, 3, 1};
  // (c.7.1): a~_1 b_1 a~_1^-1 = b_1 zeta_1
  CHECK(act_outer(gen_ta(1), Word::of(gen_b(1)), p) ==
        free_reduce(parse_word("b1 z1", p)));
  // (c.3.1): s~_1 zeta_2 s~_1^-1 = zeta_1
  CHECK(act_outer(sigma_t(1), Word::of(zeta(2)), p) == Word::of(zeta(1)));
  // (c.3.2): s~_1 zeta_1 s~_1^-1 = zeta_1^-1 zeta_2 zeta_1
  CHECK(act_outer(sigma_t(1), Word::of(zeta(1)), p) ==
        free_reduce(parse_word("z1^-1 z2 z1", p)));
  // (c.1): outer generators fix the sigma_j
  CHECK(act_outer(sigma_t(1), Word::of(sigma(2)), p) == Word::of(sigma(2)));
  CHECK(act_outer(gen_ta(1), Word::of(sigma(1)), p) == Word::of(sigma(1)));
  // (c.2): s~_i fixes a_j, b_j
  CHECK(act_outer(sigma_t(2), Word::of(gen_a(1)), p) == Word::of(gen_a(1)));
  // action is multiplicative in the operand
  const Word w = parse_word("b1 z1^2 s1^-1", p);
  const Word lhs = act_outer(gen_tb(1), w, p);
  const Word rhs = free_reduce(act_outer(gen_tb(1), parse_word("b1 z1^2", p), p) *
                               act_outer(gen_tb(1), parse_word("s1^-1", p), p));
  CHECK(lhs == rhs);
}

TEST_CASE("act_outer rejects bad alphabets") {
  const GroupParams p{3, 3, 1};
  CHECK_THROWS_AS(act_outer(sigma(1), Word::of(zeta(1)), p), AlphabetError);
  CHECK_THROWS_AS(act_outer(sigma_t(1), Word::of(gen_ta(1)), p), AlphabetError);
}

TEST_CASE("quotient presentations enforce their regimes") {
  CHECK_THROWS_AS(presentation_quotient({2, 3, 1}, QuotientKind::MixedGamma3), RegimeError);
  CHECK_THROWS_AS(presentation_quotient({3, 2, 1}, QuotientKind::MixedGamma3), RegimeError);
  CHECK_THROWS_AS(presentation_quotient({2, 3, 1}, QuotientKind::PuncturedGamma3), RegimeError);
  CHECK_THROWS_AS(presentation_quotient({3, 3, 0}, QuotientKind::GkSurface), RegimeError);
  CHECK_NOTHROW(presentation_quotient({3, 3, 0}, QuotientKind::MixedGamma3));
}

TEST_CASE("collapsed quotient alphabets") {
  const Presentation pres = presentation_quotient({3, 3, 1}, QuotientKind::MixedGamma3);
  std::vector<std::string> names;
  for (const Generator& x : pres.generators) names.push_back(x.name());
  CHECK(names == std::vector<std::string>{"s1", "ts1", "z1", "a1", "b1", "ta1", "tb1"});
  const Presentation gk = presentation_quotient({3, 3, 2}, QuotientKind::GkSurface);
  CHECK(gk.generators.size() == 2 + 4);
}
