#include <doctest.h>

#include <algorithm>
#include <random>

#include "braidquot/oracle.hpp"

using namespace braidquot;

// Free-group generators x1..xN stand-ins: reuse the zeta family, whose
// index range is controlled by n.
static std::vector<Generator> free_gens(int N) {
  std::vector<Generator> out;
  for (int i = 1; i <= N; ++i) out.push_back(zeta(i));
  return out;
}

static const GroupParams FP{1, 8, 0};  // parsing params for x_i = z_i

TEST_CASE("collection normal form basics") {
  const auto gens = free_gens(2);
  // one transposition: x2 x1 -> e=(1,1), c12 = -1
  Class2Elt x = collect_class2(parse_word("z2 z1", FP), gens);
  CHECK(x.e == std::vector<mpz_class>{1, 1});
  CHECK(x.c == std::vector<mpz_class>{-1});
  // the basic commutator itself
  Class2Elt c = collect_class2(parse_word("z1 z2 z1^-1 z2^-1", FP), gens);
  CHECK(c.e == std::vector<mpz_class>{0, 0});
  CHECK(c.c == std::vector<mpz_class>{1});
  // class-2 law: [x1, [x2, x1]] collapses
  const Word inner = commutator(Word::of(zeta(2)), Word::of(zeta(1)));
  const Word outer = commutator(Word::of(zeta(1)), inner);
  CHECK(collect_class2(outer, gens).is_identity());
}

TEST_CASE("collect_class2 is a homomorphism") {
  const auto gens = free_gens(4);
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> gd(1, 4), ed(-3, 3);
  auto rand_word = [&] {
    Word w;
    for (int i = 0; i < 8; ++i) {
      const int e = ed(rng);
      if (e != 0) w = w * Word::of(zeta(gd(rng)), e);
    }
    return w;
  };
  for (int i = 0; i < 200; ++i) {
    const Word u = rand_word(), v = rand_word();
    CHECK(collect_class2(u * v, gens) ==
          class2_mul(collect_class2(u, gens), collect_class2(v, gens)));
    CHECK(class2_mul(collect_class2(u, gens),
                     class2_inv(collect_class2(u, gens))).is_identity());
  }
}

TEST_CASE("class2_pow matches iterated multiplication") {
  const auto gens = free_gens(3);
  const Class2Elt x = collect_class2(parse_word("z1 z2^2 z3 z1^-1", FP), gens);
  Class2Elt acc = Class2Elt::identity(3);
  for (int i = 1; i <= 6; ++i) {
    acc = class2_mul(acc, x);
    CHECK(class2_pow(x, i) == acc);
  }
  CHECK(class2_pow(x, -4) == class2_inv(class2_pow(x, 4)));
}

TEST_CASE("smith invariants") {
  auto Z = [](std::initializer_list<long> v) {
    ZRow r;
    for (long x : v) r.emplace_back(x);
    return r;
  };
  CHECK(smith_invariants({}, 3).str() == "Z^3");
  CHECK(smith_invariants({Z({2, 0}), Z({0, 2})}, 2).str() == "Z2^2");
  CHECK(smith_invariants({Z({1, 1}), Z({1, -1})}, 2).str() == "Z2");
  CHECK(smith_invariants({Z({1, 0}), Z({0, 1})}, 2).str() == "1");
  CHECK(smith_invariants({Z({0, 0, 6}), Z({0, 2, 0})}, 3).str() == "Z x Z2 x Z6");
}

TEST_CASE("smith invariants stable under row shuffles and row operations") {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<long> vd(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ZRow> rows(4, ZRow(3));
    for (auto& r : rows)
      for (auto& v : r) v = vd(rng);
    const SmithInvariants base = smith_invariants(rows, 3);
    std::shuffle(rows.begin(), rows.end(), rng);
    for (std::size_t c = 0; c < 3; ++c) rows[0][c] += 2 * rows[1][c] - rows[2][c];
    CHECK(smith_invariants(rows, 3) == base);
  }
}

TEST_CASE("lattice membership") {
  auto Z = [](std::initializer_list<long> v) {
    ZRow r;
    for (long x : v) r.emplace_back(x);
    return r;
  };
  const IntLattice lat = IntLattice::from_rows(3, {Z({2, 0, 0}), Z({0, 0, 2})});
  CHECK(lat.contains(Z({2, 0, 0})));
  CHECK(lat.contains(Z({-4, 0, 6})));
  CHECK(lat.contains(Z({0, 0, 0})));
  CHECK_FALSE(lat.contains(Z({1, 0, 0})));
  CHECK_FALSE(lat.contains(Z({0, 1, 0})));
  CHECK_FALSE(lat.contains(Z({2, 0, 1})));
}

TEST_CASE("lattice membership on random integer combinations") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> vd(-5, 5), cd(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<ZRow> rows(3, ZRow(5));
    for (auto& r : rows)
      for (auto& v : r) v = vd(rng);
    const IntLattice lat = IntLattice::from_rows(5, rows);
    ZRow combo(5, 0);
    for (const ZRow& r : rows) {
      const long c = cd(rng);
      for (std::size_t i = 0; i < 5; ++i) combo[i] += c * r[i];
    }
    CHECK(lat.contains(combo));
  }
}

TEST_CASE("class-2 quotient lattice of x1^2 on two generators") {
  // normal closure of x1^2 in F2/Gamma3: abelian part 2Z x 0, commutator
  // part 2Z (conjugation by x2 contributes [x1,x2]^2 directions)
  Presentation pres;
  pres.params = FP;
  pres.generators = free_gens(2);
  pres.relators = {parse_word("z1^2", FP)};
  const IntLattice lat = class2_quotient_lattice(pres);
  auto Z = [](std::initializer_list<long> v) {
    ZRow r;
    for (long x : v) r.emplace_back(x);
    return r;
  };
  CHECK(lat.contains(Z({2, 0, 0})));
  CHECK(lat.contains(Z({0, 0, 2})));
  CHECK_FALSE(lat.contains(Z({0, 0, 1})));
  CHECK_FALSE(lat.contains(Z({1, 0, 0})));
  CHECK(gamma2_mod_gamma3_invariants(pres).str() == "Z2");
}

TEST_CASE("free group of rank 2 has Gamma2/Gamma3 = Z") {
  Presentation pres;
  pres.params = FP;
  pres.generators = free_gens(2);
  const SmithInvariants inv = gamma2_mod_gamma3_invariants(pres);
  CHECK(inv.free_rank == 1);
  CHECK(inv.torsion.empty());
}

TEST_CASE("abelian invariants of the braid presentations") {
  CHECK(abelian_invariants(presentation_mixed({3, 3, 0})).str() == "Z^3");
  CHECK(abelian_invariants(presentation_mixed({3, 3, 1})).str() == "Z^4 x Z2^2");
  CHECK(abelian_invariants(presentation_mixed({3, 3, 2})).str() == "Z^8 x Z2^2");
  CHECK(abelian_invariants(presentation_punctured({3, 2, 1})).str() == "Z^4 x Z2");
  CHECK(abelian_invariants(presentation_punctured({1, 2, 1})).str() == "Z^4");
}

TEST_CASE("word problem in G/Gamma3") {
  const GroupParams p{3, 3, 1};
  const Presentation pres = presentation_mixed(p);
  CHECK(is_trivial_class2(pres, parse_word("ta1 b1 ta1^-1 b1^-1 z1^-1", p)));
  CHECK(is_trivial_class2(pres, parse_word("s1 s2^-1", p)));
  CHECK_FALSE(is_trivial_class2(pres, parse_word("z1", p)));
  CHECK_FALSE(is_trivial_class2(pres, parse_word("s1", p)));
  // Gamma3 = Gamma2 on the disc: all commutators die
  const GroupParams p0{3, 3, 0};
  const Presentation disc = presentation_mixed(p0);
  const IntLattice lat = class2_quotient_lattice(disc);
  for (const Generator& x : disc.generators)
    for (const Generator& y : disc.generators)
      CHECK(is_trivial_class2(disc, lat, commutator(Word::of(x), Word::of(y))));
}

TEST_CASE("gamma2 mod gamma3 regression values") {
  CHECK(gamma2_mod_gamma3_invariants(presentation_mixed({3, 3, 0})).str() == "1");
  CHECK(gamma2_mod_gamma3_invariants(presentation_mixed({3, 3, 1})).str() == "Z^3");
}
