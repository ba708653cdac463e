#include <doctest.h>

#include "braidquot/homs.hpp"
#include "braidquot/presentation.hpp"

using namespace braidquot;

static const GroupParams P{3, 3, 1};

static Gamma3MixedElt ev(const char* text) {
  return eval_mixed_gamma3(parse_word(text, P), P);
}

TEST_CASE("psi_bar forgets the first block") {
  CHECK(psi_bar(ev("a1")).is_identity());
  CHECK(psi_bar(ev("s1^3 z2 b1^-1")).is_identity());
  const PuncturedGamma3Elt img = psi_bar(ev("ta1"));
  CHECK(img.params.k == 3);
  CHECK(img.params.n == 0);
  CHECK(img.m[0] == 1);
  CHECK(img.p == 0);
  CHECK(psi_bar(ev("ts1")).p == 1);
}

TEST_CASE("kernel certificates") {
  CHECK(kernel_certificate_psi_bar(ev("z1")).value().r == 1);
  CHECK_FALSE(kernel_certificate_psi_bar(ev("ts1")).has_value());
  CHECK_FALSE(kernel_certificate_psi_bar(ev("ta1 s1")).has_value());
  CHECK(kernel_certificate_psi_bar(Gamma3MixedElt::identity(P)).value().is_identity());
  const auto cert = kernel_certificate_psi_bar(ev("b1 a1 z1^2"));
  REQUIRE(cert.has_value());
  CHECK(*cert == eval_gk_surface(parse_word("b1 a1 z1^2", P), P));
}

TEST_CASE("alpha_kn maps the disc abelianisation onto the centre") {
  const GroupParams p0{3, 3, 0};
  AbelElt v = AbelElt::identity(p0, QuotientKind::MixedAbel);
  v.free_part = {1, 2, 3};
  const Gamma3MixedElt x = alpha_kn(v, P);
  CHECK(x.p == 1);
  CHECK(x.q == 2);
  CHECK(x.r == 3);
  CHECK(is_central_mixed(x));
  CHECK_FALSE(x.is_identity());
  v.free_part = {0, 0, 0};
  CHECK(alpha_kn(v, P).is_identity());
  // negative control: a sigma -> sigma^2 mutation would break the square
  v.free_part = {2, 0, 0};
  CHECK_FALSE(alpha_kn(v, P) == ev("s1"));
  CHECK_THROWS_AS(alpha_kn(v, {3, 3, 0}), RegimeError);
  CHECK_THROWS_AS(alpha_kn(AbelElt::identity(P, QuotientKind::MixedAbel), P),
                  RegimeError);
}

TEST_CASE("gamma_k embeds G_k as the centre of G_k(Sigma_g)") {
  CHECK(gamma_k({1, 0}, P) == eval_gk_surface(parse_word("s1", P), P));
  CHECK(gamma_k({0, 1}, P) == eval_gk_surface(parse_word("z1", P), P));
  CHECK(gamma_k({0, 0}, P).is_identity());
  CHECK_FALSE(gamma_k({3, -2}, P).is_identity());
  CHECK_THROWS_AS(gamma_k({1, 1}, {3, 3, 0}), RegimeError);
}

TEST_CASE("centre characterization") {
  CHECK(is_central_mixed(ev("s1^5 ts2^-1 z3^2")));
  CHECK_FALSE(is_central_mixed(ev("a1")));
  CHECK_FALSE(mixed_commutator(ev("a1"), ev("b1")).is_identity());
  CHECK(mixed_commutator(ev("z1"), ev("a1 b1 ta1")).is_identity());
}

TEST_CASE("verification suites pass on the supported regimes") {
  for (const GroupParams p : {GroupParams{3, 3, 1}, GroupParams{4, 3, 2}}) {
    CHECK(verify_relators(p).all_pass());
    CHECK(verify_diagram(p, 99, 200).all_pass());
    CHECK(verify_rigidity(p, 99, 200).all_pass());
    CHECK(verify_nonextension(p).all_pass());
    CHECK(verify_oracle_agreement(p, 99, 200).all_pass());
  }
  CHECK(verify_relators({2, 2, 0}).all_pass());
  CHECK(verify_nonextension({2, 2, 1}).all_pass());
}

TEST_CASE("reports are deterministic in the seed") {
  const VerificationReport a = verify_diagram(P, 1234, 100);
  const VerificationReport b = verify_diagram(P, 1234, 100);
  CHECK(a.str() == b.str());
}

TEST_CASE("suites enforce their regimes") {
  CHECK_THROWS_AS(verify_diagram({2, 3, 1}, 0, 10), RegimeError);
  CHECK_THROWS_AS(verify_rigidity({3, 3, 0}, 0, 10), RegimeError);
  CHECK_THROWS_AS(verify_nonextension({3, 3, 0}), RegimeError);
  CHECK_THROWS_AS(verify_oracle_agreement({2, 3, 0}, 0, 10), RegimeError);
}

TEST_CASE("a failing check carries a witness") {
  // pick apart the report plumbing with a synthetic failure
  VerificationReport r;
  r.suite = "synthetic";
  r.checks.push_back({"synthetic-001", "k=3 n=3 g=1", false, "a1"});
  CHECK_FALSE(r.all_pass());
  CHECK(r.fail_count() == 1);
  CHECK(r.str().find("witness: a1") != std::string::npos);
}
