// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <cstdio>
#include <random>
#include <string>

#include "braidquot/homs.hpp"
#include "braidquot/oracle.hpp"
#include "braidquot/presentation.hpp"

using namespace braidquot;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass,
            const std::string& detail = "") {
  const bool show_detail = !pass && !detail.empty();
  std::printf("%s  criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion,
              what.c_str(), show_detail ? " -- " : "", show_detail ? detail.c_str() : "");
  if (!pass) ++failures;
}

Gamma3MixedElt from_coords(const GroupParams& p, const std::vector<Int>& c) {
  Gamma3MixedElt x = Gamma3MixedElt::identity(p);
  x.p = c[0];
  x.q = c[1];
  x.r = c[2];
  x.m = {c[3]};
  x.mt = {c[4]};
  x.nv = {c[5]};
  x.nt = {c[6]};
  return x;
}

// 1. Relator-kill on the (k,n) in {3,4}^2, g in {0,1,2} grid.
void criterion1() {
  bool ok = true;
  std::string detail;
  for (int k : {3, 4})
    for (int n : {3, 4})
      for (int g : {0, 1, 2}) {
        const GroupParams p{k, n, g};
        for (const Word& r : presentation_mixed(p).relators)
          if (!eval_mixed_gamma3(r, p).is_identity()) {
            ok = false;
            detail = "mixed " + r.str();
          }
        for (const Word& r : presentation_punctured(p).relators)
          if (!eval_punctured_gamma3(r, p).is_identity()) {
            ok = false;
            detail = "punctured " + r.str();
          }
      }
  report(1, "every relator dies in its Gamma3 quotient on the parameter grid", ok,
         detail);
}

// 2. Oracle agreement, 1000 seeded pairs, k=n=3, g in {0,1}.
void criterion2() {
  bool ok = true;
  std::string detail;
  for (int g : {0, 1}) {
    const VerificationReport r = verify_oracle_agreement({3, 3, g}, 20260826, 1000);
    if (!r.all_pass()) {
      ok = false;
      detail = "g=" + std::to_string(g);
    }
  }
  report(2, "normal-form equality matches the class-2 oracle on 1000 pairs, g=0,1",
         ok, detail);
}

// 3. Abelian invariants against the known closed-form values.
void criterion3() {
  bool ok = abelian_invariants(presentation_mixed({3, 3, 0})).str() == "Z^3" &&
            abelian_invariants(presentation_mixed({3, 3, 1})).str() == "Z^4 x Z2^2";
  std::string detail;
  for (int k : {2, 3})
    for (int n : {0, 1, 2})
      for (int g : {1, 2}) {
        const SmithInvariants inv = abelian_invariants(presentation_punctured({k, n, g}));
        const std::size_t rank = static_cast<std::size_t>(2 * g + n);
        if (inv.free_rank != rank || inv.torsion != std::vector<mpz_class>{2}) {
          ok = false;
          detail = "punctured(" + std::to_string(k) + "," + std::to_string(n) + "," +
                   std::to_string(g) + ") = " + inv.str();
        }
      }
  report(3, "abelianisations are Z^3, Z^4 x Z2^2 and Z^{2g+n} x Z2 as computed", ok,
         detail);
}

// 4. Gamma3 = Gamma2 for the disc mixed group.
void criterion4() {
  const SmithInvariants inv = gamma2_mod_gamma3_invariants(presentation_mixed({3, 3, 0}));
  report(4, "Gamma2/Gamma3 of the (3,3,0) mixed group is trivial",
         inv.free_rank == 0 && inv.torsion.empty(), inv.str());
}

// 5. Group laws: exhaustive identity/inverse on the {-1,0,1}^7 coordinate
// grid (g=1) plus 10^4 seeded associativity triples.
void criterion5() {
  const GroupParams p{3, 3, 1};
  bool ok = true;
  std::string detail;
  const Gamma3MixedElt id = Gamma3MixedElt::identity(p);
  std::vector<Gamma3MixedElt> grid;
  std::vector<Int> coords(7, -1);
  while (true) {
    const Gamma3MixedElt x = from_coords(p, coords);
    grid.push_back(x);
    if (!(mixed_mul(x, id) == x) || !(mixed_mul(id, x) == x) ||
        !mixed_mul(x, mixed_inv(x)).is_identity() ||
        !mixed_mul(mixed_inv(x), x).is_identity()) {
      ok = false;
      detail = x.str();
    }
    std::size_t i = 0;
    while (i < coords.size() && coords[i] == 1) coords[i++] = -1;
    if (i == coords.size()) break;
    ++coords[i];
  }
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
  for (int i = 0; i < 10000; ++i) {
    const Gamma3MixedElt &x = grid[pick(rng)], &y = grid[pick(rng)], &z = grid[pick(rng)];
    if (!(mixed_mul(mixed_mul(x, y), z) == mixed_mul(x, mixed_mul(y, z)))) {
      ok = false;
      detail = x.str() + " | " + y.str() + " | " + z.str();
    }
  }
  report(5, "identity/inverse exhaustive on the coordinate grid, 10^4 associativity "
            "triples", ok, detail);
}

// 6. Centre characterization on 1000 seeded elements.
void criterion6() {
  const GroupParams p{3, 3, 1};
  bool ok = true;
  std::string detail;
  std::mt19937_64 rng(6);
  const auto omega = full_alphabet(p);
  std::vector<Gamma3MixedElt> gen_images;
  for (const Generator& x : omega) gen_images.push_back(mixed_generator_image(x, p));
  for (int i = 0; i < 1000; ++i) {
    Gamma3MixedElt x = eval_mixed_gamma3(random_word(rng, omega, 8), p);
    if (i % 3 == 0) x = alpha_kn([&] {
      AbelElt v = AbelElt::identity({p.k, p.n, 0}, QuotientKind::MixedAbel);
      v.free_part = {x.p, x.q, x.r};
      return v;
    }(), p);
    bool commutes = true;
    for (const Gamma3MixedElt& y : gen_images)
      commutes = commutes && mixed_commutator(x, y).is_identity();
    if (commutes != is_central_mixed(x)) {
      ok = false;
      detail = x.str();
    }
  }
  report(6, "is_central_mixed agrees with commuting against all generator images",
         ok, detail);
}

// 7. Exactness: surjectivity of psi_bar and 1000 kernel certificates.
void criterion7() {
  const GroupParams p{3, 3, 1};
  const GroupParams tp{p.n, 0, p.g};
  bool ok = true;
  std::string detail;
  std::vector<std::pair<Word, Word>> hits = {
      {Word::of(sigma_t(1)), Word::of(sigma(1))},
      {Word::of(sigma_t(2)), Word::of(sigma(2))},
      {Word::of(gen_ta(1)), Word::of(gen_a(1))},
      {Word::of(gen_tb(1)), Word::of(gen_b(1))}};
  for (const auto& [src, dst] : hits)
    if (!(psi_bar(eval_mixed_gamma3(src, p)) == eval_punctured_gamma3(dst, tp))) {
      ok = false;
      detail = src.str();
    }
  std::mt19937_64 rng(7);
  const auto omega = full_alphabet(p);
  for (int i = 0; i < 1000; ++i) {
    Word w = random_word(rng, omega, 8);
    if (i % 2 == 0) w = random_word(rng, punctured_alphabet(p), 8);
    const Gamma3MixedElt x = eval_mixed_gamma3(w, p);
    const bool in_kernel =
        x.q == 0 && x.mt[0] == 0 && x.nt[0] == 0;
    const auto cert = kernel_certificate_psi_bar(x);
    if (cert.has_value() != in_kernel ||
        (cert.has_value() != psi_bar(x).is_identity()) ||
        (cert && (cert->p != x.p || cert->r != x.r || cert->m != x.m ||
                  cert->nv != x.nv))) {
      ok = false;
      detail = w.str();
    }
  }
  report(7, "psi_bar surjective on target generators, kernel certificates exact",
         ok, detail);
}

// 8. Rigidity witnesses.
void criterion8() {
  const GroupParams p{3, 3, 1};
  bool ok = true;
  std::string detail;
  for (Int s = -3; s <= 3; ++s)
    for (Int t = -3; t <= 3; ++t)
      for (Int z = -3; z <= 3; ++z) {
        AbelElt v = AbelElt::identity({p.k, p.n, 0}, QuotientKind::MixedAbel);
        v.free_part = {s, t, z};
        const Gamma3MixedElt img = alpha_kn(v, p);
        if (img.p != s || img.q != t || img.r != z || !is_central_mixed(img)) {
          ok = false;
          detail = "alpha grid";
        }
      }
  // kernel of project_hsigma on the coordinate grid: exactly sigma~ powers
  for (Int q = -5; q <= 5; ++q) {
    Gamma3MixedElt x = Gamma3MixedElt::identity(p);
    x.q = q;
    if (!project_hsigma(x).is_identity()) {
      ok = false;
      detail = "sigma~^" + std::to_string(q);
    }
  }
  std::vector<Int> coords(7, -1);
  while (true) {
    const Gamma3MixedElt x = from_coords(p, coords);
    const bool pure = x.p == 0 && x.r == 0 && x.m[0] == 0 && x.mt[0] == 0 &&
                      x.nv[0] == 0 && x.nt[0] == 0;
    if (project_hsigma(x).is_identity() != pure) {
      ok = false;
      detail = x.str();
    }
    std::size_t i = 0;
    while (i < coords.size() && coords[i] == 1) coords[i++] = -1;
    if (i == coords.size()) break;
    ++coords[i];
  }
  std::mt19937_64 rng(8);
  const auto inner = punctured_alphabet(p);
  for (int i = 0; i < 1000; ++i) {
    const Word w = random_word(rng, inner, 12);
    if (!(mk_reduce(eval_punctured_gamma3(w, p)) == eval_gk_surface(w, p))) {
      ok = false;
      detail = w.str();
    }
  }
  report(8, "alpha injective/central on [-3,3]^3, hsigma kernel = <sigma~>, "
            "mk_reduce compatible", ok, detail);
}

// 9. Non-extension checks.
void criterion9() {
  const VerificationReport r = verify_nonextension({3, 3, 1});
  const GroupParams p0{3, 3, 0};
  const bool g0_control =
      !eval_abel(parse_word("z1", p0), p0, QuotientKind::MixedAbel).is_identity();
  report(9, "non-extension: sigma_1^2 and zeta_1 obstructions, with g=0 control",
         r.all_pass() && g0_control, r.all_pass() ? "g=0 control" : "suite");
}

// 10. Witt-Hall class-2 law on 1000 seeded random triples.
void criterion10() {
  const GroupParams p{3, 3, 1};
  bool ok = true;
  std::string detail;
  std::mt19937_64 rng(10);
  const auto omega = full_alphabet(p);
  for (int i = 0; i < 1000; ++i) {
    const Gamma3MixedElt x = eval_mixed_gamma3(random_word(rng, omega, 8), p);
    const Gamma3MixedElt y = eval_mixed_gamma3(random_word(rng, omega, 8), p);
    const Gamma3MixedElt z = eval_mixed_gamma3(random_word(rng, omega, 8), p);
    if (!mixed_commutator(x, mixed_commutator(y, z)).is_identity()) {
      ok = false;
      detail = x.str();
    }
  }
  report(10, "[x,[y,z]] = 1 on 1000 random triples", ok, detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
