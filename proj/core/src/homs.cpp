#include "braidquot/homs.hpp"

#include <algorithm>

#include "braidquot/oracle.hpp"
#include "braidquot/presentation.hpp"

namespace braidquot {

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

std::size_t VerificationReport::fail_count() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(),
                    [](const CheckResult& c) { return !c.pass; }));
}

std::string VerificationReport::str() const {
  std::string out = "suite " + suite + "\n";
  for (const CheckResult& c : checks) {
    out += (c.pass ? "  pass  " : "  FAIL  ") + c.id + "  " + c.params;
    if (!c.pass) out += "  witness: " + c.witness;
    out += '\n';
  }
  out += suite + ": " + std::to_string(checks.size() - fail_count()) + "/" +
         std::to_string(checks.size()) + " checks passed\n";
  return out;
}

namespace {

std::string params_str(const GroupParams& p) {
  return "k=" + std::to_string(p.k) + " n=" + std::to_string(p.n) +
         " g=" + std::to_string(p.g);
}

class Suite {
 public:
  Suite(std::string name, const GroupParams& p)
      : params_(params_str(p)) {
    report_.suite = std::move(name);
  }

  void add(const std::string& label, bool pass, std::string witness = "") {
    char id[64];
    std::snprintf(id, sizeof id, "%s-%03zu", report_.suite.c_str(),
                  report_.checks.size() + 1);
    report_.checks.push_back(
        {std::string(id) + " " + label, params_, pass,
         pass ? std::string() : std::move(witness)});
  }

  VerificationReport take() { return std::move(report_); }

 private:
  VerificationReport report_;
  std::string params_;
};

/// psi on a free word: kills S u AB u Z, relabels tilde letters into the
/// (k'=n, n'=0) alphabet.
Word psi_word(const Word& w) {
  Word out;
  for (const Letter& l : w.letters()) {
    switch (l.gen.family) {
      case Family::SigmaTilde: out = out * Word::of(sigma(l.gen.index), l.exp); break;
      case Family::ATilde: out = out * Word::of(gen_a(l.gen.index), l.exp); break;
      case Family::BTilde: out = out * Word::of(gen_b(l.gen.index), l.exp); break;
      default: break;  // forgotten strands
    }
  }
  return out;
}

GroupParams psi_target_params(const GroupParams& p) { return {p.n, 0, p.g}; }

}  // namespace

PuncturedGamma3Elt psi_bar(const Gamma3MixedElt& x) {
  PuncturedGamma3Elt out = PuncturedGamma3Elt::identity(psi_target_params(x.params));
  out.p = x.q;
  out.m = x.mt;
  out.nv = x.nt;
  return out;
}

std::optional<GkSurfaceElt> kernel_certificate_psi_bar(const Gamma3MixedElt& x) {
  const bool in_kernel = x.q == 0 &&
                         std::all_of(x.mt.begin(), x.mt.end(), [](Int v) { return v == 0; }) &&
                         std::all_of(x.nt.begin(), x.nt.end(), [](Int v) { return v == 0; });
  if (!in_kernel) return std::nullopt;
  GkSurfaceElt cert = GkSurfaceElt::identity(x.params);
  cert.p = x.p;
  cert.r = x.r;
  cert.m = x.m;
  cert.nv = x.nv;
  return cert;
}

Gamma3MixedElt alpha_kn(const AbelElt& v, const GroupParams& params) {
  params.validate();
  if (params.k < 3 || params.n < 3 || params.g < 1)
    throw RegimeError("alpha_{k,n} needs k >= 3, n >= 3, g >= 1");
  if (v.kind != QuotientKind::MixedAbel || v.params.g != 0 || v.free_part.size() != 3)
    throw RegimeError("alpha_{k,n} domain is the g=0 mixed abelianisation Z^3");
  Gamma3MixedElt out = Gamma3MixedElt::identity(params);
  out.p = v.free_part[0];
  out.q = v.free_part[1];
  out.r = v.free_part[2];
  return out;
}

std::string GkElt::str() const {
  return "(" + std::to_string(s) + ", " + std::to_string(z) + ")";
}

GkSurfaceElt gamma_k(const GkElt& v, const GroupParams& params) {
  params.validate();
  if (params.k < 3 || params.n < 3 || params.g < 1)
    throw RegimeError("gamma_k target G_k(Sigma_g) needs k >= 3, n >= 3, g >= 1");
  GkSurfaceElt out = GkSurfaceElt::identity(params);
  out.p = v.s;
  out.r = v.z;
  return out;
}

Word random_word(std::mt19937_64& rng, const std::vector<Generator>& alphabet,
                 int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<std::size_t> gen_dist(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> exp_dist(1, 6);
  Word out;
  const int len = len_dist(rng);
  for (int i = 0; i < len; ++i) {
    const int d = exp_dist(rng);
    const Int exp = d <= 3 ? d : 3 - d;  // {1,2,3,-1,-2,-3}
    out = out * Word::of(alphabet[gen_dist(rng)], exp);
  }
  return out;
}

std::vector<Generator> full_alphabet(const GroupParams& params) {
  std::vector<Generator> out;
  for (Family f : {Family::Sigma, Family::SigmaTilde, Family::A, Family::B,
                   Family::ATilde, Family::BTilde, Family::Zeta})
    for (int i = 1; i <= Generator::family_size(f, params); ++i)
      out.push_back({f, i});
  return out;
}

std::vector<Generator> punctured_alphabet(const GroupParams& params) {
  std::vector<Generator> out;
  for (Family f : {Family::Sigma, Family::A, Family::B, Family::Zeta})
    for (int i = 1; i <= Generator::family_size(f, params); ++i)
      out.push_back({f, i});
  return out;
}

// --- suites ------------------------------------------------------------

namespace {

/// One aggregate entry: every relator of `pres` must die under `eval`.
template <typename Eval>
void relator_kill(Suite& suite, const std::string& label, const Presentation& pres,
                  Eval eval) {
  std::size_t fails = 0;
  std::string witness;
  for (const Word& r : pres.relators)
    if (!eval(r)) {
      if (witness.empty()) witness = r.str();
      ++fails;
    }
  suite.add(label + " (" + std::to_string(pres.relators.size()) + " relators)",
            fails == 0, witness);
}

}  // namespace

VerificationReport verify_relators(const GroupParams& params) {
  params.validate();
  Suite suite("relators", params);
  const GroupParams& p = params;

  relator_kill(suite, "mixed relators die in the mixed abelianisation",
               presentation_mixed(p), [&](const Word& r) {
                 return eval_abel(r, p, QuotientKind::MixedAbel).is_identity();
               });
  relator_kill(suite, "punctured relators die in the punctured abelianisation",
               presentation_punctured(p), [&](const Word& r) {
                 return eval_abel(r, p, QuotientKind::PuncturedAbel).is_identity();
               });
  if (p.k >= 3)
    relator_kill(suite, "punctured relators die in the punctured Gamma3 quotient",
                 presentation_punctured(p), [&](const Word& r) {
                   return eval_punctured_gamma3(r, p).is_identity();
                 });
  if (p.k >= 3 && p.n >= 3) {
    relator_kill(suite, "mixed relators die in the mixed Gamma3 quotient",
                 presentation_mixed(p), [&](const Word& r) {
                   return eval_mixed_gamma3(r, p).is_identity();
                 });
    relator_kill(suite, "gamma3-mixed presentation relators die",
                 presentation_quotient(p, QuotientKind::MixedGamma3),
                 [&](const Word& r) { return eval_mixed_gamma3(r, p).is_identity(); });
    relator_kill(suite, "gamma3-punctured presentation relators die",
                 presentation_quotient(p, QuotientKind::PuncturedGamma3),
                 [&](const Word& r) { return eval_punctured_gamma3(r, p).is_identity(); });
    relator_kill(suite, "hsigma presentation relators die",
                 presentation_quotient(p, QuotientKind::HSigma), [&](const Word& r) {
                   return project_hsigma(eval_mixed_gamma3(r, p)).is_identity();
                 });
    if (p.g >= 1)
      relator_kill(suite, "gk presentation relators die",
                   presentation_quotient(p, QuotientKind::GkSurface),
                   [&](const Word& r) { return eval_gk_surface(r, p).is_identity(); });
  }
  return suite.take();
}

VerificationReport verify_diagram(const GroupParams& params, std::uint64_t seed,
                                  int samples) {
  params.validate();
  if (params.k < 3 || params.n < 3 || params.g < 1)
    throw RegimeError("diagram verification needs k >= 3, n >= 3, g >= 1");
  Suite suite("diagram", params);
  std::mt19937_64 rng(seed);
  const GroupParams tp = psi_target_params(params);
  const GroupParams p0{params.k, params.n, 0};
  const auto omega = full_alphabet(params);
  const std::vector<Generator> disc_alphabet = [&] {
    std::vector<Generator> out;
    for (Family f : {Family::Sigma, Family::SigmaTilde, Family::Zeta})
      for (int i = 1; i <= Generator::family_size(f, params); ++i)
        out.push_back({f, i});
    return out;
  }();

  // psi_bar o rho = rho_base o psi, on generators then on random words.
  {
    bool ok = true;
    std::string witness;
    for (const Generator& x : omega) {
      const Word w = Word::of(x, 1);
      if (psi_bar(eval_mixed_gamma3(w, params)) !=
          eval_punctured_gamma3(psi_word(w), tp)) {
        ok = false;
        witness = x.name();
        break;
      }
    }
    suite.add("square psi_bar.rho = rho_base.psi on generators", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (int i = 0; i < samples && ok; ++i) {
      const Word w = random_word(rng, omega, 12);
      if (psi_bar(eval_mixed_gamma3(w, params)) !=
          eval_punctured_gamma3(psi_word(w), tp)) {
        ok = false;
        witness = w.str();
      }
    }
    suite.add("square psi_bar.rho = rho_base.psi on random words", ok, witness);
  }

  // alpha_{k,n} o r_{k,n} = rho_{k,n} o iota on the disc subgroup's alphabet.
  {
    bool ok = true;
    std::string witness;
    for (int i = 0; i < samples && ok; ++i) {
      const Word w = random_word(rng, disc_alphabet, 12);
      if (alpha_kn(eval_abel(w, p0, QuotientKind::MixedAbel), params) !=
          eval_mixed_gamma3(w, params)) {
        ok = false;
        witness = w.str();
      }
    }
    suite.add("square alpha.r = rho.iota on random disc words", ok, witness);
  }

  // psi_bar is a homomorphism and its kernel is certified exactly.
  {
    bool ok = true;
    std::string witness;
    for (int i = 0; i < samples && ok; ++i) {
      const Gamma3MixedElt x = eval_mixed_gamma3(random_word(rng, omega, 8), params);
      const Gamma3MixedElt y = eval_mixed_gamma3(random_word(rng, omega, 8), params);
      if (psi_bar(mixed_mul(x, y)) != punctured_mul(psi_bar(x), psi_bar(y))) {
        ok = false;
        witness = x.str() + " | " + y.str();
      }
    }
    suite.add("psi_bar is a homomorphism", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (int i = 0; i < samples && ok; ++i) {
      Word w = random_word(rng, omega, 8);
      // half the samples forced into the kernel
      if (i % 2 == 0) w = psi_word(w).empty() ? w : random_word(rng, punctured_alphabet(params), 8);
      const Gamma3MixedElt x = eval_mixed_gamma3(w, params);
      const auto cert = kernel_certificate_psi_bar(x);
      const bool trivial_image = psi_bar(x).is_identity();
      if (cert.has_value() != trivial_image ||
          (cert && (cert->p != x.p || cert->r != x.r || cert->m != x.m ||
                    cert->nv != x.nv))) {
        ok = false;
        witness = w.str();
      }
    }
    suite.add("kernel certificate iff psi_bar trivial", ok, witness);
  }

  // surjectivity: each target generator is hit by the matching tilde one.
  {
    bool ok = true;
    std::string witness;
    std::vector<std::pair<Generator, Word>> hits;
    for (int i = 1; i <= tp.k - 1; ++i) hits.push_back({sigma(i), Word::of(sigma_t(i), 1)});
    for (int i = 1; i <= tp.g; ++i) {
      hits.push_back({gen_a(i), Word::of(gen_ta(i), 1)});
      hits.push_back({gen_b(i), Word::of(gen_tb(i), 1)});
    }
    for (const auto& [target, source] : hits) {
      if (psi_bar(eval_mixed_gamma3(source, params)) !=
          eval_punctured_gamma3(Word::of(target, 1), tp)) {
        ok = false;
        witness = target.name();
        break;
      }
    }
    suite.add("psi_bar hits every target generator", ok, witness);
  }

  // gamma_k agrees with alpha_{k,n} restricted to the kernel, and with
  // the generator square sigma_1 -> sigma, zeta_1 -> zeta.
  {
    bool ok = true;
    std::string witness;
    for (Int s = -3; s <= 3 && ok; ++s)
      for (Int z = -3; z <= 3 && ok; ++z) {
        AbelElt v = AbelElt::identity(p0, QuotientKind::MixedAbel);
        v.free_part = {s, 0, z};
        const auto cert = kernel_certificate_psi_bar(alpha_kn(v, params));
        if (!cert || *cert != gamma_k({s, z}, params)) {
          ok = false;
          witness = GkElt{s, z}.str();
        }
      }
    if (ok && gamma_k({1, 0}, params) != eval_gk_surface(Word::of(sigma(1), 1), params)) {
      ok = false;
      witness = "s1";
    }
    if (ok && gamma_k({0, 1}, params) != eval_gk_surface(Word::of(zeta(1), 1), params)) {
      ok = false;
      witness = "z1";
    }
    suite.add("gamma_k = alpha restricted to the kernel", ok, witness);
  }

  return suite.take();
}

VerificationReport verify_rigidity(const GroupParams& params, std::uint64_t seed,
                                   int samples) {
  params.validate();
  if (params.k < 3 || params.n < 3 || params.g < 1)
    throw RegimeError("rigidity verification needs k >= 3, n >= 3, g >= 1");
  Suite suite("rigidity", params);
  std::mt19937_64 rng(seed);
  const auto omega = full_alphabet(params);
  std::vector<Gamma3MixedElt> gen_images;
  for (const Generator& x : omega)
    gen_images.push_back(mixed_generator_image(x, params));

  // (1) centre = image of alpha_{k,n}, checked semantically against the
  // multiplication on random elements.
  {
    bool ok = true;
    std::string witness;
    for (int i = 0; i < samples && ok; ++i) {
      Word w = random_word(rng, omega, 8);
      Gamma3MixedElt x = eval_mixed_gamma3(w, params);
      if (i % 3 == 0) {  // force some central samples
        x.m.assign(x.m.size(), 0);
        x.mt.assign(x.mt.size(), 0);
        x.nv.assign(x.nv.size(), 0);
        x.nt.assign(x.nt.size(), 0);
      }
      const bool commutes_all =
          std::all_of(gen_images.begin(), gen_images.end(), [&](const Gamma3MixedElt& y) {
            return mixed_commutator(x, y).is_identity();
          });
      bool in_alpha_image = false;
      if (is_central_mixed(x)) {
        AbelElt v = AbelElt::identity({params.k, params.n, 0}, QuotientKind::MixedAbel);
        v.free_part = {x.p, x.q, x.r};
        in_alpha_image = alpha_kn(v, params) == x;
      }
      if (commutes_all != is_central_mixed(x) || commutes_all != in_alpha_image) {
        ok = false;
        witness = x.str();
      }
    }
    suite.add("centre = alpha image (randomized, both directions)", ok, witness);
  }

  // alpha injective on the grid [-3,3]^3: basis goes to centre basis.
  {
    bool ok = true;
    std::string witness;
    for (Int s = -3; s <= 3 && ok; ++s)
      for (Int t = -3; t <= 3 && ok; ++t)
        for (Int z = -3; z <= 3 && ok; ++z) {
          AbelElt v = AbelElt::identity({params.k, params.n, 0}, QuotientKind::MixedAbel);
          v.free_part = {s, t, z};
          const Gamma3MixedElt img = alpha_kn(v, params);
          if (img.p != s || img.q != t || img.r != z || !is_central_mixed(img)) {
            ok = false;
            witness = "(" + std::to_string(s) + "," + std::to_string(t) + "," +
                      std::to_string(z) + ")";
          }
        }
    suite.add("alpha injective and central on the [-3,3]^3 grid", ok, witness);
  }

  // (2) ker(project_hsigma) = <sigma~>.
  {
    bool ok = true;
    std::string witness;
    for (Int l = -5; l <= 5 && ok; ++l) {
      Gamma3MixedElt x = Gamma3MixedElt::identity(params);
      x.q = l;
      if (!project_hsigma(x).is_identity()) {
        ok = false;
        witness = "ts^" + std::to_string(l);
      }
    }
    for (int i = 0; i < samples && ok; ++i) {
      const Gamma3MixedElt x = eval_mixed_gamma3(random_word(rng, omega, 8), params);
      const bool pure_sigma_t =
          x.p == 0 && x.r == 0 && is_central_mixed(x);
      if (project_hsigma(x).is_identity() != pure_sigma_t) {
        ok = false;
        witness = x.str();
      }
    }
    suite.add("kernel of project_hsigma is exactly <sigma~>", ok, witness);
  }

  // (3) collapse: all sigma_i, all sigma~_i, all zeta_i share one image.
  {
    bool ok = true;
    std::string witness;
    auto all_equal = [&](Family f) {
      const int sz = Generator::family_size(f, params);
      for (int i = 2; i <= sz; ++i)
        if (eval_mixed_gamma3(Word::of({f, i}, 1), params) !=
            eval_mixed_gamma3(Word::of({f, 1}, 1), params)) {
          witness = Generator{f, i}.name();
          return false;
        }
      return true;
    };
    ok = all_equal(Family::Sigma) && all_equal(Family::SigmaTilde) &&
         all_equal(Family::Zeta);
    suite.add("sigma_i, sigma~_i, zeta_i collapse to single images", ok, witness);
  }

  // (4) mk_reduce: M_k(Sigma_g) (one puncture) -> G_k(Sigma_g) bijective
  // on coordinates, and compatible with evaluation for the given n.
  {
    bool ok = true;
    std::string witness;
    const GroupParams mk{params.k, 1, params.g};
    for (Int p = -2; p <= 2 && ok; ++p)
      for (Int q = -2; q <= 2 && ok; ++q)
        for (Int m1 = -1; m1 <= 1 && ok; ++m1)
          for (Int n1 = -1; n1 <= 1 && ok; ++n1) {
            PuncturedGamma3Elt x = PuncturedGamma3Elt::identity(mk);
            x.p = p;
            x.qz[0] = q;
            x.m[0] = m1;
            x.nv[0] = n1;
            const GkSurfaceElt y = mk_reduce(x);
            if (y.p != p || y.r != q || y.m[0] != m1 || y.nv[0] != n1) {
              ok = false;
              witness = x.str();
            }
          }
    suite.add("mk_reduce is a coordinate bijection for n = 1", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    const auto inner = punctured_alphabet(params);
    for (int i = 0; i < samples && ok; ++i) {
      const Word w = random_word(rng, inner, 12);
      if (mk_reduce(eval_punctured_gamma3(w, params)) != eval_gk_surface(w, params)) {
        ok = false;
        witness = w.str();
      }
    }
    suite.add("mk_reduce . eval_punctured = eval_gk on random words", ok, witness);
  }

  return suite.take();
}

VerificationReport verify_nonextension(const GroupParams& params) {
  params.validate();
  if (params.g < 1 || params.k < 2 || params.n < 1)
    throw RegimeError("non-extension checks need g >= 1, k >= 2, n >= 1");
  Suite suite("nonextension", params);

  // (1) sigma_1^2 dies in the abelianisation of B_k(Sigma_{g,n}) yet
  // p_k(sigma_1)^2 = (2, 0) is nontrivial in G_k: no injective j_k can
  // close the square.
  {
    const bool abel_kills =
        eval_abel(parse_word("s1^2", params), params, QuotientKind::PuncturedAbel)
            .is_identity();
    const GkElt pk_sq{2, 0};
    suite.add("sigma_1^2 trivial in abelianisation, (2,0) nontrivial in G_k",
              abel_kills && !(pk_sq == GkElt{}),
              abel_kills ? "p_k(s1)^2 = " + pk_sq.str() : "s1^2 survives");
  }

  // (2) zeta_1 dies in the g >= 1 mixed abelianisation but not in the
  // g = 0 one.
  {
    const bool killed =
        eval_abel(parse_word("z1", params), params, QuotientKind::MixedAbel)
            .is_identity();
    const GroupParams p0{params.k, params.n, 0};
    const bool survives_disc =
        !eval_abel(parse_word("z1", p0), p0, QuotientKind::MixedAbel).is_identity();
    suite.add("zeta_1 trivial for g >= 1, nontrivial for g = 0",
              killed && survives_disc, "z1");
  }

  // (3) the relation a~_1 b_1 a~_1^-1 = b_1 zeta_1 forces any
  // conjugation-invariant abelian map to kill zeta_1.
  {
    const Word conj = act_outer(gen_ta(1), Word::of(gen_b(1), 1), params);
    const AbelElt lhs = eval_abel(conj, params, QuotientKind::MixedAbel);
    const AbelElt rhs = eval_abel(Word::of(gen_b(1), 1), params, QuotientKind::MixedAbel);
    const bool zeta_dead =
        eval_abel(Word::of(zeta(1), 1), params, QuotientKind::MixedAbel).is_identity();
    const bool lhs_eq = lhs.free_part == rhs.free_part && lhs.torsion2 == rhs.torsion2;
    suite.add("act_outer(ta1, b1) abelianises to b1, killing zeta_1",
              lhs_eq && zeta_dead, conj.str());
  }

  return suite.take();
}

VerificationReport verify_oracle_agreement(const GroupParams& params,
                                           std::uint64_t seed, int samples) {
  params.validate();
  if (params.k < 3 || params.n < 3)
    throw RegimeError("oracle agreement needs k >= 3 and n >= 3");
  Suite suite("oracle-agreement", params);
  std::mt19937_64 rng(seed);
  const Presentation pres = presentation_mixed(params);
  const IntLattice lat = class2_quotient_lattice(pres);
  const auto omega = full_alphabet(params);

  int agreements = 0;
  std::string witness;
  for (int i = 0; i < samples; ++i) {
    Word u = random_word(rng, omega, 12);
    Word v = random_word(rng, omega, 12);
    if (i % 4 == 0) v = u * random_word(rng, omega, 2);  // bias toward near-equal pairs
    const bool nf_equal =
        eval_mixed_gamma3(u, params) == eval_mixed_gamma3(v, params);
    const bool oracle_equal = is_trivial_class2(pres, lat, u * invert(v));
    if (nf_equal == oracle_equal)
      ++agreements;
    else if (witness.empty())
      witness = u.str() + "  vs  " + v.str();
  }
  suite.add("eval_mixed_gamma3 equality matches class-2 oracle (" +
                std::to_string(agreements) + "/" + std::to_string(samples) + ")",
            agreements == samples, witness);
  return suite.take();
}

}  // namespace braidquot
