#include "braidquot/presentation.hpp"

#include <algorithm>

namespace braidquot {

const char* quotient_kind_name(QuotientKind kind) {
  switch (kind) {
    case QuotientKind::MixedFull: return "mixed";
    case QuotientKind::MixedAbel: return "abel-mixed";
    case QuotientKind::MixedGamma3: return "gamma3-mixed";
    case QuotientKind::PuncturedFull: return "punctured";
    case QuotientKind::PuncturedAbel: return "abel-punctured";
    case QuotientKind::PuncturedGamma3: return "gamma3-punctured";
    case QuotientKind::BaseFull: return "base";
    case QuotientKind::GkSurface: return "gk";
    case QuotientKind::HSigma: return "hsigma";
  }
  return "?";
}

namespace {

Word W(Generator g, Int e = 1) { return Word::of(g, e); }

/// lhs = rhs encoded as the single relator lhs * rhs^-1, letters kept
/// in the printed reading order (no reduction).
Word rel(const Word& lhs, const Word& rhs) { return lhs * invert(rhs); }

/// Relations (a.1)-(a.8) / (b.1)-(b.6) share their braid part; the
/// families are Sigma/A/B for the punctured group, the tilde ones for
/// the base group. `strands` is k (resp. n); Z relations only exist in
/// the punctured group.
struct SurfaceBraidRelations {
  Family fs, fa, fb;
  int strands;      // number of strands for this copy
  int g;
  int n_z;          // size of Z, 0 to suppress all Z relations

  Generator s(int i) const { return {fs, i}; }
  Generator a(int i) const { return {fa, i}; }
  Generator b(int i) const { return {fb, i}; }

  std::vector<Generator> ab_list() const {
    std::vector<Generator> out;
    for (int i = 1; i <= g; ++i) {
      out.push_back(a(i));
      out.push_back(b(i));
    }
    return out;
  }

  std::vector<Generator> abz_list() const {
    std::vector<Generator> out = ab_list();
    for (int i = 1; i <= n_z; ++i) out.push_back(zeta(i));
    return out;
  }

  void emit(std::vector<Word>& rels) const {
    const int kk = strands;
    if (kk < 2) return;  // no sigma generators: every relation here references one

    // (a.1) sigma_i sigma_j = sigma_j sigma_i, |i-j| >= 2
    for (int i = 1; i <= kk - 1; ++i)
      for (int j = i + 2; j <= kk - 1; ++j)
        rels.push_back(rel(W(s(i)) * W(s(j)), W(s(j)) * W(s(i))));
    // (a.2) braid relation
    for (int i = 1; i <= kk - 2; ++i)
      rels.push_back(rel(W(s(i)) * W(s(i + 1)) * W(s(i)),
                         W(s(i + 1)) * W(s(i)) * W(s(i + 1))));
    // (a.3) c sigma_i = sigma_i c, i != 1
    for (int i = 2; i <= kk - 1; ++i)
      for (Generator c : abz_list())
        rels.push_back(rel(W(c) * W(s(i)), W(s(i)) * W(c)));
    // (a.4) c sigma_1 c sigma_1 = sigma_1 c sigma_1 c
    for (Generator c : abz_list())
      rels.push_back(rel(W(c) * W(s(1)) * W(c) * W(s(1)),
                         W(s(1)) * W(c) * W(s(1)) * W(c)));
    // (a.5) a_i sigma_1 b_i = sigma_1 b_i sigma_1 a_i sigma_1
    for (int i = 1; i <= g; ++i)
      rels.push_back(rel(W(a(i)) * W(s(1)) * W(b(i)),
                         W(s(1)) * W(b(i)) * W(s(1)) * W(a(i)) * W(s(1))));
    // (a.6) (sigma_1^-1 c sigma_1) d = d (sigma_1^-1 c sigma_1), c < d in AB
    for (int i = 1; i <= g; ++i)
      for (int j = i + 1; j <= g; ++j)
        for (Generator c : {a(i), b(i)})
          for (Generator d : {a(j), b(j)}) {
            Word csc = W(s(1), -1) * W(c) * W(s(1));
            rels.push_back(rel(csc * W(d), W(d) * csc));
          }
    // (a.7) (sigma_1^-1 zeta_i sigma_1) c = c (sigma_1^-1 zeta_i sigma_1), c in AB
    for (int i = 1; i <= n_z; ++i)
      for (Generator c : ab_list()) {
        Word zsz = W(s(1), -1) * W(zeta(i)) * W(s(1));
        rels.push_back(rel(zsz * W(c), W(c) * zsz));
      }
    // (a.8) (sigma_1^-1 zeta_i sigma_1) zeta_j = zeta_j (sigma_1^-1 zeta_i sigma_1), i < j
    for (int i = 1; i <= n_z; ++i)
      for (int j = i + 1; j <= n_z; ++j) {
        Word zsz = W(s(1), -1) * W(zeta(i)) * W(s(1));
        rels.push_back(rel(zsz * W(zeta(j)), W(zeta(j)) * zsz));
      }
  }
};

/// Image of a single inner letter x under conjugation by an outer
/// generator, per (c.1)-(c.8). Exponent +1 letters only; callers raise
/// to powers afterwards.
Word outer_image(const Generator& out, const Generator& x) {
  const Word xw = W(x);
  const Word z1 = W(zeta(1));
  switch (out.family) {
    case Family::SigmaTilde: {
      const int i = out.index;
      if (x.family == Family::Zeta) {
        if (x.index == i + 1) return W(zeta(i));                         // (c.3.1)
        if (x.index == i)                                                // (c.3.2)
          return W(zeta(i), -1) * W(zeta(i + 1)) * W(zeta(i));
        return xw;                                                       // (c.3.3)
      }
      return xw;  // (c.1), (c.2)
    }
    case Family::ATilde: {
      const int i = out.index;
      const Word bracket = commutator(W(gen_a(i), -1), invert(z1));  // [a_i^-1, z1^-1]
      switch (x.family) {
        case Family::Sigma: return xw;                                   // (c.1)
        case Family::A:
          if (x.index == i) return conjugate(xw, z1);                    // (c.5.1)
          if (x.index < i) return conjugate(xw, bracket);                // (c.5.2)
          return xw;                                                     // (c.5.3)
        case Family::B:
          if (x.index == i) return free_reduce(xw * z1);                 // (c.7.1)
          if (x.index < i) return conjugate(xw, bracket);                // (c.7.2)
          return xw;                                                     // (c.7.3)
        case Family::Zeta:
          if (x.index == 1)                                              // (c.4.1)
            return conjugate(z1, free_reduce(W(gen_a(i)) * z1));
          return conjugate(xw, bracket);                                 // (c.4.3)
        default: break;
      }
      break;
    }
    case Family::BTilde: {
      const int i = out.index;
      const Word bracket = commutator(W(gen_b(i), -1), invert(z1));  // [b_i^-1, z1^-1]
      switch (x.family) {
        case Family::Sigma: return xw;                                   // (c.1)
        case Family::A:
          if (x.index == i)                                              // (c.8.1)
            return free_reduce(invert(z1) * xw * bracket);
          if (x.index < i) return conjugate(xw, bracket);                // (c.8.2)
          return xw;                                                     // (c.8.3)
        case Family::B:
          if (x.index == i) return conjugate(xw, z1);                    // (c.6.1)
          if (x.index < i) return conjugate(xw, bracket);                // (c.6.2)
          return xw;                                                     // (c.6.3)
        case Family::Zeta:
          if (x.index == 1)                                              // (c.4.2)
            return conjugate(z1, free_reduce(W(gen_b(i)) * z1));
          return conjugate(xw, bracket);                                 // (c.4.4)
        default: break;
      }
      break;
    }
    default: break;
  }
  throw AlphabetError("no outer action of " + out.name() + " on " + x.name());
}

void emit_c_relations(const GroupParams& p, std::vector<Word>& rels) {
  auto conj_rel = [&](Generator out, Generator x) {
    rels.push_back(W(out) * W(x) * W(out, -1) * invert(outer_image(out, x)));
  };
  // (c.1) outer gen conjugates sigma_j trivially
  for (int i = 1; i <= p.n - 1; ++i)
    for (int j = 1; j <= p.k - 1; ++j) conj_rel(sigma_t(i), sigma(j));
  for (int i = 1; i <= p.g; ++i)
    for (int j = 1; j <= p.k - 1; ++j) conj_rel(gen_ta(i), sigma(j));
  for (int i = 1; i <= p.g; ++i)
    for (int j = 1; j <= p.k - 1; ++j) conj_rel(gen_tb(i), sigma(j));
  // (c.2) sigma~_i fixes a_j, b_j
  for (int i = 1; i <= p.n - 1; ++i)
    for (int j = 1; j <= p.g; ++j) {
      conj_rel(sigma_t(i), gen_a(j));
      conj_rel(sigma_t(i), gen_b(j));
    }
  // (c.3) sigma~_i permutes the zeta's
  for (int i = 1; i <= p.n - 1; ++i) {
    conj_rel(sigma_t(i), zeta(i + 1));  // (c.3.1)
    conj_rel(sigma_t(i), zeta(i));      // (c.3.2)
    for (int j = 1; j <= p.n; ++j)      // (c.3.3)
      if (j != i && j != i + 1) conj_rel(sigma_t(i), zeta(j));
  }
  // (c.4)
  for (int i = 1; i <= p.g; ++i)
    if (p.n >= 1) conj_rel(gen_ta(i), zeta(1));  // (c.4.1)
  for (int i = 1; i <= p.g; ++i)
    if (p.n >= 1) conj_rel(gen_tb(i), zeta(1));  // (c.4.2)
  for (int i = 1; i <= p.g; ++i)
    for (int j = 2; j <= p.n; ++j) conj_rel(gen_ta(i), zeta(j));  // (c.4.3)
  for (int i = 1; i <= p.g; ++i)
    for (int j = 2; j <= p.n; ++j) conj_rel(gen_tb(i), zeta(j));  // (c.4.4)
  // (c.5)-(c.8): outer surface generators on inner surface generators.
  // Each sub-relation block ascending in (i, j). (c.4.1)-(c.8.1) need
  // zeta_1, hence n >= 1 (they alter the target by zeta_1 factors).
  auto emit_block = [&](Family outer_fam, Family inner_fam) {
    for (int i = 1; i <= p.g; ++i)
      if (p.n >= 1) conj_rel({outer_fam, i}, {inner_fam, i});  // (c.x.1)
    for (int i = 1; i <= p.g; ++i)
      for (int j = 1; j < i; ++j)
        if (p.n >= 1) conj_rel({outer_fam, i}, {inner_fam, j});  // (c.x.2)
    for (int i = 1; i <= p.g; ++i)
      for (int j = i + 1; j <= p.g; ++j)
        conj_rel({outer_fam, i}, {inner_fam, j});  // (c.x.3)
  };
  emit_block(Family::ATilde, Family::A);   // (c.5)
  emit_block(Family::BTilde, Family::B);   // (c.6)
  emit_block(Family::ATilde, Family::B);   // (c.7)
  emit_block(Family::BTilde, Family::A);   // (c.8)
}

std::vector<Generator> generators_for(const GroupParams& p, bool inner, bool outer,
                                      bool with_z) {
  std::vector<Generator> gens;
  if (inner)
    for (int i = 1; i <= p.k - 1; ++i) gens.push_back(sigma(i));
  if (outer)
    for (int i = 1; i <= p.n - 1; ++i) gens.push_back(sigma_t(i));
  if (inner)
    for (int i = 1; i <= p.g; ++i) {
      gens.push_back(gen_a(i));
      gens.push_back(gen_b(i));
    }
  if (outer)
    for (int i = 1; i <= p.g; ++i) {
      gens.push_back(gen_ta(i));
      gens.push_back(gen_tb(i));
    }
  if (with_z)
    for (int i = 1; i <= p.n; ++i) gens.push_back(zeta(i));
  return gens;
}

}  // namespace

Presentation presentation_punctured(const GroupParams& params) {
  params.validate();
  Presentation pres{params, generators_for(params, true, false, true), {}};
  SurfaceBraidRelations rel{Family::Sigma, Family::A, Family::B,
                            params.k, params.g, params.n};
  rel.emit(pres.relators);
  return pres;
}

Presentation presentation_base(const GroupParams& params) {
  params.validate();
  if (params.n < 1) throw RegimeError("base group needs n >= 1");
  Presentation pres{params, generators_for(params, false, true, false), {}};
  SurfaceBraidRelations rel{Family::SigmaTilde, Family::ATilde, Family::BTilde,
                            params.n, params.g, 0};
  rel.emit(pres.relators);
  return pres;
}

Presentation presentation_mixed(const GroupParams& params) {
  params.validate();
  if (params.n < 1) throw RegimeError("mixed group needs n >= 1");
  Presentation pres{params, generators_for(params, true, true, true), {}};
  SurfaceBraidRelations inner{Family::Sigma, Family::A, Family::B,
                              params.k, params.g, params.n};
  inner.emit(pres.relators);
  SurfaceBraidRelations outer{Family::SigmaTilde, Family::ATilde, Family::BTilde,
                              params.n, params.g, 0};
  outer.emit(pres.relators);
  emit_c_relations(params, pres.relators);
  return pres;
}

namespace {

/// Collapsed-alphabet presentations: commutators for every unordered
/// generator pair except the listed exceptions, plus the exceptional
/// commutator values. Pairs enumerated in generator-list order.
Presentation commuting_presentation(const GroupParams& params,
                                    std::vector<Generator> gens,
                                    const std::vector<std::pair<Generator, Generator>>& skip,
                                    std::vector<Word> extra) {
  Presentation pres{params, std::move(gens), {}};
  auto skipped = [&](Generator x, Generator y) {
    for (const auto& [u, v] : skip)
      if ((u == x && v == y) || (u == y && v == x)) return true;
    return false;
  };
  for (std::size_t i = 0; i < pres.generators.size(); ++i)
    for (std::size_t j = i + 1; j < pres.generators.size(); ++j)
      if (!skipped(pres.generators[i], pres.generators[j]))
        pres.relators.push_back(
            commutator(W(pres.generators[i]), W(pres.generators[j])));
  for (Word& w : extra) pres.relators.push_back(std::move(w));
  return pres;
}

}  // namespace

Presentation presentation_quotient(const GroupParams& params, QuotientKind kind) {
  params.validate();
  const int k = params.k, n = params.n, g = params.g;
  switch (kind) {
    case QuotientKind::MixedFull: return presentation_mixed(params);
    case QuotientKind::PuncturedFull: return presentation_punctured(params);
    case QuotientKind::BaseFull: return presentation_base(params);

    case QuotientKind::MixedAbel: {
      if (n < 1) throw RegimeError("abel-mixed needs n >= 1");
      std::vector<Generator> gens;
      if (k >= 2) gens.push_back(sigma(1));
      if (n >= 2) gens.push_back(sigma_t(1));
      if (g == 0) gens.push_back(zeta(1));
      for (int i = 1; i <= g; ++i) {
        gens.push_back(gen_a(i));
        gens.push_back(gen_b(i));
      }
      for (int i = 1; i <= g; ++i) {
        gens.push_back(gen_ta(i));
        gens.push_back(gen_tb(i));
      }
      std::vector<Word> extra;
      if (g >= 1) {
        if (k >= 2) extra.push_back(W(sigma(1), 2));
        if (n >= 2) extra.push_back(W(sigma_t(1), 2));
      }
      return commuting_presentation(params, std::move(gens), {}, std::move(extra));
    }

    case QuotientKind::PuncturedAbel: {
      std::vector<Generator> gens;
      if (k >= 2) gens.push_back(sigma(1));
      for (int i = 1; i <= g; ++i) {
        gens.push_back(gen_a(i));
        gens.push_back(gen_b(i));
      }
      for (int i = 1; i <= n; ++i) gens.push_back(zeta(i));
      std::vector<Word> extra;
      if (g >= 1 && k >= 2) extra.push_back(W(sigma(1), 2));
      return commuting_presentation(params, std::move(gens), {}, std::move(extra));
    }

    case QuotientKind::MixedGamma3: {
      if (k < 3 || n < 3)
        throw RegimeError("gamma3-mixed needs k >= 3 and n >= 3 (the collapse of the "
                          "sigma_i requires three strands)");
      std::vector<Generator> gens = {sigma(1), sigma_t(1), zeta(1)};
      for (int i = 1; i <= g; ++i) {
        gens.push_back(gen_a(i));
        gens.push_back(gen_b(i));
      }
      for (int i = 1; i <= g; ++i) {
        gens.push_back(gen_ta(i));
        gens.push_back(gen_tb(i));
      }
      std::vector<std::pair<Generator, Generator>> skip;
      std::vector<Word> extra;
      for (int i = 1; i <= g; ++i) {
        skip.push_back({gen_a(i), gen_b(i)});
        skip.push_back({gen_ta(i), gen_tb(i)});
        skip.push_back({gen_b(i), gen_ta(i)});
        skip.push_back({gen_tb(i), gen_a(i)});
        extra.push_back(commutator(W(gen_a(i)), W(gen_b(i))) * W(sigma(1), -2));
        extra.push_back(commutator(W(gen_ta(i)), W(gen_tb(i))) * W(sigma_t(1), -2));
        extra.push_back(commutator(W(gen_a(i)), W(gen_tb(i))) * W(zeta(1), -1));
        extra.push_back(commutator(W(gen_ta(i)), W(gen_b(i))) * W(zeta(1), -1));
      }
      return commuting_presentation(params, std::move(gens), skip, std::move(extra));
    }

    case QuotientKind::PuncturedGamma3: {
      if (k < 3)
        throw RegimeError("gamma3-punctured needs k >= 3 (the collapse of the sigma_i "
                          "requires three strands)");
      std::vector<Generator> gens = {sigma(1)};
      for (int i = 1; i <= g; ++i) {
        gens.push_back(gen_a(i));
        gens.push_back(gen_b(i));
      }
      for (int i = 1; i <= n; ++i) gens.push_back(zeta(i));
      std::vector<std::pair<Generator, Generator>> skip;
      std::vector<Word> extra;
      for (int i = 1; i <= g; ++i) {
        skip.push_back({gen_a(i), gen_b(i)});
        extra.push_back(commutator(W(gen_a(i)), W(gen_b(i))) * W(sigma(1), -2));
      }
      return commuting_presentation(params, std::move(gens), skip, std::move(extra));
    }

    case QuotientKind::GkSurface: {
      if (k < 3 || n < 3) throw RegimeError("gk needs k >= 3 and n >= 3");
      if (g < 1) throw RegimeError("gk needs g >= 1");
      std::vector<Generator> gens = {sigma(1), zeta(1)};
      for (int i = 1; i <= g; ++i) {
        gens.push_back(gen_a(i));
        gens.push_back(gen_b(i));
      }
      std::vector<std::pair<Generator, Generator>> skip;
      std::vector<Word> extra;
      for (int i = 1; i <= g; ++i) {
        skip.push_back({gen_a(i), gen_b(i)});
        extra.push_back(commutator(W(gen_a(i)), W(gen_b(i))) * W(sigma(1), -2));
      }
      return commuting_presentation(params, std::move(gens), skip, std::move(extra));
    }

    case QuotientKind::HSigma: {
      if (k < 3 || n < 3) throw RegimeError("hsigma needs k >= 3 and n >= 3");
      std::vector<Generator> gens = {sigma(1), zeta(1)};
      for (int i = 1; i <= g; ++i) {
        gens.push_back(gen_a(i));
        gens.push_back(gen_b(i));
      }
      for (int i = 1; i <= g; ++i) {
        gens.push_back(gen_ta(i));
        gens.push_back(gen_tb(i));
      }
      // sigma~ = 1 kills the [a~_i, b~_i] = sigma~^2 obstruction, so the
      // tilde pairs commute in H_Sigma.
      std::vector<std::pair<Generator, Generator>> skip;
      std::vector<Word> extra;
      for (int i = 1; i <= g; ++i) {
        skip.push_back({gen_a(i), gen_b(i)});
        skip.push_back({gen_b(i), gen_ta(i)});
        skip.push_back({gen_tb(i), gen_a(i)});
        extra.push_back(commutator(W(gen_a(i)), W(gen_b(i))) * W(sigma(1), -2));
        extra.push_back(commutator(W(gen_a(i)), W(gen_tb(i))) * W(zeta(1), -1));
        extra.push_back(commutator(W(gen_ta(i)), W(gen_b(i))) * W(zeta(1), -1));
      }
      return commuting_presentation(params, std::move(gens), skip, std::move(extra));
    }
  }
  throw RegimeError("unknown quotient kind");
}

Word act_outer(const Generator& gen, const Word& w, const GroupParams& params) {
  params.validate();
  if (!gen.is_tilde())
    throw AlphabetError("act_outer needs an outer generator, got " + gen.name());
  if (!gen.valid_for(params))
    throw AlphabetError("generator " + gen.name() + " invalid for these parameters");
  Word out;
  for (const Letter& l : w.letters()) {
    if (l.gen.is_tilde())
      throw AlphabetError("act_outer operand must lie in S u AB u Z; found " +
                          l.gen.name());
    if (!l.gen.valid_for(params))
      throw AlphabetError("generator " + l.gen.name() + " invalid for these parameters");
    out = out * word_pow(outer_image(gen, l.gen), l.exp);
  }
  return free_reduce(out);
}

}  // namespace braidquot
