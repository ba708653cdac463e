#include "braidquot/quotients.hpp"

#include <algorithm>
#include <numeric>

namespace braidquot {

namespace {

std::vector<Int> add_vec(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return out;
}

std::vector<Int> neg_vec(const std::vector<Int>& a) {
  std::vector<Int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_neg(a[i]);
  return out;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    acc = checked_add(acc, checked_mul(a[i], b[i]));
  return acc;
}

bool all_zero(const std::vector<Int>& a) {
  return std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; });
}

void append_factor(std::string& out, const std::string& name, Int e) {
  if (e == 0) return;
  if (!out.empty()) out += ' ';
  out += name;
  if (e != 1) out += '^' + std::to_string(e);
}

std::string finish(std::string s) { return s.empty() ? "1" : s; }

void require_same_params(const GroupParams& a, const GroupParams& b) {
  if (!(a == b)) throw RegimeError("elements belong to different parameter triples");
}

}  // namespace

// --- Gamma3MixedElt ----------------------------------------------------

Gamma3MixedElt Gamma3MixedElt::identity(const GroupParams& params) {
  params.validate();
  const std::size_t g = static_cast<std::size_t>(params.g);
  return Gamma3MixedElt{params, 0, 0, 0,
                        std::vector<Int>(g, 0), std::vector<Int>(g, 0),
                        std::vector<Int>(g, 0), std::vector<Int>(g, 0)};
}

bool Gamma3MixedElt::is_identity() const {
  return p == 0 && q == 0 && r == 0 && all_zero(m) && all_zero(mt) &&
         all_zero(nv) && all_zero(nt);
}

std::string Gamma3MixedElt::str() const {
  std::string out;
  append_factor(out, "s", p);
  append_factor(out, "ts", q);
  append_factor(out, "z", r);
  for (int i = 0; i < params.g; ++i) {
    append_factor(out, "a" + std::to_string(i + 1), m[i]);
    append_factor(out, "ta" + std::to_string(i + 1), mt[i]);
  }
  for (int i = 0; i < params.g; ++i) {
    append_factor(out, "b" + std::to_string(i + 1), nv[i]);
    append_factor(out, "tb" + std::to_string(i + 1), nt[i]);
  }
  return finish(out);
}

Gamma3MixedElt mixed_mul(const Gamma3MixedElt& x, const Gamma3MixedElt& y) {
  require_same_params(x.params, y.params);
  Gamma3MixedElt out = Gamma3MixedElt::identity(x.params);
  // Collecting x's b-block past y's a-block contributes central factors:
  // b_j a_j = sigma^-2 a_j b_j,  b_j a~_j = zeta^-1 a~_j b_j,
  // b~_j a~_j = sigma~^-2 a~_j b~_j,  b~_j a_j = zeta^-1 a_j b~_j.
  out.p = checked_sub(checked_add(x.p, y.p), checked_mul(2, dot(x.nv, y.m)));
  out.q = checked_sub(checked_add(x.q, y.q), checked_mul(2, dot(x.nt, y.mt)));
  out.r = checked_sub(checked_sub(checked_add(x.r, y.r), dot(x.nv, y.mt)),
                      dot(x.nt, y.m));
  out.m = add_vec(x.m, y.m);
  out.mt = add_vec(x.mt, y.mt);
  out.nv = add_vec(x.nv, y.nv);
  out.nt = add_vec(x.nt, y.nt);
  return out;
}

Gamma3MixedElt mixed_inv(const Gamma3MixedElt& x) {
  Gamma3MixedElt out = Gamma3MixedElt::identity(x.params);
  out.m = neg_vec(x.m);
  out.mt = neg_vec(x.mt);
  out.nv = neg_vec(x.nv);
  out.nt = neg_vec(x.nt);
  out.p = checked_sub(checked_neg(x.p), checked_mul(2, dot(x.nv, x.m)));
  out.q = checked_sub(checked_neg(x.q), checked_mul(2, dot(x.nt, x.mt)));
  out.r = checked_sub(checked_sub(checked_neg(x.r), dot(x.nv, x.mt)),
                      dot(x.nt, x.m));
  return out;
}

Gamma3MixedElt mixed_commutator(const Gamma3MixedElt& x, const Gamma3MixedElt& y) {
  return mixed_mul(mixed_mul(x, y), mixed_mul(mixed_inv(x), mixed_inv(y)));
}

bool is_central_mixed(const Gamma3MixedElt& x) {
  return all_zero(x.m) && all_zero(x.mt) && all_zero(x.nv) && all_zero(x.nt);
}

// --- PuncturedGamma3Elt -------------------------------------------------

PuncturedGamma3Elt PuncturedGamma3Elt::identity(const GroupParams& params) {
  params.validate();
  const std::size_t g = static_cast<std::size_t>(params.g);
  return PuncturedGamma3Elt{params, 0, std::vector<Int>(params.n, 0),
                            std::vector<Int>(g, 0), std::vector<Int>(g, 0)};
}

bool PuncturedGamma3Elt::is_identity() const {
  return p == 0 && all_zero(qz) && all_zero(m) && all_zero(nv);
}

std::string PuncturedGamma3Elt::str() const {
  std::string out;
  append_factor(out, "s", p);
  for (int i = 0; i < params.n; ++i)
    append_factor(out, "z" + std::to_string(i + 1), qz[i]);
  for (int i = 0; i < params.g; ++i)
    append_factor(out, "a" + std::to_string(i + 1), m[i]);
  for (int i = 0; i < params.g; ++i)
    append_factor(out, "b" + std::to_string(i + 1), nv[i]);
  return finish(out);
}

PuncturedGamma3Elt punctured_mul(const PuncturedGamma3Elt& x, const PuncturedGamma3Elt& y) {
  require_same_params(x.params, y.params);
  PuncturedGamma3Elt out = PuncturedGamma3Elt::identity(x.params);
  out.p = checked_sub(checked_add(x.p, y.p), checked_mul(2, dot(x.nv, y.m)));
  out.qz = add_vec(x.qz, y.qz);
  out.m = add_vec(x.m, y.m);
  out.nv = add_vec(x.nv, y.nv);
  return out;
}

PuncturedGamma3Elt punctured_inv(const PuncturedGamma3Elt& x) {
  PuncturedGamma3Elt out = PuncturedGamma3Elt::identity(x.params);
  out.p = checked_sub(checked_neg(x.p), checked_mul(2, dot(x.nv, x.m)));
  out.qz = neg_vec(x.qz);
  out.m = neg_vec(x.m);
  out.nv = neg_vec(x.nv);
  return out;
}

// --- GkSurfaceElt -------------------------------------------------------

GkSurfaceElt GkSurfaceElt::identity(const GroupParams& params) {
  params.validate();
  const std::size_t g = static_cast<std::size_t>(params.g);
  return GkSurfaceElt{params, 0, 0, std::vector<Int>(g, 0), std::vector<Int>(g, 0)};
}

bool GkSurfaceElt::is_identity() const {
  return p == 0 && r == 0 && all_zero(m) && all_zero(nv);
}

std::string GkSurfaceElt::str() const {
  std::string out;
  append_factor(out, "s", p);
  append_factor(out, "z", r);
  for (int i = 0; i < params.g; ++i)
    append_factor(out, "a" + std::to_string(i + 1), m[i]);
  for (int i = 0; i < params.g; ++i)
    append_factor(out, "b" + std::to_string(i + 1), nv[i]);
  return finish(out);
}

GkSurfaceElt gk_mul(const GkSurfaceElt& x, const GkSurfaceElt& y) {
  require_same_params(x.params, y.params);
  GkSurfaceElt out = GkSurfaceElt::identity(x.params);
  out.p = checked_sub(checked_add(x.p, y.p), checked_mul(2, dot(x.nv, y.m)));
  out.r = checked_add(x.r, y.r);
  out.m = add_vec(x.m, y.m);
  out.nv = add_vec(x.nv, y.nv);
  return out;
}

GkSurfaceElt gk_inv(const GkSurfaceElt& x) {
  GkSurfaceElt out = GkSurfaceElt::identity(x.params);
  out.p = checked_sub(checked_neg(x.p), checked_mul(2, dot(x.nv, x.m)));
  out.r = checked_neg(x.r);
  out.m = neg_vec(x.m);
  out.nv = neg_vec(x.nv);
  return out;
}

// --- HSigmaElt ------------------------------------------------------------

HSigmaElt HSigmaElt::identity(const GroupParams& params) {
  params.validate();
  const std::size_t g = static_cast<std::size_t>(params.g);
  return HSigmaElt{params, 0, 0,
                   std::vector<Int>(g, 0), std::vector<Int>(g, 0),
                   std::vector<Int>(g, 0), std::vector<Int>(g, 0)};
}

bool HSigmaElt::is_identity() const {
  return p == 0 && r == 0 && all_zero(m) && all_zero(mt) && all_zero(nv) &&
         all_zero(nt);
}

std::string HSigmaElt::str() const {
  std::string out;
  append_factor(out, "s", p);
  append_factor(out, "z", r);
  for (int i = 0; i < params.g; ++i) {
    append_factor(out, "a" + std::to_string(i + 1), m[i]);
    append_factor(out, "ta" + std::to_string(i + 1), mt[i]);
  }
  for (int i = 0; i < params.g; ++i) {
    append_factor(out, "b" + std::to_string(i + 1), nv[i]);
    append_factor(out, "tb" + std::to_string(i + 1), nt[i]);
  }
  return finish(out);
}

HSigmaElt hsigma_mul(const HSigmaElt& x, const HSigmaElt& y) {
  require_same_params(x.params, y.params);
  HSigmaElt out = HSigmaElt::identity(x.params);
  // As in the mixed quotient, but the sigma~ correction has nowhere to
  // go: a~_i and b~_i commute here.
  out.p = checked_sub(checked_add(x.p, y.p), checked_mul(2, dot(x.nv, y.m)));
  out.r = checked_sub(checked_sub(checked_add(x.r, y.r), dot(x.nv, y.mt)),
                      dot(x.nt, y.m));
  out.m = add_vec(x.m, y.m);
  out.mt = add_vec(x.mt, y.mt);
  out.nv = add_vec(x.nv, y.nv);
  out.nt = add_vec(x.nt, y.nt);
  return out;
}

HSigmaElt hsigma_inv(const HSigmaElt& x) {
  HSigmaElt out = HSigmaElt::identity(x.params);
  out.p = checked_sub(checked_neg(x.p), checked_mul(2, dot(x.nv, x.m)));
  out.r = checked_sub(checked_sub(checked_neg(x.r), dot(x.nv, x.mt)),
                      dot(x.nt, x.m));
  out.m = neg_vec(x.m);
  out.mt = neg_vec(x.mt);
  out.nv = neg_vec(x.nv);
  out.nt = neg_vec(x.nt);
  return out;
}

// --- AbelElt ----------------------------------------------------------------

AbelElt AbelElt::identity(const GroupParams& params, QuotientKind kind) {
  params.validate();
  if (kind != QuotientKind::MixedAbel && kind != QuotientKind::PuncturedAbel)
    throw RegimeError("AbelElt supports only abel-mixed / abel-punctured");
  if (kind == QuotientKind::MixedAbel && params.n < 1)
    throw RegimeError("abel-mixed needs n >= 1");
  AbelElt out;
  out.kind = kind;
  out.params = params;
  std::size_t free_dim = 0, tor_dim = 0;
  if (kind == QuotientKind::MixedAbel) {
    if (params.g == 0) {
      free_dim = (params.k >= 2 ? 1 : 0) + (params.n >= 2 ? 1 : 0) + 1;
    } else {
      free_dim = 4 * static_cast<std::size_t>(params.g);
      tor_dim = (params.k >= 2 ? 1 : 0) + (params.n >= 2 ? 1 : 0);
    }
  } else {
    if (params.g == 0) {
      free_dim = (params.k >= 2 ? 1 : 0) + static_cast<std::size_t>(params.n);
    } else {
      free_dim = static_cast<std::size_t>(params.n) +
                 2 * static_cast<std::size_t>(params.g);
      tor_dim = params.k >= 2 ? 1 : 0;
    }
  }
  out.free_part.assign(free_dim, 0);
  out.torsion2.assign(tor_dim, 0);
  return out;
}

std::vector<std::string> AbelElt::basis_names(const GroupParams& params,
                                              QuotientKind kind) {
  std::vector<std::string> names;
  if (kind == QuotientKind::MixedAbel) {
    if (params.g == 0) {
      if (params.k >= 2) names.push_back("s");
      if (params.n >= 2) names.push_back("ts");
      names.push_back("z");
    } else {
      for (int i = 1; i <= params.g; ++i) names.push_back("a" + std::to_string(i));
      for (int i = 1; i <= params.g; ++i) names.push_back("ta" + std::to_string(i));
      for (int i = 1; i <= params.g; ++i) names.push_back("b" + std::to_string(i));
      for (int i = 1; i <= params.g; ++i) names.push_back("tb" + std::to_string(i));
      if (params.k >= 2) names.push_back("s");
      if (params.n >= 2) names.push_back("ts");
    }
  } else {
    if (params.g == 0) {
      if (params.k >= 2) names.push_back("s");
      for (int i = 1; i <= params.n; ++i) names.push_back("z" + std::to_string(i));
    } else {
      for (int i = 1; i <= params.n; ++i) names.push_back("z" + std::to_string(i));
      for (int i = 1; i <= params.g; ++i) names.push_back("a" + std::to_string(i));
      for (int i = 1; i <= params.g; ++i) names.push_back("b" + std::to_string(i));
      if (params.k >= 2) names.push_back("s");
    }
  }
  return names;
}

bool AbelElt::is_identity() const {
  return all_zero(free_part) &&
         std::all_of(torsion2.begin(), torsion2.end(), [](std::uint8_t b) { return b == 0; });
}

std::string AbelElt::str() const {
  const auto names = basis_names(params, kind);
  std::string out;
  std::size_t idx = 0;
  for (Int v : free_part) append_factor(out, names[idx++], v);
  for (std::uint8_t v : torsion2) append_factor(out, names[idx++], v);
  return finish(out);
}

AbelElt abel_mul(const AbelElt& x, const AbelElt& y) {
  require_same_params(x.params, y.params);
  if (x.kind != y.kind) throw RegimeError("abelian kinds differ");
  AbelElt out = x;
  out.free_part = add_vec(x.free_part, y.free_part);
  for (std::size_t i = 0; i < out.torsion2.size(); ++i)
    out.torsion2[i] = static_cast<std::uint8_t>((x.torsion2[i] + y.torsion2[i]) % 2);
  return out;
}

AbelElt abel_inv(const AbelElt& x) {
  AbelElt out = x;
  out.free_part = neg_vec(x.free_part);
  return out;  // Z2 coordinates are their own inverses
}

// --- evaluation ----------------------------------------------------------

Gamma3MixedElt mixed_generator_image(const Generator& gen, const GroupParams& params) {
  Gamma3MixedElt e = Gamma3MixedElt::identity(params);
  switch (gen.family) {
    case Family::Sigma: e.p = 1; break;
    case Family::SigmaTilde: e.q = 1; break;
    case Family::Zeta: e.r = 1; break;
    case Family::A: e.m[gen.index - 1] = 1; break;
    case Family::ATilde: e.mt[gen.index - 1] = 1; break;
    case Family::B: e.nv[gen.index - 1] = 1; break;
    case Family::BTilde: e.nt[gen.index - 1] = 1; break;
  }
  return e;
}

namespace {

/// Image of gen^e in the mixed Gamma3 quotient: the generator images
/// all live in a single coordinate, so powers are coordinate scalings.
Gamma3MixedElt mixed_power_image(const Generator& gen, Int e, const GroupParams& params) {
  Gamma3MixedElt img = mixed_generator_image(gen, params);
  img.p = checked_mul(img.p, e);
  img.q = checked_mul(img.q, e);
  img.r = checked_mul(img.r, e);
  for (auto* v : {&img.m, &img.mt, &img.nv, &img.nt})
    for (Int& x : *v) x = checked_mul(x, e);
  return img;
}

void check_valid(const Generator& gen, const GroupParams& params) {
  if (!gen.valid_for(params))
    throw AlphabetError("generator " + gen.name() + " invalid for (k=" +
                        std::to_string(params.k) + ", n=" + std::to_string(params.n) +
                        ", g=" + std::to_string(params.g) + ")");
}

}  // namespace

Gamma3MixedElt eval_mixed_gamma3(const Word& w, const GroupParams& params) {
  params.validate();
  if (params.k < 3 || params.n < 3)
    throw RegimeError("eval into the mixed Gamma3 quotient needs k >= 3 and n >= 3");
  Gamma3MixedElt acc = Gamma3MixedElt::identity(params);
  for (const Letter& l : w.letters()) {
    check_valid(l.gen, params);
    acc = mixed_mul(acc, mixed_power_image(l.gen, l.exp, params));
  }
  return acc;
}

PuncturedGamma3Elt eval_punctured_gamma3(const Word& w, const GroupParams& params) {
  params.validate();
  if (params.k < 3)
    throw RegimeError("eval into the punctured Gamma3 quotient needs k >= 3");
  PuncturedGamma3Elt acc = PuncturedGamma3Elt::identity(params);
  for (const Letter& l : w.letters()) {
    check_valid(l.gen, params);
    PuncturedGamma3Elt img = PuncturedGamma3Elt::identity(params);
    switch (l.gen.family) {
      case Family::Sigma: img.p = l.exp; break;
      case Family::Zeta: img.qz[l.gen.index - 1] = l.exp; break;
      case Family::A: img.m[l.gen.index - 1] = l.exp; break;
      case Family::B: img.nv[l.gen.index - 1] = l.exp; break;
      default:
        throw AlphabetError("letter " + l.gen.name() + " outside S u AB u Z");
    }
    acc = punctured_mul(acc, img);
  }
  return acc;
}

GkSurfaceElt eval_gk_surface(const Word& w, const GroupParams& params) {
  params.validate();
  if (params.k < 3 || params.n < 3)
    throw RegimeError("eval into G_k(Sigma_g) needs k >= 3 and n >= 3");
  if (params.g < 1) throw RegimeError("eval into G_k(Sigma_g) needs g >= 1");
  GkSurfaceElt acc = GkSurfaceElt::identity(params);
  for (const Letter& l : w.letters()) {
    check_valid(l.gen, params);
    GkSurfaceElt img = GkSurfaceElt::identity(params);
    switch (l.gen.family) {
      case Family::Sigma: img.p = l.exp; break;
      case Family::Zeta: img.r = l.exp; break;
      case Family::A: img.m[l.gen.index - 1] = l.exp; break;
      case Family::B: img.nv[l.gen.index - 1] = l.exp; break;
      default:
        throw AlphabetError("letter " + l.gen.name() + " outside S u AB u Z");
    }
    acc = gk_mul(acc, img);
  }
  return acc;
}

AbelElt eval_abel(const Word& w, const GroupParams& params, QuotientKind kind) {
  AbelElt acc = AbelElt::identity(params, kind);
  const bool mixed = kind == QuotientKind::MixedAbel;
  const int g = params.g, n = params.n, k = params.k;
  for (const Letter& l : w.letters()) {
    check_valid(l.gen, params);
    AbelElt img = AbelElt::identity(params, kind);
    auto set_free = [&](std::size_t i) {
      img.free_part[i] = l.exp;
    };
    auto set_torsion = [&](std::size_t i) {
      img.torsion2[i] = static_cast<std::uint8_t>(((l.exp % 2) + 2) % 2);
    };
    if (mixed) {
      if (g == 0) {
        const std::size_t s_off = 0;
        const std::size_t ts_off = (k >= 2 ? 1 : 0);
        const std::size_t z_off = ts_off + (n >= 2 ? 1 : 0);
        switch (l.gen.family) {
          case Family::Sigma: set_free(s_off); break;
          case Family::SigmaTilde: set_free(ts_off); break;
          case Family::Zeta: set_free(z_off); break;
          default:
            throw AlphabetError("letter " + l.gen.name() + " invalid when g = 0");
        }
      } else {
        const std::size_t gg = static_cast<std::size_t>(g);
        switch (l.gen.family) {
          case Family::A: set_free(l.gen.index - 1); break;
          case Family::ATilde: set_free(gg + l.gen.index - 1); break;
          case Family::B: set_free(2 * gg + l.gen.index - 1); break;
          case Family::BTilde: set_free(3 * gg + l.gen.index - 1); break;
          case Family::Sigma: set_torsion(0); break;
          case Family::SigmaTilde: set_torsion(k >= 2 ? 1 : 0); break;
          case Family::Zeta: break;  // zeta_1 dies in the abelianisation (c.7.1)
        }
      }
    } else {  // PuncturedAbel: alphabet S u AB u Z
      switch (l.gen.family) {
        case Family::Sigma:
          if (g == 0) set_free(0);
          else set_torsion(0);
          break;
        case Family::Zeta:
          set_free((g == 0 ? (k >= 2 ? 1 : 0) : 0) + l.gen.index - 1);
          break;
        case Family::A:
          if (g == 0) break;  // unreachable: valid_for fails first
          set_free(static_cast<std::size_t>(n) + l.gen.index - 1);
          break;
        case Family::B:
          set_free(static_cast<std::size_t>(n) + static_cast<std::size_t>(g) +
                   l.gen.index - 1);
          break;
        default:
          throw AlphabetError("letter " + l.gen.name() + " outside S u AB u Z");
      }
    }
    acc = abel_mul(acc, img);
  }
  return acc;
}

HSigmaElt project_hsigma(const Gamma3MixedElt& x) {
  HSigmaElt out = HSigmaElt::identity(x.params);
  out.p = x.p;
  out.r = x.r;
  out.m = x.m;
  out.mt = x.mt;
  out.nv = x.nv;
  out.nt = x.nt;
  return out;
}

GkSurfaceElt mk_reduce(const PuncturedGamma3Elt& x) {
  if (x.params.g < 1) throw RegimeError("mk_reduce needs g >= 1");
  GkSurfaceElt out = GkSurfaceElt::identity(x.params);
  out.p = x.p;
  out.r = std::accumulate(x.qz.begin(), x.qz.end(), Int{0}, checked_add);
  out.m = x.m;
  out.nv = x.nv;
  return out;
}

}  // namespace braidquot
