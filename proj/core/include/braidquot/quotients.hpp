#ifndef BRAIDQUOT_QUOTIENTS_HPP
#define BRAIDQUOT_QUOTIENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "braidquot/params.hpp"
#include "braidquot/presentation.hpp"
#include "braidquot/word.hpp"

namespace braidquot {

/// Normal form in B_{k,n}(Sigma_g)/Gamma_3:
///   sigma^p sigma~^q zeta^r  prod_i a_i^{m_i} a~_i^{mt_i}  prod_i b_i^{n_i} b~_i^{nt_i}.
/// Coordinates are a bijective normal form; the all-zero tuple is the
/// identity.
struct Gamma3MixedElt {
  GroupParams params;
  Int p = 0, q = 0, r = 0;
  std::vector<Int> m, mt, nv, nt;  // each of length g

  static Gamma3MixedElt identity(const GroupParams& params);
  bool is_identity() const;
  std::string str() const;

  friend bool operator==(const Gamma3MixedElt&, const Gamma3MixedElt&) = default;
};

/// Normal form in B_k(Sigma_{g,n})/Gamma_3: sigma^p prod zeta_i^{q_i}
/// prod a_i^{m_i} prod b_i^{n_i}. The zeta_i are NOT identified.
struct PuncturedGamma3Elt {
  GroupParams params;
  Int p = 0;
  std::vector<Int> qz;      // length n
  std::vector<Int> m, nv;   // length g

  static PuncturedGamma3Elt identity(const GroupParams& params);
  bool is_identity() const;
  std::string str() const;

  friend bool operator==(const PuncturedGamma3Elt&, const PuncturedGamma3Elt&) = default;
};

/// Normal form in G_k(Sigma_g): sigma^p zeta^r prod a_i^{m_i} prod b_i^{n_i}.
struct GkSurfaceElt {
  GroupParams params;
  Int p = 0, r = 0;
  std::vector<Int> m, nv;  // length g

  static GkSurfaceElt identity(const GroupParams& params);
  bool is_identity() const;
  std::string str() const;

  friend bool operator==(const GkSurfaceElt&, const GkSurfaceElt&) = default;
};

/// H_Sigma = (B_{k,n}(Sigma_g)/Gamma_3) with sigma~ set to 1; same
/// coordinates as Gamma3MixedElt minus q.
struct HSigmaElt {
  GroupParams params;
  Int p = 0, r = 0;
  std::vector<Int> m, mt, nv, nt;  // length g

  static HSigmaElt identity(const GroupParams& params);
  bool is_identity() const;
  std::string str() const;

  friend bool operator==(const HSigmaElt&, const HSigmaElt&) = default;
};

/// Abelianisation element. Layout is a pure function of (params, kind):
///   MixedAbel,    g = 0: free = [sigma?, sigma~?, zeta]
///   MixedAbel,    g >= 1: free = [a_1..a_g, a~_1..a~_g, b_1..b_g, b~_1..b~_g],
///                         torsion2 = [sigma?, sigma~?]   (zeta_i die)
///   PuncturedAbel, g = 0: free = [sigma?, zeta_1..zeta_n]
///   PuncturedAbel, g >= 1: free = [zeta_1..zeta_n, a_1..a_g, b_1..b_g],
///                          torsion2 = [sigma?]
/// where "sigma?" is present iff k >= 2 (resp. "sigma~?" iff n >= 2).
struct AbelElt {
  QuotientKind kind = QuotientKind::MixedAbel;
  GroupParams params;
  std::vector<Int> free_part;
  std::vector<std::uint8_t> torsion2;  // reduced mod 2 eagerly

  static AbelElt identity(const GroupParams& params, QuotientKind kind);
  bool is_identity() const;
  std::string str() const;
  /// Names of the basis coordinates in layout order (free then torsion).
  static std::vector<std::string> basis_names(const GroupParams& params,
                                              QuotientKind kind);

  friend bool operator==(const AbelElt&, const AbelElt&) = default;
};

// --- group operations ------------------------------------------------

Gamma3MixedElt mixed_mul(const Gamma3MixedElt& x, const Gamma3MixedElt& y);
Gamma3MixedElt mixed_inv(const Gamma3MixedElt& x);
Gamma3MixedElt mixed_commutator(const Gamma3MixedElt& x, const Gamma3MixedElt& y);
bool is_central_mixed(const Gamma3MixedElt& x);

PuncturedGamma3Elt punctured_mul(const PuncturedGamma3Elt& x, const PuncturedGamma3Elt& y);
PuncturedGamma3Elt punctured_inv(const PuncturedGamma3Elt& x);

GkSurfaceElt gk_mul(const GkSurfaceElt& x, const GkSurfaceElt& y);
GkSurfaceElt gk_inv(const GkSurfaceElt& x);

HSigmaElt hsigma_mul(const HSigmaElt& x, const HSigmaElt& y);
HSigmaElt hsigma_inv(const HSigmaElt& x);

AbelElt abel_mul(const AbelElt& x, const AbelElt& y);
AbelElt abel_inv(const AbelElt& x);

// --- evaluation maps --------------------------------------------------

/// rho_{k,n}: sigma_i -> sigma, sigma~_i -> sigma~, zeta_i -> zeta,
/// surface generators to their unit vectors. Needs k, n >= 3.
Gamma3MixedElt eval_mixed_gamma3(const Word& w, const GroupParams& params);

/// rho_k on B_k(Sigma_{g,n}); word over S u AB u Z only. Needs k >= 3.
PuncturedGamma3Elt eval_punctured_gamma3(const Word& w, const GroupParams& params);

/// Phi_k onto G_k(Sigma_g); word over S u AB u Z; all zeta_i -> zeta.
/// Needs k, n >= 3 and g >= 1.
GkSurfaceElt eval_gk_surface(const Word& w, const GroupParams& params);

/// Abelianisation map for kind in {MixedAbel, PuncturedAbel}.
AbelElt eval_abel(const Word& w, const GroupParams& params, QuotientKind kind);

/// Drop the sigma~ coordinate (kernel of the projection is <sigma~>).
HSigmaElt project_hsigma(const Gamma3MixedElt& x);

/// The identification M_k(Sigma_g) ~ G_k(Sigma_g): sum the zeta
/// exponents into the single zeta coordinate. Needs g >= 1.
GkSurfaceElt mk_reduce(const PuncturedGamma3Elt& x);

// generator images, for building elements coordinate-wise
Gamma3MixedElt mixed_generator_image(const Generator& gen, const GroupParams& params);

}  // namespace braidquot

#endif
