#ifndef BRAIDQUOT_PRESENTATION_HPP
#define BRAIDQUOT_PRESENTATION_HPP

#include <string>
#include <vector>

#include "braidquot/params.hpp"
#include "braidquot/word.hpp"

namespace braidquot {

/// Which group / quotient a presentation or evaluation map targets.
enum class QuotientKind {
  MixedFull,        // B_{k,n}(Sigma_g)
  MixedAbel,        // B_{k,n}(Sigma_g) / Gamma_2
  MixedGamma3,      // B_{k,n}(Sigma_g) / Gamma_3
  PuncturedFull,    // B_k(Sigma_{g,n})
  PuncturedAbel,    // B_k(Sigma_{g,n}) / Gamma_2
  PuncturedGamma3,  // B_k(Sigma_{g,n}) / Gamma_3
  BaseFull,         // B_n(Sigma_g)
  GkSurface,        // G_k(Sigma_g) = ker of the forgetting map on Gamma_3 quotients
  HSigma,           // (B_{k,n}(Sigma_g)/Gamma_3) / <sigma~ = 1>
};

const char* quotient_kind_name(QuotientKind kind);

/// A finite presentation: each relator r stands for the relation r = 1.
/// Relator lists are deterministic in `params`.
struct Presentation {
  GroupParams params;
  std::vector<Generator> generators;
  std::vector<Word> relators;
};

/// B_k(Sigma_{g,n}): generators S u AB u Z, relations (a.1)-(a.8).
/// Degenerate parameters suppress the affected families and relations.
Presentation presentation_punctured(const GroupParams& params);

/// B_n(Sigma_g): generators S~ u AB~, relations (b.1)-(b.6).
Presentation presentation_base(const GroupParams& params);

/// B_{k,n}(Sigma_g): generators Omega_{k,n}, relations (a) u (b) u (c.1)-(c.8).
Presentation presentation_mixed(const GroupParams& params);

/// Presentation of the requested quotient over the collapsed alphabet.
/// The collapsed images of sigma_i, sigma~_i, zeta_i are represented by
/// the index-1 generators s1, ts1, z1.
Presentation presentation_quotient(const GroupParams& params, QuotientKind kind);

/// Conjugation action of an outer generator (S~ u AB~) on a word over
/// the inner alphabet S u AB u Z, per relations (c.1)-(c.8). Returns
/// the freely reduced image of gen * w * gen^-1.
Word act_outer(const Generator& gen, const Word& w, const GroupParams& params);

}  // namespace braidquot

#endif
