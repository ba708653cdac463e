#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "braidquot/quotients.hpp"

namespace braidquot {

struct CheckResult {
  std::string id;
  std::string params;
  bool pass = false;
  std::string witness;  // non-empty exactly when the check fails
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  std::size_t fail_count() const;
  std::string str() const;
};

/// psi_bar: B_{k,n}(Sigma_g)/Gamma_3 -> B_n(Sigma_g)/Gamma_3, forgetting
/// the first k strands. The target is PuncturedGamma3Elt with parameters
/// (k' = n, n' = 0, g); its s/a_i/b_i coordinates carry the images of
/// sigma~/a~_i/b~_i. Keeps (q, mt, nt), kills (p, r, m, nv).
PuncturedGamma3Elt psi_bar(const Gamma3MixedElt& x);

/// Exactness certificate: the element of G_k(Sigma_g) with the same
/// (p, r, m, nv) iff psi_bar(x) = 1, i.e. iff q = mt = nt = 0.
std::optional<GkSurfaceElt> kernel_certificate_psi_bar(const Gamma3MixedElt& x);

/// alpha_{k,n}: Z^3 (abelianisation of B_{k,n}, basis sigma, sigma~,
/// zeta) -> centre of B_{k,n}(Sigma_g)/Gamma_3, (s, s~, z) -> (p, q, r).
Gamma3MixedElt alpha_kn(const AbelElt& v, const GroupParams& params);

/// G_k = Z^2 with basis {sigma, zeta} (k >= 2).
struct GkElt {
  Int s = 0;
  Int z = 0;
  friend bool operator==(const GkElt&, const GkElt&) = default;
  std::string str() const;
};

/// gamma_k: G_k -> centre of G_k(Sigma_g), (s, z) -> (p, r).
GkSurfaceElt gamma_k(const GkElt& v, const GroupParams& params);

/// Uniform random word: up to max_len letters drawn from `alphabet`
/// with exponents in [-3, 3] \ {0}.
Word random_word(std::mt19937_64& rng, const std::vector<Generator>& alphabet,
                 int max_len);
std::vector<Generator> full_alphabet(const GroupParams& params);
std::vector<Generator> punctured_alphabet(const GroupParams& params);

// Verification suites. Failures become report entries, not errors.
VerificationReport verify_relators(const GroupParams& params);
VerificationReport verify_diagram(const GroupParams& params, std::uint64_t seed,
                                  int samples = 1000);
VerificationReport verify_rigidity(const GroupParams& params, std::uint64_t seed,
                                   int samples = 1000);
VerificationReport verify_nonextension(const GroupParams& params);
VerificationReport verify_oracle_agreement(const GroupParams& params,
                                           std::uint64_t seed, int samples = 1000);

}  // namespace braidquot
