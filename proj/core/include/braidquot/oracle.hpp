#pragma once

#include "braidquot/class2.hpp"
#include "braidquot/lattice.hpp"
#include "braidquot/presentation.hpp"

namespace braidquot {

/// Invariant factors of the abelianisation of the presented group
/// (Smith form of the relator exponent-sum matrix).
SmithInvariants abelian_invariants(const Presentation& pres);

/// Lattice in Z^{N + N(N-1)/2} spanned by the images of the relators'
/// normal closure in the free class-2 group: rows (e_r, c_r) per relator
/// plus, per generator k and relator r, the conjugation contribution
/// (0, beta(delta_k, e_r)) with beta(u,v)_ij = u_i v_j - u_j v_i.
IntLattice class2_quotient_lattice(const Presentation& pres);

/// Word problem in G/Gamma_3(G) for G = <pres>.
bool is_trivial_class2(const Presentation& pres, const Word& w);
bool is_trivial_class2(const Presentation& pres, const IntLattice& lat, const Word& w);

/// Invariants of Gamma_2(G)/Gamma_3(G): the c-block of Z^{N(N-1)/2}
/// modulo the lattice's pure-commutator sub-lattice.
SmithInvariants gamma2_mod_gamma3_invariants(const Presentation& pres);

}  // namespace braidquot
