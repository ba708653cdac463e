#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "braidquot/word.hpp"

namespace braidquot {

/// Index of the basic commutator [x_i, x_j] (0-based, i < j) in the
/// lexicographic layout of the c-vector.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n);

/// Element of the free class-2 nilpotent group on N generators, in the
/// normal form x_1^{e_1} ... x_N^{e_N} prod_{i<j} [x_i,x_j]^{c_ij}.
struct Class2Elt {
  std::size_t N = 0;
  std::vector<mpz_class> e;  // length N
  std::vector<mpz_class> c;  // length N(N-1)/2, lex by (i, j), i < j

  static Class2Elt identity(std::size_t N);
  bool is_identity() const;
  std::string str() const;

  friend bool operator==(const Class2Elt&, const Class2Elt&) = default;
};

Class2Elt class2_mul(const Class2Elt& x, const Class2Elt& y);
Class2Elt class2_inv(const Class2Elt& x);
Class2Elt class2_pow(const Class2Elt& x, const mpz_class& k);

/// Collect w into normal form in the free class-2 quotient, indexing
/// generators by their position in `gens`.
Class2Elt collect_class2(const Word& w, const std::vector<Generator>& gens);

}  // namespace braidquot
