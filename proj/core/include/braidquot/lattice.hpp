#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace braidquot {

using ZRow = std::vector<mpz_class>;

/// Integer row lattice in Z^dim, stored as a canonical Hermite normal
/// form basis (row echelon, positive pivots, entries above a pivot
/// reduced into [0, pivot)).
class IntLattice {
 public:
  explicit IntLattice(std::size_t dim) : dim_(dim) {}
  static IntLattice from_rows(std::size_t dim, std::vector<ZRow> rows);

  std::size_t dim() const { return dim_; }
  const std::vector<ZRow>& basis() const { return rows_; }
  bool contains(const ZRow& v) const;

 private:
  std::size_t dim_;
  std::vector<ZRow> rows_;  // HNF basis
};

struct SmithInvariants {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;  // factors > 1, in divisibility order

  std::string str() const;  // "Z^4 x Z2^2", "Z", "1", ...
  friend bool operator==(const SmithInvariants&, const SmithInvariants&) = default;
};

/// Invariant factor decomposition of Z^dim / rowspan(rows).
SmithInvariants smith_invariants(std::vector<ZRow> rows, std::size_t dim);

}  // namespace braidquot
