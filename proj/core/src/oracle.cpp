#include "braidquot/oracle.hpp"

namespace braidquot {

SmithInvariants abelian_invariants(const Presentation& pres) {
  const std::size_t N = pres.generators.size();
  std::vector<ZRow> rows;
  rows.reserve(pres.relators.size());
  for (const Word& r : pres.relators) {
    Class2Elt e = collect_class2(r, pres.generators);
    rows.emplace_back(e.e);
  }
  return smith_invariants(std::move(rows), N);
}

IntLattice class2_quotient_lattice(const Presentation& pres) {
  const std::size_t N = pres.generators.size();
  const std::size_t M = N * (N - 1) / 2;
  std::vector<ZRow> rows;
  for (const Word& rel : pres.relators) {
    Class2Elt r = collect_class2(rel, pres.generators);
    ZRow row(N + M, 0);
    for (std::size_t i = 0; i < N; ++i) row[i] = r.e[i];
    for (std::size_t i = 0; i < M; ++i) row[N + i] = r.c[i];
    rows.push_back(std::move(row));
    // x_k r x_k^-1 differs from r by commutators with c-part
    // beta(delta_k, e_r); these span the closure's extra directions.
    for (std::size_t k = 0; k < N; ++k) {
      ZRow conj(N + M, 0);
      bool nonzero = false;
      for (std::size_t j = 0; j < N; ++j) {
        if (j == k || r.e[j] == 0) continue;
        nonzero = true;
        if (k < j)
          conj[N + pair_index(k, j, N)] = r.e[j];
        else
          conj[N + pair_index(j, k, N)] = -r.e[j];
      }
      if (nonzero) rows.push_back(std::move(conj));
    }
  }
  return IntLattice::from_rows(N + M, std::move(rows));
}

bool is_trivial_class2(const Presentation& pres, const IntLattice& lat, const Word& w) {
  const std::size_t N = pres.generators.size();
  const std::size_t M = N * (N - 1) / 2;
  Class2Elt e = collect_class2(w, pres.generators);
  ZRow v(N + M, 0);
  for (std::size_t i = 0; i < N; ++i) v[i] = e.e[i];
  for (std::size_t i = 0; i < M; ++i) v[N + i] = e.c[i];
  return lat.contains(v);
}

bool is_trivial_class2(const Presentation& pres, const Word& w) {
  return is_trivial_class2(pres, class2_quotient_lattice(pres), w);
}

SmithInvariants gamma2_mod_gamma3_invariants(const Presentation& pres) {
  const std::size_t N = pres.generators.size();
  const std::size_t M = N * (N - 1) / 2;
  IntLattice lat = class2_quotient_lattice(pres);
  // In the echelon basis, rows whose pivot lies in the c-block span
  // exactly { v : (0, v) in lattice }.
  std::vector<ZRow> crows;
  for (const ZRow& row : lat.basis()) {
    bool e_zero = true;
    for (std::size_t i = 0; i < N; ++i)
      if (row[i] != 0) { e_zero = false; break; }
    if (!e_zero) continue;
    crows.emplace_back(row.begin() + static_cast<long>(N), row.end());
  }
  return smith_invariants(std::move(crows), M);
}

}  // namespace braidquot
