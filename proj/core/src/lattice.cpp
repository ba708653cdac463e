#include "braidquot/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidquot {

namespace {

bool row_zero(const ZRow& r) {
  return std::all_of(r.begin(), r.end(), [](const mpz_class& v) { return v == 0; });
}

}  // namespace

IntLattice IntLattice::from_rows(std::size_t dim, std::vector<ZRow> rows) {
  for (const ZRow& r : rows)
    if (r.size() != dim) throw std::invalid_argument("row dimension mismatch");
  IntLattice out(dim);

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < dim && pivot_row < rows.size(); ++col) {
    // Euclidean elimination in this column over rows[pivot_row..].
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (best == rows.size() ||
            cmp(abs(rows[r][col]), abs(rows[best][col])) < 0)
          best = r;
      }
      if (best == rows.size()) break;  // column clear
      std::swap(rows[pivot_row], rows[best]);
      bool clean = true;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        mpz_class q = rows[r][col] / rows[pivot_row][col];  // truncated
        for (std::size_t c = col; c < dim; ++c)
          rows[r][c] -= q * rows[pivot_row][c];
        if (rows[r][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[pivot_row][col] == 0) continue;
    if (rows[pivot_row][col] < 0)
      for (mpz_class& v : rows[pivot_row]) v = -v;
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t r = 0; r < pivot_row; ++r) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(),
                 rows[pivot_row][col].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t c = col; c < dim; ++c)
        rows[r][c] -= q * rows[pivot_row][c];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  out.rows_ = std::move(rows);
  return out;
}

bool IntLattice::contains(const ZRow& v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
  ZRow res = v;
  for (const ZRow& row : rows_) {
    std::size_t col = 0;
    while (col < dim_ && row[col] == 0) ++col;
    if (res[col] == 0) continue;
    if (res[col] % row[col] != 0) return false;
    mpz_class q = res[col] / row[col];
    for (std::size_t c = col; c < dim_; ++c) res[c] -= q * row[c];
  }
  return row_zero(res);
}

std::string SmithInvariants::str() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  else if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (std::size_t i = 0; i < torsion.size();) {
    std::size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
    std::string p = "Z" + torsion[i].get_str();
    if (j - i > 1) p += "^" + std::to_string(j - i);
    parts.push_back(p);
    i = j;
  }
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
  return out;
}

SmithInvariants smith_invariants(std::vector<ZRow> rows, std::size_t dim) {
  for (const ZRow& r : rows)
    if (r.size() != dim) throw std::invalid_argument("row dimension mismatch");
  const std::size_t nr = rows.size();
  std::vector<mpz_class> diag;

  std::size_t top = 0, left = 0;
  while (top < nr && left < dim) {
    // locate a minimal nonzero entry in the remaining block
    std::size_t pr = nr, pc = dim;
    for (std::size_t r = top; r < nr; ++r)
      for (std::size_t c = left; c < dim; ++c) {
        if (rows[r][c] == 0) continue;
        if (pr == nr || cmp(abs(rows[r][c]), abs(rows[pr][pc])) < 0) {
          pr = r;
          pc = c;
        }
      }
    if (pr == nr) break;  // block is zero
    std::swap(rows[top], rows[pr]);
    for (std::size_t r = top; r < nr; ++r) std::swap(rows[r][left], rows[r][pc]);

    bool dirty = false;
    for (std::size_t r = top + 1; r < nr; ++r) {
      if (rows[r][left] == 0) continue;
      mpz_class q = rows[r][left] / rows[top][left];
      for (std::size_t c = left; c < dim; ++c) rows[r][c] -= q * rows[top][c];
      if (rows[r][left] != 0) dirty = true;
    }
    for (std::size_t c = left + 1; c < dim; ++c) {
      if (rows[top][c] == 0) continue;
      mpz_class q = rows[top][c] / rows[top][left];
      for (std::size_t r = top; r < nr; ++r) rows[r][c] -= q * rows[r][left];
      if (rows[top][c] != 0) dirty = true;
    }
    if (dirty) continue;  // re-pick a smaller pivot

    // pivot must divide every remaining entry, else fold an offender in
    bool fixed = true;
    for (std::size_t r = top + 1; r < nr && fixed; ++r)
      for (std::size_t c = left + 1; c < dim && fixed; ++c)
        if (rows[r][c] % rows[top][left] != 0) {
          for (std::size_t cc = left; cc < dim; ++cc)
            rows[top][cc] += rows[r][cc];
          fixed = false;
        }
    if (!fixed) continue;

    diag.push_back(abs(rows[top][left]));
    ++top;
    ++left;
  }

  SmithInvariants out;
  out.free_rank = dim - diag.size();
  for (const mpz_class& d : diag)
    if (d > 1) out.torsion.push_back(d);
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

}  // namespace braidquot
