#include "braidquot/class2.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidquot {

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  // pairs (0,1),(0,2),...,(0,n-1),(1,2),... in lex order
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Class2Elt Class2Elt::identity(std::size_t N) {
  Class2Elt out;
  out.N = N;
  out.e.assign(N, 0);
  out.c.assign(N * (N - 1) / 2, 0);
  return out;
}

bool Class2Elt::is_identity() const {
  auto zero = [](const mpz_class& v) { return v == 0; };
  return std::all_of(e.begin(), e.end(), zero) &&
         std::all_of(c.begin(), c.end(), zero);
}

std::string Class2Elt::str() const {
  std::string out;
  for (std::size_t i = 0; i < N; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(i + 1);
    if (e[i] != 1) out += "^" + e[i].get_str();
  }
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      const mpz_class& v = c[pair_index(i, j, N)];
      if (v == 0) continue;
      if (!out.empty()) out += ' ';
      out += "[x" + std::to_string(i + 1) + ",x" + std::to_string(j + 1) + "]";
      if (v != 1) out += "^" + v.get_str();
    }
  return out.empty() ? "1" : out;
}

Class2Elt class2_mul(const Class2Elt& x, const Class2Elt& y) {
  if (x.N != y.N) throw std::invalid_argument("class-2 rank mismatch");
  Class2Elt out = Class2Elt::identity(x.N);
  for (std::size_t i = 0; i < x.N; ++i) out.e[i] = x.e[i] + y.e[i];
  // Moving y's x_i block left past x's x_j block (j > i) costs
  // [x_i, x_j]^{-e'_i e_j} per the rule x_j x_i = [x_i,x_j]^{-1} x_i x_j.
  for (std::size_t i = 0; i < x.N; ++i)
    for (std::size_t j = i + 1; j < x.N; ++j) {
      const std::size_t idx = pair_index(i, j, x.N);
      out.c[idx] = x.c[idx] + y.c[idx] - y.e[i] * x.e[j];
    }
  return out;
}

Class2Elt class2_inv(const Class2Elt& x) {
  Class2Elt out = Class2Elt::identity(x.N);
  for (std::size_t i = 0; i < x.N; ++i) out.e[i] = -x.e[i];
  for (std::size_t i = 0; i < x.N; ++i)
    for (std::size_t j = i + 1; j < x.N; ++j) {
      const std::size_t idx = pair_index(i, j, x.N);
      out.c[idx] = -x.c[idx] - x.e[i] * x.e[j];
    }
  return out;
}

Class2Elt class2_pow(const Class2Elt& x, const mpz_class& k) {
  // x^k = (e*k, c*k - e_i e_j * k(k-1)/2) by induction on the product rule.
  Class2Elt out = Class2Elt::identity(x.N);
  const mpz_class tri = k * (k - 1) / 2;
  for (std::size_t i = 0; i < x.N; ++i) out.e[i] = x.e[i] * k;
  for (std::size_t i = 0; i < x.N; ++i)
    for (std::size_t j = i + 1; j < x.N; ++j) {
      const std::size_t idx = pair_index(i, j, x.N);
      out.c[idx] = x.c[idx] * k - x.e[i] * x.e[j] * tri;
    }
  return out;
}

Class2Elt collect_class2(const Word& w, const std::vector<Generator>& gens) {
  const std::size_t N = gens.size();
  Class2Elt acc = Class2Elt::identity(N);
  for (const Letter& l : w.letters()) {
    std::size_t idx = N;
    for (std::size_t i = 0; i < N; ++i)
      if (gens[i] == l.gen) { idx = i; break; }
    if (idx == N)
      throw AlphabetError("generator " + l.gen.name() + " not in the indexed list");
    Class2Elt step = Class2Elt::identity(N);
    step.e[idx] = static_cast<long>(l.exp);
    acc = class2_mul(acc, step);
  }
  return acc;
}

}  // namespace braidquot
