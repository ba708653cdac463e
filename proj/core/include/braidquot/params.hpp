#ifndef BRAIDQUOT_PARAMS_HPP
#define BRAIDQUOT_PARAMS_HPP

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidquot {

/// Exponents and normal-form coordinates. Fixed width with checked
/// arithmetic; anything that needs unbounded integers lives in the
/// oracle, which uses GMP.
using Int = long long;

class OverflowError : public std::overflow_error {
 public:
  OverflowError() : std::overflow_error("integer overflow in exponent arithmetic") {}
};

/// A requested operation needs parameter hypotheses that do not hold
/// (for example a Gamma3 quotient with fewer than three strands).
class RegimeError : public std::domain_error {
 public:
  explicit RegimeError(const std::string& what) : std::domain_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

/// A letter lies outside the alphabet an operation accepts.
class AlphabetError : public std::domain_error {
 public:
  explicit AlphabetError(const std::string& what) : std::domain_error(what) {}
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError{};
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError{};
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError{};
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

/// The triple (k, n, g): k inner strands, n outer strands / punctures,
/// genus g of the surface (one boundary component throughout).
struct GroupParams {
  int k = 3;
  int n = 3;
  int g = 1;

  void validate() const {
    if (k < 1) throw RegimeError("k must be >= 1");
    if (n < 0) throw RegimeError("n must be >= 0");
    if (g < 0) throw RegimeError("g must be >= 0");
  }

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

/// Generator families of the mixed alphabet. Sigma = sigma_i (inner
/// braiding), SigmaTilde = outer braiding, A/B = inner surface loops,
/// ATilde/BTilde = outer surface loops, Zeta = loops around punctures.
enum class Family : int { Sigma, SigmaTilde, A, B, ATilde, BTilde, Zeta };

inline const char* family_prefix(Family f) {
  switch (f) {
    case Family::Sigma: return "s";
    case Family::SigmaTilde: return "ts";
    case Family::A: return "a";
    case Family::B: return "b";
    case Family::ATilde: return "ta";
    case Family::BTilde: return "tb";
    case Family::Zeta: return "z";
  }
  return "?";
}

struct Generator {
  Family family;
  int index;  // 1-based

  auto operator<=>(const Generator&) const = default;

  std::string name() const { return family_prefix(family) + std::to_string(index); }

  /// Largest admissible index for this family under the given
  /// parameters; 0 means the family is empty.
  static int family_size(Family f, const GroupParams& p) {
    switch (f) {
      case Family::Sigma: return p.k - 1;
      case Family::SigmaTilde: return p.n - 1;
      case Family::A:
      case Family::B:
      case Family::ATilde:
      case Family::BTilde: return p.g;
      case Family::Zeta: return p.n;
    }
    return 0;
  }

  bool valid_for(const GroupParams& p) const {
    return index >= 1 && index <= family_size(family, p);
  }

  bool is_tilde() const {
    return family == Family::SigmaTilde || family == Family::ATilde ||
           family == Family::BTilde;
  }
};

inline Generator sigma(int i) { return {Family::Sigma, i}; }
inline Generator sigma_t(int i) { return {Family::SigmaTilde, i}; }
inline Generator gen_a(int i) { return {Family::A, i}; }
inline Generator gen_b(int i) { return {Family::B, i}; }
inline Generator gen_ta(int i) { return {Family::ATilde, i}; }
inline Generator gen_tb(int i) { return {Family::BTilde, i}; }
inline Generator zeta(int i) { return {Family::Zeta, i}; }

}  // namespace braidquot

#endif
