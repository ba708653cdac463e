#ifndef BRAIDQUOT_WORD_HPP
#define BRAIDQUOT_WORD_HPP

#include <string>
#include <vector>

#include "braidquot/params.hpp"

namespace braidquot {

struct Letter {
  Generator gen;
  Int exp;  // nonzero

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word over the generator alphabet, stored as (generator, exponent)
/// runs. Words are immutable values; nothing here reduces implicitly.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word of(Generator g, Int exp = 1) {
    if (exp == 0) return Word{};
    return Word{{Letter{g, exp}}};
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  /// Concatenation, no reduction.
  friend Word operator*(const Word& u, const Word& v) {
    std::vector<Letter> out = u.letters_;
    out.insert(out.end(), v.letters_.begin(), v.letters_.end());
    return Word{std::move(out)};
  }

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Parses the word grammar: space-separated tokens `name` or
/// `name^exp`; the single token `1` is the empty word. Indices are
/// validated against `params`. No reduction is applied.
Word parse_word(const std::string& text, const GroupParams& params);

/// Canonical freely reduced, run-merged form.
Word free_reduce(const Word& w);

/// Reversed sequence with negated exponents.
Word invert(const Word& w);

/// x y x^-1 y^-1, freely reduced.
Word commutator(const Word& x, const Word& y);

/// y^-1 x y, freely reduced.
Word conjugate(const Word& x, const Word& y);

Word word_pow(const Word& w, Int e);

}  // namespace braidquot

#endif
