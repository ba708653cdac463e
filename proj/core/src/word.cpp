#include "braidquot/word.hpp"

#include <cctype>
#include <cstdlib>
#include <optional>

namespace braidquot {

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.gen.name();
    if (l.exp != 1) out += '^' + std::to_string(l.exp);
  }
  return out;
}

namespace {

std::optional<Family> family_from_prefix(const std::string& tok, std::size_t& name_len) {
  // Longest prefix first: "ts", "ta", "tb" before "s", "a", "b".
  static const std::pair<const char*, Family> table[] = {
      {"ts", Family::SigmaTilde}, {"ta", Family::ATilde}, {"tb", Family::BTilde},
      {"s", Family::Sigma},       {"a", Family::A},       {"b", Family::B},
      {"z", Family::Zeta},
  };
  for (const auto& [prefix, fam] : table) {
    std::size_t len = std::string(prefix).size();
    if (tok.size() > len && tok.compare(0, len, prefix) == 0 &&
        std::isdigit(static_cast<unsigned char>(tok[len]))) {
      name_len = len;
      return fam;
    }
  }
  return std::nullopt;
}

}  // namespace

Word parse_word(const std::string& text, const GroupParams& params) {
  params.validate();
  std::vector<Letter> letters;
  std::size_t pos = 0;
  bool saw_one = false;
  bool saw_letter = false;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    std::size_t end = text.find(' ', pos);
    if (end == std::string::npos) end = text.size();
    std::string tok = text.substr(start, end - start);
    pos = end;

    if (tok == "1") {
      saw_one = true;
      continue;
    }

    std::size_t name_len = 0;
    auto fam = family_from_prefix(tok, name_len);
    if (!fam) throw ParseError("unrecognized generator name in token '" + tok + "'", start);

    std::size_t caret = tok.find('^');
    std::string index_str = tok.substr(name_len, caret == std::string::npos
                                                    ? std::string::npos
                                                    : caret - name_len);
    for (char ch : index_str)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw ParseError("malformed generator index in token '" + tok + "'", start);
    errno = 0;
    long idx = std::strtol(index_str.c_str(), nullptr, 10);
    if (errno != 0 || idx < 1)
      throw ParseError("generator index out of range in token '" + tok + "'", start);

    Generator gen{*fam, static_cast<int>(idx)};
    if (Generator::family_size(*fam, params) == 0)
      throw ParseError("generator family '" + std::string(family_prefix(*fam)) +
                           "' is empty for (k=" + std::to_string(params.k) +
                           ", n=" + std::to_string(params.n) +
                           ", g=" + std::to_string(params.g) + ")",
                       start);
    if (!gen.valid_for(params))
      throw ParseError("generator " + gen.name() + " out of range (max index " +
                           std::to_string(Generator::family_size(*fam, params)) + ")",
                       start);

    Int exp = 1;
    if (caret != std::string::npos) {
      std::string exp_str = tok.substr(caret + 1);
      if (exp_str.empty()) throw ParseError("missing exponent in token '" + tok + "'", start);
      std::size_t i = (exp_str[0] == '-' || exp_str[0] == '+') ? 1 : 0;
      if (i == exp_str.size()) throw ParseError("malformed exponent in token '" + tok + "'", start);
      for (; i < exp_str.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(exp_str[i])))
          throw ParseError("malformed exponent in token '" + tok + "'", start);
      errno = 0;
      exp = std::strtoll(exp_str.c_str(), nullptr, 10);
      if (errno != 0) throw ParseError("exponent overflow in token '" + tok + "'", start);
      if (exp == 0) throw ParseError("zero exponent in token '" + tok + "'", start);
    }
    letters.push_back(Letter{gen, exp});
    saw_letter = true;
  }
  if (saw_one && saw_letter)
    throw ParseError("the empty-word token '1' cannot be mixed with generators", 0);
  return Word{std::move(letters)};
}

Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    if (l.exp == 0) continue;
    if (!out.empty() && out.back().gen == l.gen) {
      out.back().exp = checked_add(out.back().exp, l.exp);
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word{std::move(out)};
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(Letter{it->gen, checked_neg(it->exp)});
  return Word{std::move(out)};
}

Word commutator(const Word& x, const Word& y) {
  return free_reduce(x * y * invert(x) * invert(y));
}

Word conjugate(const Word& x, const Word& y) {
  return free_reduce(invert(y) * x * y);
}

Word word_pow(const Word& w, Int e) {
  if (e == 0) return Word{};
  Word base = e > 0 ? w : invert(w);
  Int count = e > 0 ? e : checked_neg(e);
  Word out;
  for (Int i = 0; i < count; ++i) out = out * base;
  return free_reduce(out);
}

}  // namespace braidquot
