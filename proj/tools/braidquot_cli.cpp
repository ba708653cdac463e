#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "braidquot/homs.hpp"
#include "braidquot/oracle.hpp"
#include "braidquot/presentation.hpp"
#include "braidquot/quotients.hpp"

using json = nlohmann::json;
using namespace braidquot;

namespace {

/// Canonical element strings use the collapsed names s/ts/z without an
/// index; the word grammar wants indexed names. Rewrite bare s/ts/z
/// tokens to their index-1 spellings so `eq "<nf output>" ...` works.
std::string prenormalize(const std::string& text) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = text.find(' ', i);
    if (j == std::string::npos) j = text.size();
    std::string tok = text.substr(i, j - i);
    const std::size_t caret = tok.find('^');
    std::string name = tok.substr(0, caret == std::string::npos ? tok.size() : caret);
    if (name == "s" || name == "ts" || name == "z")
      tok.insert(name.size(), "1");
    if (!out.empty()) out += ' ';
    out += tok;
    i = j + 1;
  }
  return out;
}

QuotientKind parse_kind(const std::string& name) {
  if (name == "gamma3-mixed") return QuotientKind::MixedGamma3;
  if (name == "gamma3-punctured") return QuotientKind::PuncturedGamma3;
  if (name == "gk") return QuotientKind::GkSurface;
  if (name == "hsigma") return QuotientKind::HSigma;
  if (name == "abel-mixed") return QuotientKind::MixedAbel;
  if (name == "abel-punctured") return QuotientKind::PuncturedAbel;
  if (name == "mixed") return QuotientKind::MixedFull;
  if (name == "punctured") return QuotientKind::PuncturedFull;
  if (name == "base") return QuotientKind::BaseFull;
  throw RegimeError("unknown quotient/presentation name: " + name);
}

std::string normal_form(const Word& w, const GroupParams& p, QuotientKind kind) {
  switch (kind) {
    case QuotientKind::MixedGamma3: return eval_mixed_gamma3(w, p).str();
    case QuotientKind::PuncturedGamma3: return eval_punctured_gamma3(w, p).str();
    case QuotientKind::GkSurface: return eval_gk_surface(w, p).str();
    case QuotientKind::HSigma: return project_hsigma(eval_mixed_gamma3(w, p)).str();
    case QuotientKind::MixedAbel:
    case QuotientKind::PuncturedAbel: return eval_abel(w, p, kind).str();
    default:
      throw RegimeError("no normal form for " + std::string(quotient_kind_name(kind)));
  }
}

Presentation make_presentation(const GroupParams& p, QuotientKind kind) {
  switch (kind) {
    case QuotientKind::MixedFull: return presentation_mixed(p);
    case QuotientKind::PuncturedFull: return presentation_punctured(p);
    case QuotientKind::BaseFull: return presentation_base(p);
    default: return presentation_quotient(p, kind);
  }
}

void print_report(const VerificationReport& r, bool json_out, json& acc) {
  if (json_out) {
    json checks = json::array();
    for (const CheckResult& c : r.checks) {
      json e = {{"id", c.id}, {"params", c.params}, {"pass", c.pass}};
      if (!c.pass) e["witness"] = c.witness;
      checks.push_back(std::move(e));
    }
    acc["suites"].push_back({{"suite", r.suite},
                             {"pass", r.all_pass()},
                             {"checks", std::move(checks)}});
  } else {
    std::cout << r.str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic in surface mixed braid group quotients"};
  app.require_subcommand(1);

  int k = 3, n = 3, g = 1;
  std::uint64_t seed = 0;
  int samples = 1000;
  std::string quotient = "gamma3-mixed";
  bool json_out = false;
  auto add_common = [&](CLI::App* sub, bool with_quotient) {
    sub->add_option("--k", k, "first block strand count");
    sub->add_option("--n", n, "second block strand count / punctures");
    sub->add_option("--g", g, "surface genus");
    sub->add_flag("--json", json_out, "JSON output");
    if (with_quotient)
      sub->add_option("--quotient", quotient,
                      "gamma3-mixed|gamma3-punctured|gk|hsigma|abel-mixed|abel-punctured");
  };

  std::string word1, word2;
  auto* nf = app.add_subcommand("nf", "normal form of a word");
  add_common(nf, true);
  nf->add_option("word", word1, "word to normalize")->required();

  auto* eq = app.add_subcommand("eq", "test equality of two words");
  add_common(eq, true);
  eq->add_option("word1", word1)->required();
  eq->add_option("word2", word2)->required();

  std::string pres_name = "mixed";
  auto* present = app.add_subcommand("present", "dump a presentation");
  add_common(present, false);
  present->add_option("--pres", pres_name,
                      "mixed|punctured|base or a quotient name");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, false);
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--samples", samples, "randomized sample count");
  verify->add_option("--suite", suite,
                     "relators|diagram|rigidity|nonextension|oracle-agreement|all");

  std::string invariants, trivial_word;
  auto* oracle = app.add_subcommand("oracle", "class-2 nilpotent oracle");
  add_common(oracle, false);
  oracle->add_option("--pres", pres_name, "mixed|punctured|base");
  oracle->add_option("--invariants", invariants, "abelian|gamma2mod3");
  oracle->add_option("--trivial", trivial_word, "test word triviality in G/Gamma_3");

  CLI11_PARSE(app, argc, argv);

  try {
    const GroupParams params{k, n, g};
    params.validate();

    if (nf->parsed()) {
      const QuotientKind kind = parse_kind(quotient);
      const Word w = parse_word(prenormalize(word1), params);
      const std::string out = normal_form(w, params, kind);
      if (json_out)
        std::cout << json{{"schema", 1},
                          {"quotient", quotient},
                          {"word", word1},
                          {"normal_form", out}}
                  << "\n";
      else
        std::cout << out << "\n";
      return 0;
    }

    if (eq->parsed()) {
      const QuotientKind kind = parse_kind(quotient);
      const std::string nf1 =
          normal_form(parse_word(prenormalize(word1), params), params, kind);
      const std::string nf2 =
          normal_form(parse_word(prenormalize(word2), params), params, kind);
      const bool equal = nf1 == nf2;
      if (json_out)
        std::cout << json{{"schema", 1},
                          {"quotient", quotient},
                          {"equal", equal},
                          {"normal_form1", nf1},
                          {"normal_form2", nf2}}
                  << "\n";
      else
        std::cout << (equal ? "equal" : "unequal") << "\n";
      return equal ? 0 : 1;
    }

    if (present->parsed()) {
      const Presentation pres = make_presentation(params, parse_kind(pres_name));
      if (json_out) {
        json gens = json::array(), rels = json::array();
        for (const Generator& x : pres.generators) gens.push_back(x.name());
        for (const Word& r : pres.relators) rels.push_back(r.str());
        std::cout << json{{"schema", 1},
                          {"presentation", pres_name},
                          {"generators", std::move(gens)},
                          {"relators", std::move(rels)}}
                  << "\n";
      } else {
        std::cout << "generators:";
        for (const Generator& x : pres.generators) std::cout << " " << x.name();
        std::cout << "\nrelators (" << pres.relators.size() << "):\n";
        for (const Word& r : pres.relators) std::cout << "  " << r.str() << "\n";
      }
      return 0;
    }

    if (verify->parsed()) {
      std::vector<VerificationReport> reports;
      const bool all = suite == "all";
      if (all || suite == "relators") reports.push_back(verify_relators(params));
      if (all || suite == "diagram")
        reports.push_back(verify_diagram(params, seed, samples));
      if (all || suite == "rigidity")
        reports.push_back(verify_rigidity(params, seed, samples));
      if (all || suite == "nonextension")
        reports.push_back(verify_nonextension(params));
      if (all || suite == "oracle-agreement")
        reports.push_back(verify_oracle_agreement(params, seed, samples));
      if (reports.empty()) throw RegimeError("unknown suite: " + suite);

      json out = {{"schema", 1}, {"suites", json::array()}};
      bool ok = true;
      for (const VerificationReport& r : reports) {
        print_report(r, json_out, out);
        ok = ok && r.all_pass();
      }
      if (json_out) {
        out["pass"] = ok;
        std::cout << out << "\n";
      }
      return ok ? 0 : 1;
    }

    if (oracle->parsed()) {
      const QuotientKind kind = parse_kind(pres_name);
      const Presentation pres = make_presentation(params, kind);
      if (!trivial_word.empty()) {
        const Word w = parse_word(prenormalize(trivial_word), params);
        const bool trivial = is_trivial_class2(pres, w);
        if (json_out)
          std::cout << json{{"schema", 1},
                            {"presentation", pres_name},
                            {"word", trivial_word},
                            {"trivial", trivial}}
                    << "\n";
        else
          std::cout << (trivial ? "trivial" : "nontrivial") << "\n";
        return trivial ? 0 : 1;
      }
      SmithInvariants inv;
      if (invariants == "abelian" || invariants.empty())
        inv = abelian_invariants(pres);
      else if (invariants == "gamma2mod3")
        inv = gamma2_mod_gamma3_invariants(pres);
      else
        throw RegimeError("unknown invariants mode: " + invariants);
      if (json_out) {
        json torsion = json::array();
        for (const mpz_class& t : inv.torsion) torsion.push_back(t.get_str());
        std::cout << json{{"schema", 1},
                          {"presentation", pres_name},
                          {"free_rank", inv.free_rank},
                          {"torsion", std::move(torsion)},
                          {"invariants", inv.str()}}
                  << "\n";
      } else {
        std::cout << inv.str() << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
