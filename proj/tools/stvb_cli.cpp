// Command-line front end: presentations, homomorphism images, Schreier
// rewriting, generator expansion, the a,b,c representation, bounded
// congruence search, and the verification suites.
//
// Exit codes: 0 success / all pass, 1 any fail, 2 unknown-only outcomes,
// 3 definitive refutation (equal), 64 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "stvb/group_algebra.hpp"
#include "stvb/invariants.hpp"
#include "stvb/presentation.hpp"
#include "stvb/schreier.hpp"
#include "stvb/search.hpp"
#include "stvb/verify.hpp"
#include "stvb/word.hpp"

namespace {

using nlohmann::json;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream file(out_path);
    if (!file) throw std::runtime_error("cannot open output path " + out_path);
    file << text;
    if (!text.empty() && text.back() != '\n') file << '\n';
  }
}

int report_exit(const stvb::VerificationReport& report) {
  if (report.failed() > 0) return 1;
  if (report.unknown() > 0) return 2;
  return 0;
}

stvb::RepSpec load_rep(const std::string& path, int n) {
  if (path.empty()) return stvb::make_canonical_rep(n);
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open representation file " + path);
  json j = json::parse(file);
  return stvb::rep_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"singular twisted virtual braid monoid toolkit"};
  app.require_subcommand(1);

  std::string family = "stvb";
  std::string suite = "images";
  std::string hom = "phi1";
  std::string word_text;
  std::string alphabet = "subp";
  std::string format = "text";
  std::string out_path;
  std::string rep_path;
  std::string word_u, word_v;
  int n = 0;
  std::size_t budget = 100000;
  std::size_t samples = 1000;
  std::size_t maxlen = 0;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", out_path);
  };

  CLI::App* present = app.add_subcommand("present", "print a presentation");
  present->add_option("--family", family);
  present->add_option("--n", n);
  add_common(present);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"images", "phi-abc", "submonoid", "reductions",
                             "schreier-golden", "lemma", "fuzz", "negative-controls"}));
  verify->add_option("--family", family);
  verify->add_option("--n", n);
  verify->add_option("--hom", hom);
  verify->add_option("--samples", samples);
  verify->add_option("--maxlen", maxlen);
  verify->add_option("--seed", seed);
  verify->add_option("--rep", rep_path);
  add_common(verify);

  CLI::App* image = app.add_subcommand("image", "image of a word under a homomorphism");
  image->add_option("--hom", hom);
  image->add_option("--n", n);
  image->add_option("--word", word_text)->required();
  add_common(image);

  CLI::App* rewrite = app.add_subcommand("rewrite", "rewrite a kernel word");
  rewrite->add_option("--hom", hom);
  rewrite->add_option("--n", n);
  rewrite->add_option("--word", word_text)->required();
  add_common(rewrite);

  CLI::App* expand = app.add_subcommand("expand", "expand submonoid generators");
  expand->add_option("--alphabet", alphabet);
  expand->add_option("--n", n);
  expand->add_option("--word", word_text)->required();
  add_common(expand);

  CLI::App* phi = app.add_subcommand("phi", "symbolic a,b,c image of a braid word");
  phi->add_option("--n", n);
  phi->add_option("--word", word_text)->required();
  phi->add_option("--rep", rep_path);
  add_common(phi);

  CLI::App* equal = app.add_subcommand("equal", "bounded congruence search");
  equal->add_option("--family", family);
  equal->add_option("--n", n);
  equal->add_option("--budget", budget);
  equal->add_option("--maxlen", maxlen);
  equal->add_option("u", word_u)->required();
  equal->add_option("v", word_v)->required();
  add_common(equal);

  CLI::App* transversal = app.add_subcommand("transversal", "list the Schreier transversal");
  transversal->add_option("--n", n);
  add_common(transversal);

  CLI::App* fuzz = app.add_subcommand("fuzz", "round-trip fuzzing");
  fuzz->add_option("--hom", hom);
  fuzz->add_option("--n", n);
  fuzz->add_option("--samples", samples);
  fuzz->add_option("--maxlen", maxlen);
  fuzz->add_option("--seed", seed);
  add_common(fuzz);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 64;
  }

  try {
    if (present->parsed()) {
      if (n == 0) n = 4;
      stvb::Presentation p = stvb::build_presentation(stvb::family_from_name(family), n);
      emit(format == "json" ? stvb::to_json(p).dump(2) : stvb::to_text(p), out_path);
      return 0;
    }

    if (verify->parsed() || fuzz->parsed()) {
      stvb::VerificationReport report;
      if (fuzz->parsed()) suite = "fuzz";
      if (n == 0) n = (suite == "phi-abc" || suite == "fuzz") ? 3 : 4;
      if (suite == "images") {
        report = stvb::verify_presentation_under_images(stvb::family_from_name(family), n);
      } else if (suite == "phi-abc") {
        report = stvb::verify_phi_abc(n, load_rep(rep_path, n));
      } else if (suite == "submonoid") {
        stvb::Family f = stvb::family_from_name(family == "stvb" ? "stvp" : family);
        report = stvb::verify_submonoid_presentation(f, n);
      } else if (suite == "reductions") {
        report = stvb::verify_reduction_formulas(n);
      } else if (suite == "schreier-golden") {
        report = stvb::verify_schreier_golden(n);
      } else if (suite == "lemma") {
        report = stvb::verify_lemma_action(n);
      } else if (suite == "fuzz") {
        if (maxlen == 0) maxlen = 20;
        report = stvb::fuzz_roundtrip(n, samples, maxlen, seed,
                                      stvb::hom_from_name(hom));
      } else {
        report = stvb::verify_negative_controls();
      }
      emit(format == "json" ? report.to_json().dump(2) : report.to_text(), out_path);
      return report_exit(report);
    }

    if (image->parsed()) {
      if (n == 0) n = 4;
      stvb::Hom h = stvb::hom_from_name(hom);
      stvb::Alphabet tag =
          h == stvb::Hom::pi ? stvb::Alphabet::braid_group : stvb::Alphabet::braid;
      stvb::Word w = stvb::parse_word(word_text, tag, n);
      stvb::Permutation p = stvb::eval_hom(w, h);
      if (format == "json") {
        json arr = json::array();
        for (int k = 1; k <= n; ++k) arr.push_back(p.apply(k));
        emit(json{{"one_line", arr}, {"cycles", p.cycles()}}.dump(2), out_path);
      } else {
        emit(p.one_line() + "  " + p.cycles(), out_path);
      }
      return 0;
    }

    if (rewrite->parsed()) {
      if (n == 0) n = 4;
      stvb::Hom h = stvb::hom_from_name(hom);
      stvb::Transversal t(n);
      stvb::Word w = stvb::parse_word(word_text, stvb::Alphabet::braid, n);
      if (!stvb::is_in_kernel(w, h)) {
        std::cerr << "note: word is not in ker(" << hom << "); the output names "
                  << "w * rep(w)^{-1}, whose residual coset word is "
                  << stvb::format_word(t.representative(w, h).word) << '\n';
      }
      stvb::Word out = stvb::rewrite_f(w, h, t);
      emit(format == "json" ? json{{"word", stvb::format_word(out)}}.dump(2)
                            : stvb::format_word(out),
           out_path);
      return 0;
    }

    if (expand->parsed()) {
      if (n == 0) n = 4;
      stvb::Word w = stvb::parse_word(word_text, stvb::alphabet_from_name(alphabet), n);
      stvb::Word out = stvb::expand_word(w);
      emit(format == "json" ? json{{"word", stvb::format_word(out)}}.dump(2)
                            : stvb::format_word(out),
           out_path);
      return 0;
    }

    if (phi->parsed()) {
      if (n == 0) n = 3;
      stvb::RepSpec spec = load_rep(rep_path, n);
      stvb::RepCheck check = stvb::validate_rep(spec);
      if (!check.ok) {
        std::cerr << "representation fails TVB validation\n";
        return 1;
      }
      stvb::Word w = stvb::parse_word(word_text, stvb::Alphabet::braid, n);
      stvb::AlgebraElement x = stvb::phi_eval(w, spec);
      emit(format == "json" ? x.to_json().dump(2) : x.str(), out_path);
      return 0;
    }

    if (equal->parsed()) {
      if (n == 0) n = 3;
      stvb::Presentation p = stvb::build_presentation(stvb::family_from_name(family), n);
      stvb::Word u = stvb::parse_word(word_u, p.tag, n);
      stvb::Word v = stvb::parse_word(word_v, p.tag, n);
      stvb::EqualResult res = maxlen == 0 ? stvb::bfs_equal(p, u, v, budget)
                                          : stvb::bfs_equal(p, u, v, budget, maxlen);
      json j;
      int code = 0;
      switch (res.status) {
        case stvb::EqualStatus::equivalent:
          j = stvb::derivation_to_json(p, u, res.derivation);
          j["status"] = "equivalent";
          break;
        case stvb::EqualStatus::unknown:
          j = {{"status", "unknown"}, {"states", res.states}};
          code = 2;
          break;
        case stvb::EqualStatus::refuted:
          j = {{"status", "refuted"}, {"component", res.refuted_component}};
          code = 3;
          break;
      }
      emit(format == "json" ? j.dump(2) : j.dump(2), out_path);
      return code;
    }

    if (transversal->parsed()) {
      if (n == 0) n = 4;
      stvb::Transversal t(n);
      if (format == "json") {
        json arr = json::array();
        for (const auto& el : t.elements()) {
          json tup = json::array();
          for (int jk : el.tuple) tup.push_back(jk);
          arr.push_back({{"tuple", tup},
                         {"word", stvb::format_word(el.word)},
                         {"image", el.image.cycles()}});
        }
        emit(arr.dump(2), out_path);
      } else {
        std::string text;
        for (const auto& el : t.elements()) {
          std::string tup;
          for (int jk : el.tuple) tup += (tup.empty() ? "" : ",") + std::to_string(jk);
          text += "(" + tup + ") | " + stvb::format_word(el.word) + " | "
                + el.image.one_line() + " " + el.image.cycles() + "\n";
        }
        emit(text, out_path);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 64;
  }
  return 64;
}
