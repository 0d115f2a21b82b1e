#include "stvb/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace stvb {

namespace {

bool kind_in_alphabet(GenKind k, Alphabet tag) {
  switch (tag) {
    case Alphabet::braid:
      return k == GenKind::sigma_pos || k == GenKind::sigma_neg || k == GenKind::rho
          || k == GenKind::tau || k == GenKind::gamma;
    case Alphabet::braid_group:
      return k == GenKind::sigma_pos || k == GenKind::sigma_neg || k == GenKind::rho
          || k == GenKind::tau || k == GenKind::tau_bar || k == GenKind::gamma;
    case Alphabet::sub_p:
    case Alphabet::sub_pg:
      return k == GenKind::lam_pos || k == GenKind::lam_neg || k == GenKind::y
          || k == GenKind::gamma;
    case Alphabet::sub_h:
      return k == GenKind::x_pos || k == GenKind::x_neg || k == GenKind::z
          || k == GenKind::gamma;
    case Alphabet::sub_m:
      return k == GenKind::lam_pos || k == GenKind::lam_neg || k == GenKind::z
          || k == GenKind::gamma;
  }
  return false;
}

[[noreturn]] void bad_letter(Letter a, Alphabet tag, int n) {
  std::ostringstream msg;
  msg << "letter '" << format_letter(a) << "' is not valid over alphabet "
      << alphabet_name(tag) << " with n=" << n;
  throw std::invalid_argument(msg.str());
}

}  // namespace

const char* alphabet_name(Alphabet tag) {
  switch (tag) {
    case Alphabet::braid: return "braid";
    case Alphabet::braid_group: return "braid-group";
    case Alphabet::sub_p: return "subp";
    case Alphabet::sub_h: return "subh";
    case Alphabet::sub_m: return "subm";
    case Alphabet::sub_pg: return "subpg";
  }
  return "?";
}

Alphabet alphabet_from_name(std::string_view name) {
  if (name == "braid") return Alphabet::braid;
  if (name == "braid-group" || name == "group") return Alphabet::braid_group;
  if (name == "subp") return Alphabet::sub_p;
  if (name == "subh") return Alphabet::sub_h;
  if (name == "subm") return Alphabet::sub_m;
  if (name == "subpg") return Alphabet::sub_pg;
  throw std::invalid_argument("unknown alphabet '" + std::string(name) + "'");
}

bool letter_valid(Letter a, Alphabet tag, int n) {
  if (!kind_in_alphabet(a.kind, tag)) return false;
  if (two_index(a.kind)) {
    return a.i >= 1 && a.j >= 1 && a.i <= n && a.j <= n && a.i != a.j;
  }
  if (a.j != 0) return false;
  if (a.kind == GenKind::gamma) return a.i >= 1 && a.i <= n;
  return a.i >= 1 && a.i <= n - 1;
}

Word::Word(Alphabet tag, int n, std::vector<Letter> letters)
    : tag_(tag), n_(n), letters_(std::move(letters)) {
  validate();
}

void Word::validate() const {
  if (n_ < 2) throw std::invalid_argument("strand count must be at least 2");
  for (Letter a : letters_) {
    if (!letter_valid(a, tag_, n_)) bad_letter(a, tag_, n_);
  }
}

Word parse_word(std::string_view text, Alphabet tag, int n) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  auto parse_index = [&](std::string_view tok, std::size_t& at) {
    std::size_t start = at;
    while (at < tok.size() && std::isdigit(static_cast<unsigned char>(tok[at]))) ++at;
    if (at == start) {
      throw std::invalid_argument("unknown token '" + std::string(tok) + "'");
    }
    return std::stoi(std::string(tok.substr(start, at - start)));
  };
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view tok = text.substr(pos, end - pos);
    pos = end;

    GenKind kind;
    switch (tok[0]) {
      case 's': kind = GenKind::sigma_pos; break;
      case 'S': kind = GenKind::sigma_neg; break;
      case 'r': kind = GenKind::rho; break;
      case 't': kind = GenKind::tau; break;
      case 'T': kind = GenKind::tau_bar; break;
      case 'g': kind = GenKind::gamma; break;
      case 'l': kind = GenKind::lam_pos; break;
      case 'L': kind = GenKind::lam_neg; break;
      case 'y': kind = GenKind::y; break;
      case 'x': kind = GenKind::x_pos; break;
      case 'X': kind = GenKind::x_neg; break;
      case 'z': kind = GenKind::z; break;
      default:
        throw std::invalid_argument("unknown token '" + std::string(tok) + "'");
    }
    std::size_t at = 1;
    int i = parse_index(tok, at);
    int j = 0;
    if (two_index(kind)) {
      if (at >= tok.size() || tok[at] != ',') {
        throw std::invalid_argument("token '" + std::string(tok) + "' needs two indices");
      }
      ++at;
      j = parse_index(tok, at);
    }
    if (at != tok.size()) {
      throw std::invalid_argument("unknown token '" + std::string(tok) + "'");
    }
    Letter a{kind, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
    if (!letter_valid(a, tag, n)) bad_letter(a, tag, n);
    letters.push_back(a);
  }
  return Word(tag, n, std::move(letters));
}

std::string format_letter(Letter a) {
  char c = '?';
  switch (a.kind) {
    case GenKind::sigma_pos: c = 's'; break;
    case GenKind::sigma_neg: c = 'S'; break;
    case GenKind::rho: c = 'r'; break;
    case GenKind::tau: c = 't'; break;
    case GenKind::tau_bar: c = 'T'; break;
    case GenKind::gamma: c = 'g'; break;
    case GenKind::lam_pos: c = 'l'; break;
    case GenKind::lam_neg: c = 'L'; break;
    case GenKind::y: c = 'y'; break;
    case GenKind::x_pos: c = 'x'; break;
    case GenKind::x_neg: c = 'X'; break;
    case GenKind::z: c = 'z'; break;
  }
  std::string out(1, c);
  out += std::to_string(static_cast<int>(a.i));
  if (two_index(a.kind)) {
    out += ',';
    out += std::to_string(static_cast<int>(a.j));
  }
  return out;
}

std::string format_word(const Word& w) {
  std::string out;
  for (Letter a : w.letters()) {
    if (!out.empty()) out += ' ';
    out += format_letter(a);
  }
  return out;
}

Word concat(const Word& u, const Word& v) {
  if (u.tag() != v.tag() || u.strands() != v.strands()) {
    throw std::invalid_argument("concat: mismatched alphabet tag or strand count");
  }
  std::vector<Letter> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return Word(u.tag(), u.strands(), std::move(letters));
}

Letter inverse_letter(Letter a, Alphabet tag) {
  switch (a.kind) {
    case GenKind::rho:
    case GenKind::gamma:
      return a;
    case GenKind::sigma_pos: return {GenKind::sigma_neg, a.i};
    case GenKind::sigma_neg: return {GenKind::sigma_pos, a.i};
    case GenKind::tau:
      if (tag == Alphabet::braid_group) return {GenKind::tau_bar, a.i};
      throw std::domain_error("tau has no inverse in the monoid alphabet");
    case GenKind::tau_bar: return {GenKind::tau, a.i};
    case GenKind::lam_pos: return {GenKind::lam_neg, a.i, a.j};
    case GenKind::lam_neg: return {GenKind::lam_pos, a.i, a.j};
    case GenKind::x_pos: return {GenKind::x_neg, a.i, a.j};
    case GenKind::x_neg: return {GenKind::x_pos, a.i, a.j};
    case GenKind::y:
      throw std::domain_error("y has no inverse letter");
    case GenKind::z:
      throw std::domain_error("z has no inverse letter");
  }
  throw std::domain_error("letter has no inverse");
}

Word formal_inverse(const Word& w) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    letters.push_back(inverse_letter(*it, w.tag()));
  }
  return Word(w.tag(), w.strands(), std::move(letters));
}

namespace {

// rho_{j-1} rho_{j-2} ... rho_{i+1} `core` rho_{i+1} ... rho_{j-1}
Word rho_conjugate(std::vector<Letter> core, int i, int j, int n) {
  std::vector<Letter> letters;
  for (int k = j - 1; k > i; --k) letters.push_back(rho(k));
  letters.insert(letters.end(), core.begin(), core.end());
  for (int k = i + 1; k <= j - 1; ++k) letters.push_back(rho(k));
  return Word(Alphabet::braid, n, std::move(letters));
}

Word expand_two_index(Letter g, std::vector<Letter> (*adjacent_core)(int), int n) {
  int i = g.i, j = g.j;
  if (j == i + 1) return Word(Alphabet::braid, n, adjacent_core(i));
  if (i == j + 1) {
    std::vector<Letter> core{rho(j)};
    auto mid = adjacent_core(j);
    core.insert(core.end(), mid.begin(), mid.end());
    core.push_back(rho(j));
    return Word(Alphabet::braid, n, std::move(core));
  }
  if (i < j) return rho_conjugate(adjacent_core(i), i, j, n);
  // i > j + 1: conjugate the (j+1, j) form up to (i, j)
  std::vector<Letter> core{rho(j)};
  auto mid = adjacent_core(j);
  core.insert(core.end(), mid.begin(), mid.end());
  core.push_back(rho(j));
  return rho_conjugate(std::move(core), j, i, n);
}

std::vector<Letter> lam_core(int i) { return {rho(i), sigma_inv(i)}; }
std::vector<Letter> y_core(int i) { return {tau(i), rho(i)}; }
std::vector<Letter> x_core(int i) { return {sigma(i)}; }
std::vector<Letter> z_core(int i) { return {tau(i)}; }

}  // namespace

Word expand_subgenerator(Letter g, int n) {
  switch (g.kind) {
    case GenKind::gamma:
      if (g.i < 1 || g.i > n) throw std::invalid_argument("gamma index out of bounds");
      return Word(Alphabet::braid, n, {g});
    case GenKind::lam_pos: break;
    case GenKind::lam_neg:
      return formal_inverse(expand_subgenerator(lam(g.i, g.j), n));
    case GenKind::y: break;
    case GenKind::x_pos: break;
    case GenKind::x_neg:
      return formal_inverse(expand_subgenerator(x(g.i, g.j), n));
    case GenKind::z: break;
    default:
      throw std::invalid_argument("expand_subgenerator: '" + format_letter(g)
                                  + "' is not a submonoid generator");
  }
  if (g.i < 1 || g.j < 1 || g.i > n || g.j > n || g.i == g.j) {
    throw std::invalid_argument("index out of bounds for '" + format_letter(g) + "'");
  }
  switch (g.kind) {
    case GenKind::lam_pos: return expand_two_index(g, lam_core, n);
    case GenKind::y: return expand_two_index(g, y_core, n);
    case GenKind::x_pos: return expand_two_index(g, x_core, n);
    case GenKind::z: return expand_two_index(g, z_core, n);
    default: break;
  }
  throw std::invalid_argument("expand_subgenerator: unreachable");
}

Word expand_word(const Word& w) {
  Word out(Alphabet::braid, w.strands());
  for (Letter a : w.letters()) out = concat(out, expand_subgenerator(a, w.strands()));
  return out;
}

}  // namespace stvb
