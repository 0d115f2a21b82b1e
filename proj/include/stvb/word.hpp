#ifndef STVB_WORD_HPP_
#define STVB_WORD_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace stvb {

// Letter kinds.  The braid-side alphabet is sigma^{+-1}, rho, tau, tau_bar
// (group context only) and gamma; the submonoid-side alphabets use the
// two-index generators lam^{+-1}, y, x^{+-1}, z plus gamma.
enum class GenKind : std::uint8_t {
  sigma_pos,
  sigma_neg,
  rho,
  tau,
  tau_bar,
  gamma,
  lam_pos,
  lam_neg,
  y,
  x_pos,
  x_neg,
  z,
};

// One letter of a word.  `i` is the (first) index, 1-based; `j` is the
// second index for the two-index kinds and 0 otherwise.
struct Letter {
  GenKind kind;
  std::uint8_t i;
  std::uint8_t j = 0;

  auto operator<=>(const Letter&) const = default;
};

// Letter constructors.
inline Letter sigma(int i) { return {GenKind::sigma_pos, static_cast<std::uint8_t>(i)}; }
inline Letter sigma_inv(int i) { return {GenKind::sigma_neg, static_cast<std::uint8_t>(i)}; }
inline Letter rho(int i) { return {GenKind::rho, static_cast<std::uint8_t>(i)}; }
inline Letter tau(int i) { return {GenKind::tau, static_cast<std::uint8_t>(i)}; }
inline Letter tau_bar(int i) { return {GenKind::tau_bar, static_cast<std::uint8_t>(i)}; }
inline Letter gamma(int i) { return {GenKind::gamma, static_cast<std::uint8_t>(i)}; }
inline Letter lam(int i, int j) {
  return {GenKind::lam_pos, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
}
inline Letter lam_inv(int i, int j) {
  return {GenKind::lam_neg, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
}
inline Letter y(int i, int j) {
  return {GenKind::y, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
}
inline Letter x(int i, int j) {
  return {GenKind::x_pos, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
}
inline Letter x_inv(int i, int j) {
  return {GenKind::x_neg, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
}
inline Letter z(int i, int j) {
  return {GenKind::z, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
}

inline bool two_index(GenKind k) {
  return k == GenKind::lam_pos || k == GenKind::lam_neg || k == GenKind::y
      || k == GenKind::x_pos || k == GenKind::x_neg || k == GenKind::z;
}

// Word alphabets.  `braid` is the monoid alphabet of STVB_n, `braid_group`
// adds tau_bar (STVG_n); the sub_* alphabets carry the submonoid generators
// of STVP_n, STVH_n, M_n and the group STVPG_n.
enum class Alphabet : std::uint8_t { braid, braid_group, sub_p, sub_h, sub_m, sub_pg };

const char* alphabet_name(Alphabet tag);
Alphabet alphabet_from_name(std::string_view name);

// True iff `a` is a legal letter of the tagged alphabet on n strands.
bool letter_valid(Letter a, Alphabet tag, int n);

/// An immutable word over a fixed alphabet on n strands.  The empty word is
/// the identity e.  Construction validates every letter; no simplification
/// of any kind is applied (relations are congruence data, not free
/// reduction).
class Word {
 public:
  Word(Alphabet tag, int n) : tag_(tag), n_(n), letters_() { validate(); }
  Word(Alphabet tag, int n, std::vector<Letter> letters);
  Word(Alphabet tag, int n, std::initializer_list<Letter> letters)
      : Word(tag, n, std::vector<Letter>(letters)) {}

  Alphabet tag() const { return tag_; }
  int strands() const { return n_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  bool operator==(const Word&) const = default;

 private:
  void validate() const;

  Alphabet tag_;
  int n_;
  std::vector<Letter> letters_;
};

// Token grammar (whitespace separated, 1-based decimal indices):
//   s<i> = sigma_i, S<i> = sigma_i^{-1}, r<i> = rho_i, t<i> = tau_i,
//   T<i> = tau_bar_i, g<i> = gamma_i,
//   l<i>,<j> = lam_{i,j}, L<i>,<j> = lam_{i,j}^{-1}, y<i>,<j>, x<i>,<j>,
//   X<i>,<j> = x_{i,j}^{-1}, z<i>,<j>.
Word parse_word(std::string_view text, Alphabet tag, int n);
std::string format_letter(Letter a);
std::string format_word(const Word& w);

// Concatenation; the monoid operation.  Throws on tag or strand mismatch.
Word concat(const Word& u, const Word& v);

// The inverse letter, when one exists in the given alphabet.  tau inverts
// only in the group alphabet; y and z never invert.
Letter inverse_letter(Letter a, Alphabet tag);

// Reversed sequence of inverse letters.  Throws if some letter has no
// inverse in w's alphabet.
Word formal_inverse(const Word& w);

// Expansion of a submonoid generator into the braid alphabet:
//   lam_{i,i+1} = rho_i sigma_i^{-1},   y_{i,i+1} = tau_i rho_i,
//   x_{i,i+1} = sigma_i,                z_{i,i+1} = tau_i,
//   g_{i+1,i} = rho_i g_{i,i+1} rho_i,
//   g_{i,j}   = rho_{j-1}...rho_{i+1} g_{i,i+1} rho_{i+1}...rho_{j-1},
//   g_{j,i}   = rho_{j-1}...rho_{i+1} g_{i+1,i} rho_{i+1}...rho_{j-1}
// for i < j, gamma_j expands to itself, and negative kinds to the formal
// inverse of the positive expansion.
Word expand_subgenerator(Letter g, int n);

// Letterwise expansion of a submonoid word into the braid alphabet.
Word expand_word(const Word& w);

}  // namespace stvb

#endif  // STVB_WORD_HPP_
