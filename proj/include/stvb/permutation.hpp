#ifndef STVB_PERMUTATION_HPP_
#define STVB_PERMUTATION_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stvb/word.hpp"

namespace stvb {

/// An element of S_n in one-line notation.  Words act left to right, so
/// compose(p, q) applies p first; points transform on the right, matching
/// the (k)a-bar convention used throughout.
class Permutation {
 public:
  explicit Permutation(int n);  // identity
  static Permutation transposition(int n, int i);  // (i, i+1)
  static Permutation from_one_line(const std::vector<int>& images);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int k) const;  // image of the point k, 1-based
  bool is_identity() const;
  Permutation inverse() const;

  std::string one_line() const;  // "[2 1 3]"
  std::string cycles() const;    // "(1 2)", identity prints "e"

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint8_t> img_;  // img_[k-1] = image of k
};

// p first, then q.
Permutation compose(const Permutation& p, const Permutation& q);

// The epimorphisms onto S_n (phi1, phi2, phi3 on the monoid alphabet, pi on
// the group alphabet) and the bar isomorphism on rho-only words.
enum class Hom : std::uint8_t { phi1, phi2, phi3, pi, bar };

const char* hom_name(Hom h);
Hom hom_from_name(std::string_view name);

// True iff h assigns an image to this letter kind.
bool hom_defined_on(Hom h, GenKind kind);

// Image of a single letter; throws if the letter is outside h's domain.
Permutation letter_image(Letter a, Hom h, int n);

// Product of per-letter images, left to right.  eval_hom(e) = identity.
Permutation eval_hom(const Word& w, Hom h);

bool is_in_kernel(const Word& w, Hom h);

}  // namespace stvb

#endif  // STVB_PERMUTATION_HPP_
