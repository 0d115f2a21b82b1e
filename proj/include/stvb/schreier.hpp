#ifndef STVB_SCHREIER_HPP_
#define STVB_SCHREIER_HPP_

#include <optional>
#include <unordered_map>
#include <vector>

#include "stvb/permutation.hpp"
#include "stvb/word.hpp"

namespace stvb {

/// One coset representative: the tuple (j_2, ..., j_n) with 1 <= j_k <= k,
/// its realized rho-only word m_{2,j_2} m_{3,j_3} ... m_{n,j_n}, and the
/// word's image in S_n.
struct TransversalElement {
  std::vector<int> tuple;
  Word word;
  Permutation image;
};

// m_{k,l} = rho_{k-1} rho_{k-2} ... rho_l for l < k, the empty word for
// l = k.
Word m_word(int k, int l, int n);

/// The Schreier transversal Lambda_n: n! coset representatives, one per
/// element of S_n.  Ordered identity-first (ascending in the distances
/// k - j_k, lexicographically).
class Transversal {
 public:
  explicit Transversal(int n);  // 2 <= n <= 8

  int strands() const { return n_; }
  const std::vector<TransversalElement>& elements() const { return elems_; }
  const TransversalElement& by_image(const Permutation& p) const;
  // The unique element whose image equals eval_hom(w, h).
  const TransversalElement& representative(const Word& w, Hom h) const;

 private:
  int n_;
  std::vector<TransversalElement> elems_;
  std::unordered_map<std::string, std::size_t> index_;
};

// The submonoid alphabet that the rewriting along h lands in.
Alphabet hom_target_alphabet(Hom h);

// s_{e,a}: the Schreier generator at the identity coset, as a submonoid
// letter; empty for the rho letters (s_{lambda,rho_i} = e).
std::optional<Letter> base_schreier_generator(Letter a, Hom h);

// s_{lambda,a} = lambda a (rep(lambda a))^{-1}, named as a submonoid letter:
// the base generator with indices relabeled through the conjugation action
// of lambda^{-1}.
std::optional<Letter> schreier_generator(const TransversalElement& lambda, Letter a, Hom h);

// Lemma-3.1 action: a^{-1} g a for a rho-only word a relabels g's indices
// by the image of a, acting on the right.  Extended verbatim to the x and z
// kinds (their rho-conjugated definitions force it; verified by tests).
Letter conjugate_subgenerator(Letter g, const Word& rho_word);

// The rewriting process f: the concatenation, over letters a_l of w, of
// s_{rep(prefix), a_l}, dropping empty factors.  f(w) names the kernel
// element w * rep(w)^{-1}, so it equals w exactly when w is in ker(h);
// relation sides are rewritten with it as-is.
Word rewrite_f(const Word& w, Hom h, const Transversal& t);

}  // namespace stvb

#endif  // STVB_SCHREIER_HPP_
