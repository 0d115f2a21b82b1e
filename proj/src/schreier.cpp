#include "stvb/schreier.hpp"

#include <stdexcept>

namespace stvb {

namespace {

std::string perm_key(const Permutation& p) {
  std::string key;
  for (int k = 1; k <= p.degree(); ++k) key += static_cast<char>(p.apply(k));
  return key;
}

}  // namespace

Word m_word(int k, int l, int n) {
  std::vector<Letter> letters;
  for (int i = k - 1; i >= l; --i) letters.push_back(rho(i));
  return Word(Alphabet::braid, n, std::move(letters));
}

Transversal::Transversal(int n) : n_(n) {
  if (n < 2 || n > 8) {
    throw std::invalid_argument("transversal supported for 2 <= n <= 8");
  }
  std::vector<int> tuple(n - 1);  // tuple[k-2] = j_k
  auto emit = [&]() {
    Word w(Alphabet::braid, n);
    for (int k = 2; k <= n; ++k) w = concat(w, m_word(k, tuple[k - 2], n));
    Permutation img = eval_hom(w, Hom::bar);
    auto [it, fresh] = index_.try_emplace(perm_key(img), elems_.size());
    if (!fresh) throw std::logic_error("transversal images collide");
    elems_.push_back(TransversalElement{tuple, std::move(w), std::move(img)});
  };
  // ascending in the distances d_k = k - j_k, lexicographically, so the
  // identity tuple (2, 3, ..., n) comes first
  auto rec = [&](auto&& self, int k) -> void {
    if (k > n) {
      emit();
      return;
    }
    for (int j = k; j >= 1; --j) {
      tuple[k - 2] = j;
      self(self, k + 1);
    }
  };
  rec(rec, 2);
}

const TransversalElement& Transversal::by_image(const Permutation& p) const {
  auto it = index_.find(perm_key(p));
  if (it == index_.end()) throw std::invalid_argument("no transversal element for image");
  return elems_[it->second];
}

const TransversalElement& Transversal::representative(const Word& w, Hom h) const {
  return by_image(eval_hom(w, h));
}

Alphabet hom_target_alphabet(Hom h) {
  switch (h) {
    case Hom::phi1: return Alphabet::sub_p;
    case Hom::phi2: return Alphabet::sub_h;
    case Hom::phi3: return Alphabet::sub_m;
    default:
      throw std::invalid_argument("rewriting is defined for phi1, phi2, phi3 only");
  }
}

std::optional<Letter> base_schreier_generator(Letter a, Hom h) {
  hom_target_alphabet(h);  // validates h
  int i = a.i;
  switch (a.kind) {
    case GenKind::rho:
      return std::nullopt;
    case GenKind::gamma:
      return gamma(i);
    case GenKind::sigma_pos:
      return h == Hom::phi2 ? x(i, i + 1) : lam_inv(i, i + 1);
    case GenKind::sigma_neg:
      return h == Hom::phi2 ? x_inv(i, i + 1) : lam(i + 1, i);
    case GenKind::tau:
      return h == Hom::phi1 ? y(i, i + 1) : z(i, i + 1);
    default:
      throw std::invalid_argument("no Schreier generator for letter '" + format_letter(a)
                                  + "'");
  }
}

namespace {

Letter relabel(Letter g, const Permutation& p) {
  Letter out = g;
  out.i = static_cast<std::uint8_t>(p.apply(g.i));
  if (two_index(g.kind)) out.j = static_cast<std::uint8_t>(p.apply(g.j));
  return out;
}

}  // namespace

std::optional<Letter> schreier_generator(const TransversalElement& lambda, Letter a, Hom h) {
  auto base = base_schreier_generator(a, h);
  if (!base) return std::nullopt;
  return relabel(*base, lambda.image.inverse());
}

Letter conjugate_subgenerator(Letter g, const Word& rho_word) {
  if (g.kind != GenKind::gamma && !two_index(g.kind)) {
    throw std::invalid_argument("conjugate_subgenerator expects a submonoid generator");
  }
  return relabel(g, eval_hom(rho_word, Hom::bar));
}

Word rewrite_f(const Word& w, Hom h, const Transversal& t) {
  if (w.strands() != t.strands()) throw std::invalid_argument("strand count mismatch");
  std::vector<Letter> out;
  Permutation prefix(w.strands());
  for (Letter a : w.letters()) {
    const TransversalElement& lambda = t.by_image(prefix);
    if (auto s = schreier_generator(lambda, a, h)) out.push_back(*s);
    prefix = compose(prefix, letter_image(a, h, w.strands()));
  }
  return Word(hom_target_alphabet(h), w.strands(), std::move(out));
}

}  // namespace stvb
