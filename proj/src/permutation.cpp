#include "stvb/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace stvb {

Permutation::Permutation(int n) {
  if (n < 1) throw std::invalid_argument("permutation degree must be positive");
  img_.resize(n);
  std::iota(img_.begin(), img_.end(), std::uint8_t{1});
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("transposition index out of range");
  Permutation p(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
  int n = static_cast<int>(images.size());
  Permutation p(n);
  std::vector<bool> seen(n, false);
  for (int k = 0; k < n; ++k) {
    int v = images[k];
    if (v < 1 || v > n || seen[v - 1]) {
      throw std::invalid_argument("one-line array is not a bijection");
    }
    seen[v - 1] = true;
    p.img_[k] = static_cast<std::uint8_t>(v);
  }
  return p;
}

int Permutation::apply(int k) const {
  if (k < 1 || k > degree()) throw std::invalid_argument("point out of range");
  return img_[k - 1];
}

bool Permutation::is_identity() const {
  for (int k = 0; k < degree(); ++k) {
    if (img_[k] != k + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p(degree());
  for (int k = 0; k < degree(); ++k) p.img_[img_[k] - 1] = static_cast<std::uint8_t>(k + 1);
  return p;
}

std::string Permutation::one_line() const {
  std::string out = "[";
  for (int k = 0; k < degree(); ++k) {
    if (k > 0) out += ' ';
    out += std::to_string(static_cast<int>(img_[k]));
  }
  out += ']';
  return out;
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (int k = 1; k <= degree(); ++k) {
    if (seen[k - 1] || apply(k) == k) continue;
    out += '(';
    int c = k;
    bool first = true;
    while (!seen[c - 1]) {
      seen[c - 1] = true;
      if (!first) out += ' ';
      out += std::to_string(c);
      first = false;
      c = apply(c);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> images(p.degree());
  for (int k = 1; k <= p.degree(); ++k) images[k - 1] = q.apply(p.apply(k));
  return Permutation::from_one_line(images);
}

const char* hom_name(Hom h) {
  switch (h) {
    case Hom::phi1: return "phi1";
    case Hom::phi2: return "phi2";
    case Hom::phi3: return "phi3";
    case Hom::pi: return "pi";
    case Hom::bar: return "bar";
  }
  return "?";
}

Hom hom_from_name(std::string_view name) {
  if (name == "phi1") return Hom::phi1;
  if (name == "phi2") return Hom::phi2;
  if (name == "phi3") return Hom::phi3;
  if (name == "pi") return Hom::pi;
  if (name == "bar") return Hom::bar;
  throw std::invalid_argument("unknown homomorphism '" + std::string(name) + "'");
}

bool hom_defined_on(Hom h, GenKind kind) {
  if (two_index(kind)) return false;
  switch (h) {
    case Hom::phi1:
    case Hom::phi2:
    case Hom::phi3:
      return kind != GenKind::tau_bar;
    case Hom::pi:
      return true;
    case Hom::bar:
      return kind == GenKind::rho;
  }
  return false;
}

namespace {

// True when h sends this kind to the transposition (i, i+1); false means
// the identity.  Caller has already checked hom_defined_on.
bool maps_to_transposition(Hom h, GenKind kind) {
  switch (kind) {
    case GenKind::rho:
      return true;
    case GenKind::gamma:
      return false;
    case GenKind::sigma_pos:
    case GenKind::sigma_neg:
      return h == Hom::phi1 || h == Hom::phi3 || h == Hom::pi;
    case GenKind::tau:
    case GenKind::tau_bar:
      return h == Hom::phi1 || h == Hom::pi;
    default:
      return false;
  }
}

}  // namespace

Permutation letter_image(Letter a, Hom h, int n) {
  if (!hom_defined_on(h, a.kind)) {
    throw std::domain_error(std::string("letter '") + format_letter(a)
                            + "' is outside the domain of " + hom_name(h));
  }
  return maps_to_transposition(h, a.kind) ? Permutation::transposition(n, a.i)
                                          : Permutation(n);
}

Permutation eval_hom(const Word& w, Hom h) {
  Permutation p(w.strands());
  for (Letter a : w.letters()) p = compose(p, letter_image(a, h, w.strands()));
  return p;
}

bool is_in_kernel(const Word& w, Hom h) { return eval_hom(w, h).is_identity(); }

}  // namespace stvb
