#include "stvb/invariants.hpp"

#include <stdexcept>

namespace stvb {

namespace {

// tau_bar falls outside the strict domains of phi1/phi2/phi3; the group
// extensions send it to the image of tau's inverse (pi for phi1, identity
// for phi2/phi3).
Permutation extended_image(Letter a, Hom h, int n) {
  if (a.kind == GenKind::tau_bar) {
    return h == Hom::phi1 ? Permutation::transposition(n, a.i) : Permutation(n);
  }
  return letter_image(a, h, n);
}

}  // namespace

InvariantVector invariant_vector(const Word& w) {
  if (w.tag() != Alphabet::braid && w.tag() != Alphabet::braid_group) {
    throw std::invalid_argument("invariant_vector expects a braid-side word");
  }
  int n = w.strands();
  InvariantVector v{Permutation(n), Permutation(n), Permutation(n), 0, 0, 0, 0};
  for (Letter a : w.letters()) {
    v.img1 = compose(v.img1, extended_image(a, Hom::phi1, n));
    v.img2 = compose(v.img2, extended_image(a, Hom::phi2, n));
    v.img3 = compose(v.img3, extended_image(a, Hom::phi3, n));
    switch (a.kind) {
      case GenKind::sigma_pos: v.sigma_exp += 1; break;
      case GenKind::sigma_neg: v.sigma_exp -= 1; break;
      case GenKind::tau: v.tau_count += 1; break;
      case GenKind::tau_bar: v.tau_count -= 1; break;
      case GenKind::rho: v.rho_parity ^= 1; break;
      case GenKind::gamma: v.gamma_parity ^= 1; break;
      default: break;
    }
  }
  return v;
}

std::string InvariantVector::str() const {
  return "phi1=" + img1.cycles() + " phi2=" + img2.cycles() + " phi3=" + img3.cycles()
       + " sigma_exp=" + std::to_string(sigma_exp) + " tau=" + std::to_string(tau_count)
       + " rho_par=" + std::to_string(rho_parity)
       + " gamma_par=" + std::to_string(gamma_parity);
}

std::string first_difference(const InvariantVector& u, const InvariantVector& v) {
  if (u.img1 != v.img1) return "phi1-image";
  if (u.img2 != v.img2) return "phi2-image";
  if (u.img3 != v.img3) return "phi3-image";
  if (u.sigma_exp != v.sigma_exp) return "sigma-exponent";
  if (u.tau_count != v.tau_count) return "tau-count";
  if (u.rho_parity != v.rho_parity) return "rho-parity";
  if (u.gamma_parity != v.gamma_parity) return "gamma-parity";
  return "";
}

InvarianceReport check_relation_invariance(const Presentation& p) {
  if (p.tag != Alphabet::braid && p.tag != Alphabet::braid_group) {
    throw std::invalid_argument("check_relation_invariance expects a braid-side family");
  }
  InvarianceReport report{{}, true};
  for (const Relation& r : p.relations) {
    std::string component = first_difference(invariant_vector(r.lhs), invariant_vector(r.rhs));
    bool pass = component.empty();
    report.ok = report.ok && pass;
    report.items.push_back(
        InvarianceItem{r.label, binding_string(r.binding), component, pass});
  }
  return report;
}

}  // namespace stvb
