#include "stvb/group_algebra.hpp"

#include <stdexcept>

#include "stvb/presentation.hpp"

namespace stvb {

PolyABC PolyABC::constant(Rational r) { return monomial({0, 0, 0}, r); }

PolyABC PolyABC::monomial(std::array<int, 3> exps, Rational coeff) {
  PolyABC p;
  p.insert(exps, coeff);
  return p;
}

void PolyABC::insert(std::array<int, 3> exps, Rational coeff) {
  if (coeff.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(exps, coeff);
  if (!fresh) {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int PolyABC::total_degree() const {
  if (terms_.empty()) return -1;
  auto& exps = terms_.rbegin()->first;  // graded order: last term has top degree
  return exps[0] + exps[1] + exps[2];
}

PolyABC operator+(const PolyABC& p, const PolyABC& q) {
  PolyABC out = p;
  for (const auto& [exps, coeff] : q.terms_) out.insert(exps, coeff);
  return out;
}

PolyABC operator*(const PolyABC& p, const PolyABC& q) {
  PolyABC out;
  for (const auto& [pe, pc] : p.terms_) {
    for (const auto& [qe, qc] : q.terms_) {
      out.insert({pe[0] + qe[0], pe[1] + qe[1], pe[2] + qe[2]}, pc * qc);
    }
  }
  return out;
}

std::string PolyABC::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exps, coeff] = *it;
    if (!out.empty()) out += " + ";
    std::string mono;
    const char* names = "abc";
    for (int v = 0; v < 3; ++v) {
      if (exps[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[v];
      if (exps[v] > 1) mono += '^' + std::to_string(exps[v]);
    }
    if (mono.empty()) {
      out += coeff.str();
    } else if (coeff == Rational(1)) {
      out += mono;
    } else {
      out += coeff.str() + '*' + mono;
    }
  }
  return out;
}

AlgebraElement AlgebraElement::unit(int n) {
  return basis(Permutation(n), PolyABC::constant(1));
}

AlgebraElement AlgebraElement::basis(const Permutation& g, PolyABC coeff) {
  AlgebraElement x(g.degree());
  x.add_term(g, coeff);
  return x;
}

void AlgebraElement::add_term(const Permutation& g, const PolyABC& coeff) {
  if (g.degree() != n_) throw std::invalid_argument("algebra term degree mismatch");
  if (coeff.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(g, coeff);
  if (!fresh) {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [g, coeff] : terms_) {
    if (!out.empty()) out += "  +  ";
    out += '(' + coeff.str() + ") * " + g.cycles();
  }
  return out;
}

nlohmann::json AlgebraElement::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [g, coeff] : terms_) {
    nlohmann::json perm = nlohmann::json::array();
    for (int k = 1; k <= g.degree(); ++k) perm.push_back(g.apply(k));
    nlohmann::json poly = nlohmann::json::array();
    for (const auto& [exps, r] : coeff.terms()) {
      poly.push_back({exps[0], exps[1], exps[2], r.num(), r.den()});
    }
    arr.push_back({{"perm", perm}, {"poly", poly}});
  }
  return arr;
}

AlgebraElement algebra_add(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.degree() != y.degree()) throw std::invalid_argument("algebra size mismatch");
  AlgebraElement out = x;
  for (const auto& [g, coeff] : y.terms()) out.add_term(g, coeff);
  return out;
}

AlgebraElement algebra_mul(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.degree() != y.degree()) throw std::invalid_argument("algebra size mismatch");
  AlgebraElement out(x.degree());
  for (const auto& [g1, c1] : x.terms()) {
    for (const auto& [g2, c2] : y.terms()) {
      out.add_term(compose(g1, g2), c1 * c2);
    }
  }
  return out;
}

AlgebraElement algebra_scale(const PolyABC& p, const AlgebraElement& x) {
  AlgebraElement out(x.degree());
  for (const auto& [g, coeff] : x.terms()) out.add_term(g, p * coeff);
  return out;
}

RepSpec make_canonical_rep(int n) {
  RepSpec spec{n, {}, {}, {}};
  for (int i = 1; i <= n - 1; ++i) {
    spec.sigma_images.push_back(Permutation::transposition(n, i));
    spec.rho_images.push_back(Permutation::transposition(n, i));
  }
  for (int i = 1; i <= n; ++i) spec.gamma_images.emplace_back(n);
  RepCheck check = validate_rep(spec);
  if (!check.ok) throw std::logic_error("canonical representation failed validation");
  return spec;
}

Permutation rep_image(const Word& w, const RepSpec& spec) {
  Permutation out(spec.n);
  for (Letter a : w.letters()) {
    switch (a.kind) {
      case GenKind::sigma_pos: out = compose(out, spec.sigma_images[a.i - 1]); break;
      case GenKind::sigma_neg: out = compose(out, spec.sigma_images[a.i - 1].inverse()); break;
      case GenKind::rho: out = compose(out, spec.rho_images[a.i - 1]); break;
      case GenKind::gamma: out = compose(out, spec.gamma_images[a.i - 1]); break;
      default:
        throw std::domain_error("representation image undefined for '" + format_letter(a)
                                + "'");
    }
  }
  return out;
}

RepCheck validate_rep(const RepSpec& spec) {
  RepCheck check{{}, true};
  if (spec.n < 2 || spec.sigma_images.size() != static_cast<std::size_t>(spec.n - 1)
      || spec.rho_images.size() != static_cast<std::size_t>(spec.n - 1)
      || spec.gamma_images.size() != static_cast<std::size_t>(spec.n)) {
    throw std::invalid_argument("representation image lists have the wrong shape");
  }
  Presentation tvb = build_presentation(Family::tvb, spec.n);
  for (const Relation& r : tvb.relations) {
    Permutation left = rep_image(r.lhs, spec);
    Permutation right = rep_image(r.rhs, spec);
    bool pass = left == right;
    check.ok = check.ok && pass;
    check.items.push_back(
        RepCheckItem{r.label, binding_string(r.binding), pass, left.cycles(), right.cycles()});
  }
  return check;
}

RepSpec rep_from_json(const nlohmann::json& j) {
  RepSpec spec{j.at("n").get<int>(), {}, {}, {}};
  auto read = [&](const char* key, std::vector<Permutation>& out) {
    for (const auto& arr : j.at(key)) {
      out.push_back(Permutation::from_one_line(arr.get<std::vector<int>>()));
    }
  };
  read("sigma", spec.sigma_images);
  read("rho", spec.rho_images);
  read("gamma", spec.gamma_images);
  return spec;
}

AlgebraElement phi_eval(const Word& w, const RepSpec& spec) {
  if (w.strands() != spec.n) throw std::invalid_argument("strand count mismatch");
  AlgebraElement out = AlgebraElement::unit(spec.n);
  for (Letter a : w.letters()) {
    AlgebraElement step(spec.n);
    switch (a.kind) {
      case GenKind::sigma_pos:
        step = AlgebraElement::basis(spec.sigma_images[a.i - 1]);
        break;
      case GenKind::sigma_neg:
        step = AlgebraElement::basis(spec.sigma_images[a.i - 1].inverse());
        break;
      case GenKind::rho:
        step = AlgebraElement::basis(spec.rho_images[a.i - 1]);
        break;
      case GenKind::gamma:
        step = AlgebraElement::basis(spec.gamma_images[a.i - 1]);
        break;
      case GenKind::tau:
        step.add_term(spec.sigma_images[a.i - 1], PolyABC::var_a());
        step.add_term(spec.sigma_images[a.i - 1].inverse(), PolyABC::var_b());
        step.add_term(Permutation(spec.n), PolyABC::var_c());
        break;
      default:
        throw std::domain_error("Phi_{a,b,c} is defined on the monoid alphabet only");
    }
    out = algebra_mul(out, step);
  }
  return out;
}

}  // namespace stvb
