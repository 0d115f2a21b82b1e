#ifndef STVB_GROUP_ALGEBRA_HPP_
#define STVB_GROUP_ALGEBRA_HPP_

#include <array>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "stvb/permutation.hpp"
#include "stvb/rational.hpp"
#include "stvb/word.hpp"

namespace stvb {

// Graded lexicographic order on exponent triples (e_a, e_b, e_c).
struct GradedLex {
  bool operator()(const std::array<int, 3>& u, const std::array<int, 3>& v) const {
    int du = u[0] + u[1] + u[2], dv = v[0] + v[1] + v[2];
    if (du != dv) return du < dv;
    return u < v;
  }
};

/// Sparse polynomial in the indeterminates a, b, c over exact rationals.
/// Zero coefficients are never stored, so map equality is polynomial
/// equality.
class PolyABC {
 public:
  using Terms = std::map<std::array<int, 3>, Rational, GradedLex>;

  PolyABC() = default;
  static PolyABC constant(Rational r);
  static PolyABC var_a() { return monomial({1, 0, 0}); }
  static PolyABC var_b() { return monomial({0, 1, 0}); }
  static PolyABC var_c() { return monomial({0, 0, 1}); }
  static PolyABC monomial(std::array<int, 3> exps, Rational coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial

  friend PolyABC operator+(const PolyABC& p, const PolyABC& q);
  friend PolyABC operator*(const PolyABC& p, const PolyABC& q);
  bool operator==(const PolyABC&) const = default;

  std::string str() const;  // graded-lex, highest terms first

 private:
  void insert(std::array<int, 3> exps, Rational coeff);

  Terms terms_;
};

/// Element of the group algebra Q(a,b,c)[S_n]: a finite association from
/// permutations to polynomials, no zero polynomials stored.
class AlgebraElement {
 public:
  explicit AlgebraElement(int n) : n_(n) {}
  static AlgebraElement unit(int n);  // {identity -> 1}
  static AlgebraElement basis(const Permutation& g, PolyABC coeff = PolyABC::constant(1));

  int degree() const { return n_; }
  const std::map<Permutation, PolyABC>& terms() const { return terms_; }
  void add_term(const Permutation& g, const PolyABC& coeff);

  bool operator==(const AlgebraElement&) const = default;

  std::string str() const;
  nlohmann::json to_json() const;

 private:
  int n_;
  std::map<Permutation, PolyABC> terms_;
};

AlgebraElement algebra_add(const AlgebraElement& x, const AlgebraElement& y);
// Convolution: the coefficient of g in xy sums x(g1) y(g2) over g1 g2 = g.
AlgebraElement algebra_mul(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement algebra_scale(const PolyABC& p, const AlgebraElement& x);

/// A representation phi: TVB_n -> S_n given by per-generator images.
/// Validation evaluates every TVB(n) relation.
struct RepSpec {
  int n;
  std::vector<Permutation> sigma_images;  // sigma_1 .. sigma_{n-1}
  std::vector<Permutation> rho_images;    // rho_1 .. rho_{n-1}
  std::vector<Permutation> gamma_images;  // gamma_1 .. gamma_n
};

struct RepCheckItem {
  std::string label;
  std::string indices;
  bool pass;
  std::string left_image;
  std::string right_image;
};

struct RepCheck {
  std::vector<RepCheckItem> items;
  bool ok;
};

// The permutation-quotient instance: sigma_i, rho_i -> (i, i+1), gamma_i ->
// identity.  Always validates.
RepSpec make_canonical_rep(int n);
RepCheck validate_rep(const RepSpec& spec);

RepSpec rep_from_json(const nlohmann::json& j);

// Image of a braid word in S_n under the representation.
Permutation rep_image(const Word& w, const RepSpec& spec);

// Phi_{a,b,c}: sigma and its inverse, rho, gamma map to their phi-images
// with coefficient 1; tau_i maps to a phi(sigma_i) + b phi(sigma_i^{-1}) +
// c e with symbolic a, b, c.  Rejects tau_bar.
AlgebraElement phi_eval(const Word& w, const RepSpec& spec);

}  // namespace stvb

#endif  // STVB_GROUP_ALGEBRA_HPP_
