#ifndef STVB_INVARIANTS_HPP_
#define STVB_INVARIANTS_HPP_

#include <string>

#include "stvb/permutation.hpp"
#include "stvb/presentation.hpp"
#include "stvb/word.hpp"

namespace stvb {

/// Necessary-condition invariant vector of a braid-side word: the three
/// S_n images (tau_bar evaluated through the group extensions), the sigma
/// exponent sum, the tau count (tau_bar counts -1), and the rho and gamma
/// parities.  Componentwise additive / multiplicative over concatenation.
struct InvariantVector {
  Permutation img1;
  Permutation img2;
  Permutation img3;
  long long sigma_exp = 0;
  long long tau_count = 0;
  int rho_parity = 0;
  int gamma_parity = 0;

  bool operator==(const InvariantVector&) const = default;
  std::string str() const;
};

InvariantVector invariant_vector(const Word& w);

// Name of the first component on which the two vectors differ; empty when
// equal.
std::string first_difference(const InvariantVector& u, const InvariantVector& v);

struct InvarianceItem {
  std::string label;
  std::string indices;
  std::string component;  // failing component; empty on pass
  bool pass;
};

struct InvarianceReport {
  std::vector<InvarianceItem> items;
  bool ok;
};

// Confirms, relation by relation, that every invariant component is
// preserved by a braid-side presentation; a failure names the component.
InvarianceReport check_relation_invariance(const Presentation& p);

}  // namespace stvb

#endif  // STVB_INVARIANTS_HPP_
