#ifndef STVB_PRESENTATION_HPP_
#define STVB_PRESENTATION_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "stvb/word.hpp"

namespace stvb {

// Presentation families.  stvb_full / stvb_reduced / tvb / stvg are over the
// braid-side alphabets; stvp / stvh / m / stvpg are the submonoid (and pure
// group) presentations in their own generators.
enum class Family : std::uint8_t {
  stvb_full,
  stvb_reduced,
  tvb,
  stvg,
  stvp,
  stvh,
  m,
  stvpg,
};

const char* family_name(Family f);
Family family_from_name(std::string_view name);
Alphabet family_alphabet(Family f);

/// One fully instantiated relation lhs = rhs.  `label` names the relation
/// family (descriptive tags for the braid-side lists, "(45)".."(72)" for
/// the submonoid lists); `binding` records the concrete index
/// instantiation.
struct Relation {
  std::string label;
  std::map<std::string, int> binding;
  Word lhs;
  Word rhs;
};

std::string binding_string(const std::map<std::string, int>& binding);

struct Presentation {
  Family family;
  int n;
  Alphabet tag;
  std::vector<Relation> relations;
};

// Instantiates every relation family of `f` over all admissible index
// tuples for n strands.  Distinct-letter families range over tuples of
// pairwise distinct indices; instances that are literal mirror images of an
// earlier instance (u = v vs v = u) are dropped.  stvb_reduced requires
// n >= 5.
Presentation build_presentation(Family f, int n);

std::size_t count_relations(const Presentation& p);

// The canonical label list of a family (the coverage manifest): every
// defining relation family of that monoid or group, whether or not it has
// instances at a particular n.
std::vector<std::string> family_labels(Family f);

// Line-oriented export: "<label> | <left> = <right>" per relation.
std::string to_text(const Presentation& p);
nlohmann::json to_json(const Presentation& p);

}  // namespace stvb

#endif  // STVB_PRESENTATION_HPP_
