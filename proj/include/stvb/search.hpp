#ifndef STVB_SEARCH_HPP_
#define STVB_SEARCH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "stvb/presentation.hpp"
#include "stvb/schreier.hpp"
#include "stvb/word.hpp"

namespace stvb {

/// One rewrite: at `pos`, replace the relation's left side by its right
/// side (reverse = false) or right by left (reverse = true).
struct DerivationStep {
  std::size_t pos;
  std::size_t relation;  // index into the presentation's relation list
  bool reverse;
};

struct Derivation {
  std::vector<DerivationStep> steps;
};

// Applies one step; throws if the relation side does not match at pos.
Word apply_step(const Presentation& p, const Word& w, const DerivationStep& step);
// Replays a whole derivation from `start`.
Word replay(const Presentation& p, Word start, const Derivation& d);

enum class EqualStatus : std::uint8_t {
  equivalent,  // a derivation u -> v was found
  unknown,     // budget or length bound exhausted
  refuted,     // invariant vectors differ: definitive inequality
};

struct EqualResult {
  EqualStatus status;
  Derivation derivation;          // valid when equivalent
  std::string refuted_component;  // valid when refuted
  std::size_t states;             // states explored
};

// Bounded search for congruence equality of u and v under p's relations,
// applied as two-sided subword replacements.  Braid-side searches fast-fail
// on an invariant mismatch (definitive inequality).  Internally expands
// from both endpoints and stitches the traces; the returned derivation
// always replays from u to v.
EqualResult bfs_equal(const Presentation& p, const Word& u, const Word& v,
                      std::size_t budget, std::size_t maxlen);
// maxlen defaults to max(|u|, |v|) + 8: relations grow a word by at most 4
// letters, leaving headroom for two growing applications.
EqualResult bfs_equal(const Presentation& p, const Word& u, const Word& v,
                      std::size_t budget);

nlohmann::json derivation_to_json(const Presentation& p, const Word& u, const Derivation& d);

// Deterministic word sampling (mt19937_64 seeded as given).
Word random_word(int n, std::size_t length, Alphabet tag, std::uint64_t seed);
// As above, then a rho-only tail realizing the inverse of the prefix image,
// which forces membership in ker(h).
Word random_kernel_word(int n, std::size_t length, Hom h, std::uint64_t seed,
                        const Transversal& t);

}  // namespace stvb

#endif  // STVB_SEARCH_HPP_
