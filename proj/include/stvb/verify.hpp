#ifndef STVB_VERIFY_HPP_
#define STVB_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "stvb/group_algebra.hpp"
#include "stvb/presentation.hpp"

namespace stvb {

struct ReportItem {
  std::string label;
  std::string indices;
  std::string model;
  std::string verdict;     // "pass", "fail" or "unknown"
  nlohmann::json witness;  // null unless the item carries one; always set on fail
};

/// Aggregated results of one verification suite.  Items sort canonically by
/// (label, indices, model), so identical invocations serialize to identical
/// bytes.
struct VerificationReport {
  std::string suite;
  std::string family;
  int n = 0;
  std::vector<ReportItem> items;

  void add(std::string label, std::string indices, std::string model, bool pass,
           nlohmann::json witness = nullptr);
  void add_unknown(std::string label, std::string indices, std::string model,
                   nlohmann::json witness);
  void finalize();  // canonical sort

  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t unknown() const;
  bool all_pass() const { return failed() == 0 && unknown() == 0; }

  nlohmann::json to_json() const;
  std::string to_text() const;
};

// Every relation instance of a braid-side family, checked under every
// applicable image homomorphism and under invariant-vector equality.
VerificationReport verify_presentation_under_images(Family f, int n);

// Every STVB relation instance mapped through Phi_{a,b,c} with symbolic
// coefficients; the four singular/virtual/twist families carry their own
// model tags so they are individually visible.
VerificationReport verify_phi_abc(int n, const RepSpec& spec);

// Submonoid presentations: both sides of every relation expanded to braid
// words and compared under all image homs and invariants, plus the curated
// short-derivation list confirmed by bounded search (budget 1e6).
VerificationReport verify_submonoid_presentation(Family f, int n);

// The generator reduction formulas confirmed by bounded search at i = 2.
VerificationReport verify_reduction_formulas(int n);

// Token-exact golden derivations r_{1,e} and r_{2,e}, plus the rewriting of
// their conjugates by every transversal element against the conjugation
// action's prediction.
VerificationReport verify_schreier_golden(int n);

// The conjugation action against literal conjugation: for every submonoid
// generator g and every transversal element lambda,
// expand(conjugate(g, lambda)) vs lambda^{-1} expand(g) lambda under all
// image homs and invariants.
VerificationReport verify_lemma_action(int n);

// Seeded random kernel words: rewrite, expand back, and require equal
// invariant vectors and equal symbolic algebra images.
VerificationReport fuzz_roundtrip(int n, std::size_t samples, std::size_t max_length,
                                  std::uint64_t seed, Hom h);

// Injected mutations (corrupted relation, corrupted representation, a
// sigma/tau swap) must each be caught by at least one model.
VerificationReport verify_negative_controls();

}  // namespace stvb

#endif  // STVB_VERIFY_HPP_
