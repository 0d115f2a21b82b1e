#include "doctest.h"

#include <stdexcept>

#include <random>

#include "stvb/invariants.hpp"
#include "stvb/search.hpp"

using namespace stvb;

TEST_CASE("invariant vectors") {
  InvariantVector e = invariant_vector(Word(Alphabet::braid, 3));
  CHECK(e.img1.is_identity());
  CHECK(e.sigma_exp == 0);
  CHECK(e.tau_count == 0);
  CHECK(e.rho_parity == 0);
  CHECK(e.gamma_parity == 0);

  // the two sides of the sigma twist relation agree componentwise
  CHECK(invariant_vector(parse_word("r1 s1 r1", Alphabet::braid, 2))
        == invariant_vector(parse_word("g2 g1 s1 g1 g2", Alphabet::braid, 2)));

  CHECK(invariant_vector(parse_word("t1 t2", Alphabet::braid, 3)).tau_count == 2);
  CHECK(invariant_vector(parse_word("T1 t1", Alphabet::braid_group, 3)).tau_count == 0);
  CHECK(invariant_vector(parse_word("S1", Alphabet::braid, 3)).sigma_exp == -1);
  CHECK_THROWS_AS(invariant_vector(Word(Alphabet::sub_p, 3)), std::invalid_argument);
}

TEST_CASE("every braid-side family preserves every invariant component") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(check_relation_invariance(build_presentation(Family::stvb_full, n)).ok);
    CHECK(check_relation_invariance(build_presentation(Family::tvb, n)).ok);
    CHECK(check_relation_invariance(build_presentation(Family::stvg, n)).ok);
  }
  CHECK(check_relation_invariance(build_presentation(Family::stvb_reduced, 5)).ok);

  // a corrupted relation is caught and names the component
  Presentation p = build_presentation(Family::stvb_full, 3);
  p.relations.push_back(Relation{"mutant",
                                 {},
                                 Word(Alphabet::braid, 3, {sigma(1)}),
                                 Word(Alphabet::braid, 3, {tau(1)})});
  InvarianceReport report = check_relation_invariance(p);
  CHECK_FALSE(report.ok);
  CHECK(report.items.back().component == "phi3-image");
}

TEST_CASE("one-step equalities are found immediately") {
  Presentation p = build_presentation(Family::stvb_full, 2);
  EqualResult res = bfs_equal(p, parse_word("r1 r1", Alphabet::braid, 2),
                              Word(Alphabet::braid, 2), 1000);
  REQUIRE(res.status == EqualStatus::equivalent);
  CHECK(res.derivation.steps.size() == 1);
  CHECK(replay(p, parse_word("r1 r1", Alphabet::braid, 2), res.derivation)
        == Word(Alphabet::braid, 2));
}

TEST_CASE("gamma_2 equals rho_1 gamma_1 rho_1 within budget") {
  Presentation p = build_presentation(Family::stvb_full, 3);
  Word u = parse_word("g2", Alphabet::braid, 3);
  Word v = parse_word("r1 g1 r1", Alphabet::braid, 3);
  EqualResult res = bfs_equal(p, u, v, 10000);
  REQUIRE(res.status == EqualStatus::equivalent);
  CHECK(replay(p, u, res.derivation) == v);

  nlohmann::json j = derivation_to_json(p, u, res.derivation);
  CHECK(j["words"].front() == "g2");
  CHECK(j["words"].back() == "r1 g1 r1");
  CHECK(j["steps"].size() == res.derivation.steps.size());
}

TEST_CASE("invariant refutation is definitive and cheap") {
  Presentation p = build_presentation(Family::stvb_full, 3);
  EqualResult res = bfs_equal(p, Word(Alphabet::braid, 3, {sigma(1)}),
                              Word(Alphabet::braid, 3, {tau(1)}), 10);
  CHECK(res.status == EqualStatus::refuted);
  CHECK(res.refuted_component == "phi3-image");
  CHECK(res.states == 0);
}

TEST_CASE("budget exhaustion reports unknown") {
  Presentation p = build_presentation(Family::stvb_full, 3);
  Word u = parse_word("g2", Alphabet::braid, 3);
  Word v = parse_word("r1 g1 r1", Alphabet::braid, 3);
  EqualResult res = bfs_equal(p, u, v, 3);
  CHECK(res.status == EqualStatus::unknown);
}

TEST_CASE("identical words need no derivation") {
  Presentation p = build_presentation(Family::stvb_full, 3);
  Word u = parse_word("s1 t2", Alphabet::braid, 3);
  EqualResult res = bfs_equal(p, u, u, 10);
  CHECK(res.status == EqualStatus::equivalent);
  CHECK(res.derivation.steps.empty());
}

TEST_CASE("alphabet mismatch is rejected") {
  Presentation p = build_presentation(Family::stvb_full, 3);
  CHECK_THROWS_AS(
      bfs_equal(p, Word(Alphabet::sub_p, 3), Word(Alphabet::sub_p, 3), 10),
      std::invalid_argument);
  CHECK_THROWS_AS(
      bfs_equal(p, Word(Alphabet::braid, 2), Word(Alphabet::braid, 2), 10),
      std::invalid_argument);
}

TEST_CASE("completeness at depth one") {
  Presentation p = build_presentation(Family::stvb_full, 3);
  std::mt19937_64 rng(31);
  int found = 0;
  for (int rep = 0; rep < 100; ++rep) {
    Word w = random_word(3, 4 + rng() % 5, Alphabet::braid, rng());
    // apply the first matching rewrite found at a random scan offset
    bool applied = false;
    for (std::size_t scan = 0; scan < p.relations.size() && !applied; ++scan) {
      std::size_t ri = (scan + rng()) % p.relations.size();
      for (int rev = 0; rev < 2 && !applied; ++rev) {
        for (std::size_t pos = 0; pos <= w.size() && !applied; ++pos) {
          DerivationStep step{pos, ri, rev != 0};
          try {
            Word v = apply_step(p, w, step);
            EqualResult res = bfs_equal(p, w, v, 200000);
            REQUIRE(res.status == EqualStatus::equivalent);
            CHECK(replay(p, w, res.derivation) == v);
            applied = true;
            ++found;
          } catch (const std::invalid_argument&) {
          }
        }
      }
    }
  }
  CHECK(found == 100);  // insertions always apply, so every trial rewrites
}

TEST_CASE("reduction formulas at i=2, n=4") {
  Presentation p = build_presentation(Family::stvb_full, 4);
  auto confirm = [&](const char* u_text, const char* v_text) {
    Word u = parse_word(u_text, Alphabet::braid, 4);
    Word v = parse_word(v_text, Alphabet::braid, 4);
    EqualResult res = bfs_equal(p, u, v, 1000000);
    REQUIRE(res.status == EqualStatus::equivalent);
    CHECK(replay(p, u, res.derivation) == v);
  };
  confirm("s2", "r1 r2 s1 r2 r1");
  confirm("t2", "r1 r2 t1 r2 r1");
  confirm("g2", "r1 g1 r1");
}

TEST_CASE("random words are deterministic and kernel sampling lands in kernels") {
  CHECK(random_word(3, 9, Alphabet::braid, 42) == random_word(3, 9, Alphabet::braid, 42));
  CHECK(random_word(3, 0, Alphabet::braid, 7).empty());

  Transversal t(3);
  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 1000; ++rep) {
    Word w = random_kernel_word(3, rng() % 20, Hom::phi1, rng(), t);
    CHECK(is_in_kernel(w, Hom::phi1));
  }
  for (Hom h : {Hom::phi2, Hom::phi3}) {
    for (int rep = 0; rep < 200; ++rep) {
      CHECK(is_in_kernel(random_kernel_word(3, rng() % 20, h, rng(), t), h));
    }
  }
}
