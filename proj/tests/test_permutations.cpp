#include "doctest.h"

#include <stdexcept>

#include <random>

#include "stvb/permutation.hpp"
#include "stvb/word.hpp"

using namespace stvb;

TEST_CASE("S_n arithmetic") {
  Permutation t1 = Permutation::transposition(3, 1);
  Permutation t2 = Permutation::transposition(3, 2);
  CHECK(compose(t1, t1) == Permutation(3));
  CHECK(compose(t1, t2) != compose(t2, t1));  // 3-cycles of opposite orientation
  CHECK(compose(compose(t1, t2), t1) == compose(compose(t2, t1), t2));  // braid relation

  CHECK(t1.one_line() == "[2 1 3]");
  CHECK(t1.cycles() == "(1 2)");
  CHECK(Permutation(3).cycles() == "e");
  CHECK(compose(t1, t2).cycles() == "(1 3 2)");

  Permutation c = compose(t1, t2);
  CHECK(compose(c, c.inverse()) == Permutation(3));
  CHECK(Permutation::from_one_line({2, 3, 1}).apply(1) == 2);
  CHECK_THROWS_AS(Permutation::from_one_line({1, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(compose(Permutation(2), Permutation(3)), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::transposition(3, 3), std::invalid_argument);
}

TEST_CASE("word reading is left to right") {
  // rho_1 rho_2 sends 1 -> 3: apply (1 2) first, then (2 3)
  Word w(Alphabet::braid, 3, {rho(1), rho(2)});
  CHECK(eval_hom(w, Hom::phi1).apply(1) == 3);
}

TEST_CASE("epimorphism letter assignments") {
  CHECK(eval_hom(Word(Alphabet::braid, 3, {sigma(1)}), Hom::phi1).cycles() == "(1 2)");
  CHECK(eval_hom(Word(Alphabet::braid, 3, {gamma(2), tau(1), sigma(2)}), Hom::phi2)
            .is_identity());
  CHECK(eval_hom(Word(Alphabet::braid, 3, {tau(2)}), Hom::phi3).is_identity());
  CHECK(eval_hom(Word(Alphabet::braid, 3, {tau(2)}), Hom::phi1).cycles() == "(2 3)");
  CHECK(eval_hom(Word(Alphabet::braid_group, 3, {tau_bar(1), tau(1)}), Hom::pi).is_identity());
  CHECK(eval_hom(Word(Alphabet::braid, 3), Hom::phi1).is_identity());

  CHECK_THROWS_AS(eval_hom(Word(Alphabet::braid_group, 3, {tau_bar(1)}), Hom::phi1),
                  std::domain_error);
  CHECK_THROWS_AS(eval_hom(Word(Alphabet::braid, 3, {sigma(1)}), Hom::bar), std::domain_error);
}

TEST_CASE("bar agrees with phi1 on rho-only words") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 2 + static_cast<int>(rng() % 4);
    std::vector<Letter> letters;
    for (std::size_t k = 0, len = rng() % 9; k < len; ++k) {
      letters.push_back(rho(1 + static_cast<int>(rng() % (n - 1))));
    }
    Word w(Alphabet::braid, n, letters);
    CHECK(eval_hom(w, Hom::bar) == eval_hom(w, Hom::phi1));
  }
}

TEST_CASE("eval_hom is a homomorphism") {
  std::mt19937_64 rng(5);
  auto rand_word = [&](int n, std::size_t len) {
    std::vector<Letter> pool;
    for (int i = 1; i < n; ++i) {
      pool.push_back(sigma(i));
      pool.push_back(sigma_inv(i));
      pool.push_back(rho(i));
      pool.push_back(tau(i));
    }
    for (int i = 1; i <= n; ++i) pool.push_back(gamma(i));
    std::vector<Letter> letters;
    for (std::size_t k = 0; k < len; ++k) letters.push_back(pool[rng() % pool.size()]);
    return Word(Alphabet::braid, n, letters);
  };
  for (int rep = 0; rep < 60; ++rep) {
    int n = 2 + static_cast<int>(rng() % 4);
    Word u = rand_word(n, rng() % 10);
    Word v = rand_word(n, rng() % 10);
    for (Hom h : {Hom::phi1, Hom::phi2, Hom::phi3}) {
      CHECK(eval_hom(concat(u, v), h) == compose(eval_hom(u, h), eval_hom(v, h)));
    }
  }
}

TEST_CASE("submonoid generator expansions land in the matching kernel") {
  // brute force over every submonoid generator for n <= 5
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i <= n; ++i) {
      CHECK(is_in_kernel(expand_subgenerator(gamma(i), n), Hom::phi1));
      CHECK(is_in_kernel(expand_subgenerator(gamma(i), n), Hom::phi2));
      CHECK(is_in_kernel(expand_subgenerator(gamma(i), n), Hom::phi3));
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        CHECK(is_in_kernel(expand_subgenerator(lam(i, j), n), Hom::phi1));
        CHECK(is_in_kernel(expand_subgenerator(lam_inv(i, j), n), Hom::phi1));
        CHECK(is_in_kernel(expand_subgenerator(y(i, j), n), Hom::phi1));
        CHECK(is_in_kernel(expand_subgenerator(x(i, j), n), Hom::phi2));
        CHECK(is_in_kernel(expand_subgenerator(x_inv(i, j), n), Hom::phi2));
        CHECK(is_in_kernel(expand_subgenerator(z(i, j), n), Hom::phi2));
        CHECK(is_in_kernel(expand_subgenerator(lam(i, j), n), Hom::phi3));
        CHECK(is_in_kernel(expand_subgenerator(lam_inv(i, j), n), Hom::phi3));
        CHECK(is_in_kernel(expand_subgenerator(z(i, j), n), Hom::phi3));
      }
    }
  }
  CHECK(is_in_kernel(Word(Alphabet::braid, 3), Hom::phi1));
  CHECK_FALSE(is_in_kernel(Word(Alphabet::braid, 3, {rho(1)}), Hom::phi1));
}
