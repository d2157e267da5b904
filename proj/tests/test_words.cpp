#include "octagen/words.hpp"

#include <stdexcept>

#include "doctest.h"
#include "octagen/rng.hpp"
#include "reference_pair.hpp"

using namespace octagen;

namespace {

GroupWord random_word(Rng& rng) {
  GroupWord w;
  int len = 1 + static_cast<int>(rand_below(rng, 8));
  for (int k = 0; k < len; ++k) {
    w.letters.push_back(Syllable{rand_below(rng, 2) == 0 ? 's' : 't',
                                 1 + static_cast<int>(rand_below(rng, 4))});
  }
  return w;
}

}  // namespace

TEST_CASE("parse_word: accepted forms") {
  GroupWord w = parse_word("s t s t s");
  REQUIRE(w.letters.size() == 5);
  CHECK(w.letters[0] == Syllable{'s', 1});
  CHECK(w.letters[1] == Syllable{'t', 1});
  CHECK(format_word(w) == "s t s t s");

  GroupWord longer = parse_word("s^3 t s t s t s^2 t");
  REQUIRE(longer.letters.size() == 8);
  CHECK(longer.letters[0] == Syllable{'s', 3});
  CHECK(longer.letters[6] == Syllable{'s', 2});
  CHECK(format_word(longer) == "s^3 t s t s t s^2 t");

  CHECK(parse_word("sts") == parse_word("s t s"));
  CHECK(parse_word("s^12t") == GroupWord{{Syllable{'s', 12}, Syllable{'t', 1}}});
}

TEST_CASE("parse_word: rejected forms") {
  CHECK_THROWS_AS(parse_word("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("s^0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("s^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("s^-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("  "), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("s T"), std::invalid_argument);
}

TEST_CASE("format/parse round trip on random words") {
  Rng rng(301);
  for (int t = 0; t < 200; ++t) {
    GroupWord w = random_word(rng);
    CHECK(parse_word(format_word(w)) == w);
  }
}

TEST_CASE("evaluate_word: reference-pair examples") {
  Permutation sigma = parse_cycles(refpair::kSigmaText, refpair::kN);
  Permutation tau = parse_cycles(refpair::kTauText, refpair::kN);

  CHECK(evaluate_word(parse_word("s"), sigma, tau) == sigma);
  CHECK(evaluate_word(parse_word("t"), sigma, tau) == tau);
  CHECK(evaluate_word(parse_word("s^2 t"), sigma, tau) ==
        parse_cycles(refpair::kSigma2TauText, refpair::kN));
  CHECK(evaluate_word(parse_word("s t"), sigma, tau) ==
        parse_cycles(refpair::kSigmaTauText, refpair::kN));

  Permutation id = Permutation::identity(6);
  CHECK(evaluate_word(parse_word("s t s^3 t"), id, id).is_identity());
}

TEST_CASE("evaluate_word respects concatenation") {
  Rng rng(307);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + static_cast<int>(rand_below(rng, 9));
    Permutation sigma = random_permutation(n, rng);
    Permutation tau = random_permutation(n, rng);
    GroupWord a = random_word(rng);
    GroupWord b = random_word(rng);
    CHECK(evaluate_word(concat(a, b), sigma, tau) ==
          compose(evaluate_word(a, sigma, tau), evaluate_word(b, sigma, tau)));
  }
}

TEST_CASE("evaluate_word: rejected inputs") {
  Permutation p5 = Permutation::identity(5);
  Permutation p6 = Permutation::identity(6);
  CHECK_THROWS_AS(evaluate_word(parse_word("s"), p5, p6), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_word(GroupWord{}, p5, p5), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_word(GroupWord{{Syllable{'s', 0}}}, p5, p5),
                  std::invalid_argument);
  CHECK_THROWS_AS(evaluate_word(GroupWord{{Syllable{'u', 1}}}, p5, p5),
                  std::invalid_argument);
}
