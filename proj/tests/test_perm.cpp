#include "octagen/perm.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "reference_pair.hpp"

using namespace octagen;

namespace {

Permutation ref_sigma() { return parse_cycles(refpair::kSigmaText, refpair::kN); }
Permutation ref_tau() { return parse_cycles(refpair::kTauText, refpair::kN); }

}  // namespace

TEST_CASE("identity basics") {
  Permutation id = Permutation::identity(5);
  CHECK(id.degree() == 5);
  CHECK(id.is_identity());
  CHECK(order(id) == 1);
  CHECK(parity(id) == Parity::even);
  CHECK(cycle_decomposition(id).empty());
  CHECK(fixed_points(id) == std::vector<int>{1, 2, 3, 4, 5});
  for (int i = 1; i <= 5; ++i) CHECK(id(i) == i);
}

TEST_CASE("compose applies left argument first") {
  Permutation a = parse_cycles("(1 2)", 3);
  Permutation b = parse_cycles("(2 3)", 3);
  CHECK(compose(a, b) == parse_cycles("(1 3 2)", 3));
  // 1 -> a -> 2 -> b -> 3
  CHECK(compose(a, b)(1) == 3);

  Permutation p = parse_cycles("(1 4 2)(3 5)", 5);
  CHECK(compose(p, inverse(p)).is_identity());
  CHECK(compose(inverse(p), p).is_identity());
  CHECK(compose(p, Permutation::identity(5)) == p);
  CHECK(compose(Permutation::identity(5), p) == p);
}

TEST_CASE("compose rejects degree mismatch") {
  CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)),
                  std::invalid_argument);
}

TEST_CASE("inverse") {
  CHECK(inverse(parse_cycles("(1 2 3)", 3)) == parse_cycles("(1 3 2)", 3));
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    Permutation p = random_permutation(1 + static_cast<int>(rand_below(rng, 20)), rng);
    CHECK(inverse(inverse(p)) == p);
    CHECK(compose(p, inverse(p)).is_identity());
  }
}

TEST_CASE("order matches iterated-multiplication oracle") {
  CHECK(order(parse_cycles("(1 2 3)(4 5)", 5)) == 6);
  CHECK(order(parse_cycles("(1 2 3 4)", 4)) == 4);
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    Permutation p = random_permutation(1 + static_cast<int>(rand_below(rng, 10)), rng);
    CHECK(order(p) == oracles::perm_order_by_iteration(p));
  }
}

TEST_CASE("order divides the full symmetric group order") {
  Rng rng(13);
  for (int t = 0; t < 50; ++t) {
    int n = 1 + static_cast<int>(rand_below(rng, 12));
    Permutation p = random_permutation(n, rng);
    std::uint64_t fact = 1;
    for (int v = 2; v <= n; ++v) fact *= static_cast<std::uint64_t>(v);
    CHECK(fact % order(p) == 0);
  }
}

TEST_CASE("power") {
  Permutation p = parse_cycles("(1 2 3 4)", 4);
  CHECK(power(p, 0).is_identity());
  CHECK(power(p, 1) == p);
  CHECK(power(p, 2) == parse_cycles("(1 3)(2 4)", 4));
  CHECK(power(p, 4).is_identity());
  CHECK(power(p, 103) == power(p, 103 % 4));
}

TEST_CASE("parity") {
  CHECK(parity(parse_cycles("(1 2)", 2)) == Parity::odd);
  CHECK(parity(parse_cycles("(1 2 3)", 3)) == Parity::even);
  // Parity is a homomorphism.
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + static_cast<int>(rand_below(rng, 10));
    Permutation p = random_permutation(n, rng);
    Permutation q = random_permutation(n, rng);
    bool lhs = parity(compose(p, q)) == Parity::odd;
    bool rhs = (parity(p) == Parity::odd) != (parity(q) == Parity::odd);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("associativity, 1000 random triples") {
  Rng rng(19);
  for (int t = 0; t < 1000; ++t) {
    int n = 1 + static_cast<int>(rand_below(rng, 40));
    Permutation a = random_permutation(n, rng);
    Permutation b = random_permutation(n, rng);
    Permutation c = random_permutation(n, rng);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("cycle decomposition is canonical") {
  Permutation p = parse_cycles("(4 7)(1 3 2)", 8);
  std::vector<std::vector<int>> want{{1, 3, 2}, {4, 7}};
  CHECK(cycle_decomposition(p) == want);
  CHECK(cycle_type(p).lengths == std::vector<int>{3, 2});
  CHECK(cycle_type(p).fixed_count == 3);
}

TEST_CASE("fixed points") {
  CHECK(fixed_points(ref_sigma()) == std::vector<int>{19});
  CHECK(fixed_points(ref_tau()) == std::vector<int>{6, 10, 11});
}

TEST_CASE("reference pair: frozen cycle structure facts") {
  Permutation sigma = ref_sigma();
  Permutation tau = ref_tau();
  CHECK(order(sigma) == 4);
  CHECK(order(tau) == 2);
  CHECK(parity(sigma) == Parity::odd);
  CHECK(parity(tau) == Parity::even);

  Permutation st = compose(sigma, tau);
  CHECK(st == parse_cycles(refpair::kSigmaTauText, refpair::kN));
  CHECK(order(st) == 6);
  CHECK(parity(st) == Parity::odd);
  CHECK(fixed_points(st) == std::vector<int>{3});

  // The cycle of sigma*tau through 19 picks up the tau-fixed point 6.
  auto cycles = cycle_decomposition(st);
  for (const auto& cyc : cycles) {
    bool has19 = std::find(cyc.begin(), cyc.end(), 19) != cyc.end();
    if (has19) {
      CHECK(std::find(cyc.begin(), cyc.end(), 6) != cyc.end());
    }
  }

  Permutation s2t = compose(power(sigma, 2), tau);
  CHECK(s2t == parse_cycles(refpair::kSigma2TauText, refpair::kN));
  CHECK(cycle_type(s2t).lengths == std::vector<int>{4, 4, 4, 4, 3});
  std::vector<int> three_cycle{10, 13, 12};
  bool found = false;
  for (const auto& cyc : cycle_decomposition(s2t)) {
    if (cyc == three_cycle) found = true;
  }
  CHECK(found);
}

TEST_CASE("is_transitive") {
  std::vector<Permutation> gens{parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)};
  CHECK(is_transitive(gens, 3));
  CHECK_FALSE(is_transitive({parse_cycles("(1 2)", 3)}, 3));
  CHECK(is_transitive({ref_sigma(), ref_tau()}, refpair::kN));
  CHECK(is_transitive({}, 1));
  CHECK_FALSE(is_transitive({}, 2));
}

TEST_CASE("find_block_system on a 4-cycle") {
  std::vector<Permutation> gens{parse_cycles("(1 2 3 4)", 4)};
  auto sys = find_block_system(gens, 4);
  REQUIRE(sys.has_value());
  std::vector<std::vector<int>> want{{1, 3}, {2, 4}};
  CHECK(*sys == want);
}

TEST_CASE("find_block_system: primitive cases give none") {
  std::vector<Permutation> s3{parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)};
  CHECK_FALSE(find_block_system(s3, 3).has_value());
  CHECK_FALSE(find_block_system({ref_sigma(), ref_tau()}, refpair::kN).has_value());
}

TEST_CASE("find_block_system rejects intransitive input") {
  CHECK_THROWS_AS(find_block_system({parse_cycles("(1 2)", 4)}, 4),
                  std::invalid_argument);
}

TEST_CASE("find_block_system agrees with exhaustive partition search") {
  Rng rng(23);
  int checked = 0;
  while (checked < 120) {
    int n = 4 + static_cast<int>(rand_below(rng, 5));  // degree 4..8
    std::vector<Permutation> gens{random_permutation(n, rng),
                                  random_permutation(n, rng)};
    if (!is_transitive(gens, n)) continue;
    ++checked;
    auto sys = find_block_system(gens, n);
    auto all = oracles::all_block_systems(gens, n);
    CHECK(sys.has_value() == !all.empty());
    if (sys.has_value()) {
      CHECK(std::find(all.begin(), all.end(), *sys) != all.end());
    }
  }
}

TEST_CASE("parse/format round trips") {
  CHECK(format_cycles(Permutation::identity(6)) == "()");
  CHECK(parse_cycles("", 4).is_identity());
  CHECK(parse_cycles("()", 4).is_identity());
  CHECK(format_cycles(parse_cycles("(3 1 2)(6 5)", 7)) == "(1 2 3)(5 6)");
  CHECK(format_cycles(ref_sigma()) == refpair::kSigmaText);
  CHECK(format_cycles(ref_tau()) == refpair::kTauText);

  Rng rng(29);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + static_cast<int>(rand_below(rng, 30));
    Permutation p = random_permutation(n, rng);
    CHECK(parse_cycles(format_cycles(p), n) == p);
  }
}

TEST_CASE("parse_cycles rejects malformed input") {
  CHECK_THROWS_AS(parse_cycles("(1 1)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(0 2)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(1 6)", 5), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(1 2", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("1 2)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("abc", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(1 x)", 3), std::invalid_argument);
}
