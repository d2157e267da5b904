#include "octagen/search.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "octagen/rng.hpp"
#include "octagen/signed_perm.hpp"
#include "octagen/stabchain.hpp"

using namespace octagen;

namespace {

// Partition counts p(0)..p(8).
constexpr int kPartitions[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};

int signed_class_count(int n) {
  int total = 0;
  for (int k = 0; k <= n; ++k) total += kPartitions[k] * kPartitions[n - k];
  return total;
}

std::string type_key(const SignedCycleType& t) {
  std::string key;
  for (const auto& part : t) {
    key += std::to_string(part.length);
    key += part.negative ? '-' : '+';
  }
  return key;
}

std::vector<SearchStatus> statuses(int n, const ExhaustiveOptions& opts) {
  std::vector<SearchStatus> out;
  for (const PairSignature& sig : candidate_signatures(n))
    out.push_back(exhaustive_signature_search(n, sig, opts).status);
  return out;
}

}  // namespace

TEST_CASE("signed_cycle_types enumerates one representative per class") {
  for (int n : {1, 2, 3, 5, 8}) {
    const auto types = signed_cycle_types(n);
    CHECK(static_cast<int>(types.size()) == signed_class_count(n));

    std::set<std::string> keys;
    for (const auto& t : types) {
      keys.insert(type_key(t));
      int total = 0;
      for (const auto& part : t) total += part.length;
      CHECK(total == n);
      // The representative element realizes the type's order exactly.
      CHECK(element_order(class_representative(t, n)) == order_of_type(t));
    }
    CHECK(keys.size() == types.size());
  }
}

TEST_CASE("random_element_of_order hits the requested order") {
  Rng rng(11);
  for (int n : {3, 5, 9})
    for (std::uint64_t target : {2ull, 4ull, 6ull}) {
      const SignedElement g = random_element_of_order(n, target, rng);
      CHECK(element_order(g) == target);
      CHECK(g.perm.degree() == n);
    }
  // B_3 has elements of orders {1, 2, 3, 4, 6} only.
  CHECK_THROWS_AS(random_element_of_order(3, 5, rng), std::invalid_argument);
  CHECK_THROWS_AS(random_element_of_order(3, 10, rng), std::invalid_argument);
}

TEST_CASE("exhaustive search: small degrees with (2,4,6) pairs") {
  for (int n : {3, 4}) {
    const SearchOutcome outcome = exhaustive_signature_search(n, {2, 4, 6});
    REQUIRE(outcome.status == SearchStatus::found);
    REQUIRE(outcome.pair.has_value());
    const auto& [x, y] = *outcome.pair;
    CHECK(element_order(x) == 2);
    CHECK(element_order(y) == 4);
    CHECK(element_order(multiply(x, y)) == 6);
    CHECK(is_full_hyperoctahedral({x, y}, n));
    CHECK(*outcome.signature == PairSignature{2, 4, 6});
  }
}

TEST_CASE("exhaustive trail: B_5 bottoms out at (2,4,10)") {
  const MinimalSearchReport report = exhaustive_minimal_pair(5);
  REQUIRE(report.trail.size() == 3);
  CHECK(report.trail[0].signature == PairSignature{2, 4, 6});
  CHECK(report.trail[0].status == SearchStatus::exhausted_none);
  CHECK(report.trail[1].signature == PairSignature{2, 4, 8});
  CHECK(report.trail[1].status == SearchStatus::exhausted_none);
  CHECK(report.trail[2].signature == PairSignature{2, 4, 10});
  CHECK(report.trail[2].status == SearchStatus::found);
  REQUIRE(report.outcome.status == SearchStatus::found);
  CHECK(is_full_hyperoctahedral(
      {report.outcome.pair->first, report.outcome.pair->second}, 5));
}

TEST_CASE("exhaustive trail: B_6 bottoms out at (2,6,6)") {
  const MinimalSearchReport report = exhaustive_minimal_pair(6);
  REQUIRE(report.trail.size() == 4);
  CHECK(report.trail[0].signature == PairSignature{2, 4, 6});
  CHECK(report.trail[0].status == SearchStatus::exhausted_none);
  CHECK(report.trail[1].signature == PairSignature{2, 4, 8});
  CHECK(report.trail[1].status == SearchStatus::exhausted_none);
  CHECK(report.trail[2].signature == PairSignature{2, 4, 10});
  CHECK(report.trail[2].status == SearchStatus::exhausted_none);
  CHECK(report.trail[3].signature == PairSignature{2, 6, 6});
  CHECK(report.trail[3].status == SearchStatus::found);
  const auto& [x, y] = *report.outcome.pair;
  CHECK(element_order(x) == 2);
  CHECK(element_order(y) == 6);
  CHECK(element_order(multiply(x, y)) == 6);
}

TEST_CASE("exhaustive trail honors a signature filter") {
  // B_5 has no (2,6,6) pair even though that signature is never reached on
  // the default walk (it sits after the (2,4,10) hit).
  const MinimalSearchReport report =
      exhaustive_minimal_pair(5, PairSignature{2, 6, 6});
  REQUIRE(report.trail.size() == 1);
  CHECK(report.trail[0].signature == PairSignature{2, 6, 6});
  CHECK(report.trail[0].status == SearchStatus::exhausted_none);
  CHECK(report.outcome.status == SearchStatus::exhausted_none);
}

TEST_CASE("exhaustive search is set-deterministic under enumeration order") {
  ExhaustiveOptions forward, backward;
  backward.reverse_enumeration = true;
  CHECK(exhaustive_signature_search(5, {2, 4, 6}, forward).status ==
        exhaustive_signature_search(5, {2, 4, 6}, backward).status);
  CHECK(exhaustive_signature_search(5, {2, 4, 10}, forward).status ==
        exhaustive_signature_search(5, {2, 4, 10}, backward).status);
}

TEST_CASE("class reduction does not change any verdict (n <= 4)") {
  ExhaustiveOptions reduced, full;
  full.class_reduction = false;
  for (int n : {3, 4}) CHECK(statuses(n, reduced) == statuses(n, full));
}

TEST_CASE("exhaustive search rejects degrees beyond its bounds") {
  CHECK_THROWS_AS(exhaustive_signature_search(7, {2, 4, 6}),
                  std::invalid_argument);
  CHECK_THROWS_AS(exhaustive_minimal_pair(9), std::invalid_argument);
}

TEST_CASE("randomized search finds and certifies mid-degree pairs") {
  const SearchOutcome outcome =
      randomized_pair_search(19, {2, 4, 6}, 50000000, 1);
  REQUIRE(outcome.status == SearchStatus::found);
  const auto& [x, y] = *outcome.pair;
  CHECK(element_order(x) == 2);
  CHECK(element_order(y) == 4);
  CHECK(element_order(multiply(x, y)) == 6);
  CHECK(is_full_hyperoctahedral({x, y}, 19));

  const SearchOutcome o8 = randomized_pair_search(8, {2, 4, 8}, 50000000, 1);
  REQUIRE(o8.status == SearchStatus::found);
  CHECK(*o8.signature == PairSignature{2, 4, 8});
}

TEST_CASE("randomized search is reproducible for a fixed seed") {
  const SearchOutcome a = randomized_pair_search(12, {2, 4, 6}, 10000000, 42);
  const SearchOutcome b = randomized_pair_search(12, {2, 4, 6}, 10000000, 42);
  REQUIRE(a.status == SearchStatus::found);
  REQUIRE(b.status == SearchStatus::found);
  CHECK(a.pair->first == b.pair->first);
  CHECK(a.pair->second == b.pair->second);
  CHECK(a.stats.candidates_tested == b.stats.candidates_tested);
}

TEST_CASE("randomized search reports exhaustion, not an error") {
  // B_5 has no (2,4,6) pair; a bounded run must come back empty-handed.
  const SearchOutcome outcome = randomized_pair_search(5, {2, 4, 6}, 20000, 3);
  CHECK(outcome.status == SearchStatus::budget_exhausted);
  CHECK_FALSE(outcome.pair.has_value());
  CHECK(outcome.stats.candidates_tested <= 20000);

  // No element of order 10 exists in B_3: sampling y is impossible and the
  // search stops before its first full attempt.
  const SearchOutcome impossible =
      randomized_pair_search(3, {2, 10, 10}, 1000000, 1);
  CHECK(impossible.status == SearchStatus::budget_exhausted);
  CHECK(impossible.stats.candidates_tested == 0);
}

TEST_CASE("sign-completion search covers the mid band") {
  for (int n : {7, 9, 13, 22}) {
    const SearchOutcome outcome = sign_solved_246_search(n, 5000000, 1);
    REQUIRE(outcome.status == SearchStatus::found);
    const auto& [x, y] = *outcome.pair;
    CHECK(element_order(x) == 2);
    CHECK(element_order(y) == 4);
    CHECK(element_order(multiply(x, y)) == 6);
    CHECK(is_full_hyperoctahedral({x, y}, n));
    CHECK(*outcome.signature == PairSignature{2, 4, 6});
  }
}

TEST_CASE("sign-completion search succeeds where no lifting diagram exists") {
  // Degree 28 admits no seven-condition diagram, so pairs here cannot come
  // from the structured route; the sign completion finds one directly.
  const SearchOutcome outcome = sign_solved_246_search(28, 5000000, 1);
  REQUIRE(outcome.status == SearchStatus::found);
  CHECK(is_full_hyperoctahedral(
      {outcome.pair->first, outcome.pair->second}, 28));
}

TEST_CASE("sign-completion search is reproducible for a fixed seed") {
  const SearchOutcome a = sign_solved_246_search(11, 5000000, 9);
  const SearchOutcome b = sign_solved_246_search(11, 5000000, 9);
  REQUIRE(a.status == SearchStatus::found);
  CHECK(a.pair->first == b.pair->first);
  CHECK(a.pair->second == b.pair->second);
  CHECK(a.stats.candidates_tested == b.stats.candidates_tested);
  CHECK(a.stats.chains_built == b.stats.chains_built);
}

TEST_CASE("sign-completion search edge cases") {
  CHECK_THROWS_AS(sign_solved_246_search(6, 1000, 1), std::invalid_argument);
  // B_8 has no (2,4,6) pair at all; bounded exhaustion is a status.
  const SearchOutcome o8 = sign_solved_246_search(8, 100000, 1);
  CHECK(o8.status == SearchStatus::budget_exhausted);
  CHECK_FALSE(o8.pair.has_value());
  CHECK(o8.stats.candidates_tested == 100000);
}
