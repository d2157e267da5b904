#pragma once
// One-call construction of certified generating pairs, routing each degree
// to the cheapest strategy that is known to succeed there:
//
//   n = 3, 4           exhaustive search over conjugacy classes
//   7 <= n <= 40       shape-first search with exact GF(2) sign completion
//   n >= 41            structured piece assembly, seven-condition checklist,
//                      Jordan witness, and the canonical lift
//
// Degrees 5, 6, 8 have no (2,4,6) pair at all; construct_minimal_pair
// handles them with their true minimal signatures (2,4,10), (2,6,6) and
// (2,4,8). Every returned certificate was verified before being returned:
// chain-certified always for n <= 60, and for larger n unless the caller
// turns the (redundant, witness-backed) chain off.

#include <cstdint>
#include <stdexcept>

#include "octagen/certificate.hpp"

namespace octagen {

// A search ran out of its attempt budget before certifying a pair. This is
// a failure to answer, never a wrong answer; retry with a different seed or
// a bigger budget.
struct BudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConstructOptions {
  // Chain-certify even when n > 60 (below that the chain always runs).
  bool chain_verify_large = true;
  // Skeleton draws for the sign-completion band 7 <= n <= 40. The worst
  // degrees observed (38, 39) need ~6e7 draws on unlucky seeds.
  std::uint64_t sign_search_budget = 400000000;
  // Attempts for the randomized (2,4,8) search at n = 8.
  std::uint64_t randomized_budget = 200000000;
};

// A certified (2,4,6) generating pair of B_n. pre: n >= 3 and n not in
// {5, 6, 8} (those degrees have none; std::invalid_argument). Deterministic
// for a fixed seed. Throws BudgetExhausted when a bounded search gives up.
PairCertificate construct_246_pair(int n, std::uint64_t seed = 0,
                                   const ConstructOptions& opts = {});

// A certified pair realizing the minimal signature of B_n: (2,4,10) at
// n = 5, (2,6,6) at n = 6, (2,4,8) at n = 8, and (2,4,6) everywhere else.
// Its genus field is the strong symmetric genus of B_n.
PairCertificate construct_minimal_pair(int n, std::uint64_t seed = 0,
                                       const ConstructOptions& opts = {});

}  // namespace octagen
