#pragma once
// Generating-pair searches: exhaustive minimal-pair search over conjugacy
// class representatives for small n, and seeded randomized search by signed
// cycle-type sampling for mid-range n. Every reported pair is certified by
// a stabilizer chain before it is returned.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "octagen/rng.hpp"
#include "octagen/signatures.hpp"
#include "octagen/signed_perm.hpp"

namespace octagen {

enum class SearchStatus { found, exhausted_none, budget_exhausted };

struct SearchStats {
  std::uint64_t candidates_tested = 0;  // pairs whose product order was computed
  std::uint64_t chains_built = 0;
  double seconds = 0.0;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::budget_exhausted;
  // Present iff status == found; first element has order p, second q.
  std::optional<std::pair<SignedElement, SignedElement>> pair;
  std::optional<PairSignature> signature;
  SearchStats stats;
};

// --- conjugacy classes by signed cycle type -------------------------------

// A part of a signed cycle type: a cycle length together with the parity of
// the sign bits on the cycle (negative = odd sum). Two elements of B_n are
// conjugate iff their multisets of parts agree.
struct SignedCyclePart {
  int length = 1;
  bool negative = false;
  friend bool operator==(const SignedCyclePart&, const SignedCyclePart&) = default;
};
using SignedCycleType = std::vector<SignedCyclePart>;  // canonical: sorted

// All signed cycle types of degree n, canonically ordered and duplicate
// free. (Their count is sum_k p(k)p(n-k) over partitions.)
std::vector<SignedCycleType> signed_cycle_types(int n);

// The element order determined by a type: lcm over parts of length
// (positive) or 2*length (negative).
std::uint64_t order_of_type(const SignedCycleType& type);

// Canonical representative: consecutive-point cycles in type order, a
// single sign bit on the first point of each negative part.
SignedElement class_representative(const SignedCycleType& type, int n);

// Seeded sampler for elements of exact order m (uniform over a constructed
// type, not over the class); throws std::invalid_argument when no element
// of order m exists in B_n.
SignedElement random_element_of_order(int n, std::uint64_t m, Rng& rng);

// --- exhaustive search -----------------------------------------------------

struct ExhaustiveOptions {
  bool allow_long = false;          // permits n = 7, 8 (hours-scale sweeps)
  bool class_reduction = true;      // x over class representatives only
  bool reverse_enumeration = false; // permuted order; set-level results agree
};

// Enumerates x of order sig.p (over class representatives, unless
// class_reduction is off) against every y of order sig.q with |xy| = sig.r,
// chain-certifying candidates. Restricting to this one order assignment is
// complete: rotations (x,y) -> (y,(xy)^-1) and the inversion
// (x,y) -> (y^-1,x^-1) realize every permutation of the order triple
// without changing the generated group. Requires n <= 6, or n <= 8 with
// allow_long.
SearchOutcome exhaustive_signature_search(int n, const PairSignature& sig,
                                          const ExhaustiveOptions& opts = {});

struct SignatureTrailEntry {
  PairSignature signature;
  SearchStatus status;  // found or exhausted_none
};

struct MinimalSearchReport {
  // One entry per signature tried, in candidate_signatures order, ending at
  // the first found signature (minimality is by construction of the order).
  std::vector<SignatureTrailEntry> trail;
  SearchOutcome outcome;
};

// Walks candidate_signatures(n) (or only signature_filter when given)
// through exhaustive_signature_search.
MinimalSearchReport exhaustive_minimal_pair(
    int n, const std::optional<PairSignature>& signature_filter = {},
    const ExhaustiveOptions& opts = {});

// --- randomized search -----------------------------------------------------

// Samples x of order target.p and y of order target.q by random signed
// cycle-type construction, keeps pairs with |xy| = target.r whose
// projections act transitively, and chain-certifies those. Reproducible for
// a fixed seed; running out of attempts is a status, not an error.
SearchOutcome randomized_pair_search(int n, const PairSignature& target,
                                     std::uint64_t max_attempts, std::uint64_t seed);

// Shape-first (2,4,6) search. Samples only the unsigned skeletons -- an
// involution, an order-4 permutation, their product with every cycle length
// in {1,2,3,6} and a 6-cycle present, acting transitively -- and then
// completes the sign blocks exactly, by solving the GF(2) linear system
// that forces the three orders to 2, 4, and 6 (sign parities around
// selected cycles of each skeleton). Found pairs are chain-certified like
// every other search. The sign completion sidesteps the vanishing
// probability of drawing workable signs at random, which is what stalls
// randomized_pair_search beyond degree ~25; this search stays in seconds
// through the whole GAP band (7 <= n <= 40) and beyond. max_shapes bounds
// the skeleton draws. Reproducible for a fixed seed.
SearchOutcome sign_solved_246_search(int n, std::uint64_t max_shapes, std::uint64_t seed);

}  // namespace octagen
