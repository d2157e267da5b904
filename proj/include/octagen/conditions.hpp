#pragma once
// The seven-condition checklist for a (sigma, tau) pair, Jordan-style
// p-cycle witnesses certifying full symmetric generation, and the lift of a
// qualifying pair into signed permutations.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "octagen/perm.hpp"
#include "octagen/signed_perm.hpp"
#include "octagen/words.hpp"

namespace octagen {

// Evidence that <sigma, tau> contains a p-cycle with anchored support:
// evaluate(word)^power is a single p-cycle z (all other points fixed),
// p prime with p < n - 2, and the points permuted by z include anchor_a
// together with sigma(anchor_a) and anchor_b together with tau(anchor_b).
// With <sigma, tau> transitive this forces the group to contain A_n.
struct JordanWitness {
  GroupWord word;
  std::uint64_t power = 1;
  int prime_p = 0;
  std::vector<int> cycle;  // cyclic order with the smallest point first
  int anchor_a = 0;
  int anchor_b = 0;

  friend bool operator==(const JordanWitness&, const JordanWitness&) = default;
};

// Bounds for the systematic witness enumeration: alternating words with at
// most max_sigma_syllables s-blocks, s-exponents 1..max_exponent, optional
// leading/trailing t, at most max_words words evaluated. The static hint
// table is tried first and does not count against max_words.
struct WitnessBudget {
  int max_sigma_syllables = 12;
  int max_exponent = 3;
  std::uint64_t max_words = 20000;
};

struct ConditionReport {
  bool orders_are_4_2 = false;          // (1) |sigma| = 4 and |tau| = 2
  bool sigma_fixes_a_point = false;     // (2)
  bool tau_fixes_three_points = false;  // (3) tau has >= 3 fixed points
  bool product_is_odd = false;          // (4) sigma*tau is an odd permutation
  bool fixed_points_share_cycle = false;  // (5) see chosen_i / chosen_j
  bool transitive = false;              // (6)
  bool has_jordan_witness = false;      // (7)
  // Smallest sigma-fixed i admitting a tau-fixed j in the same sigma*tau
  // cycle, and the smallest such j; both 0 when condition (5) fails.
  int chosen_i = 0;
  int chosen_j = 0;
  std::optional<JordanWitness> witness;
  bool all_pass = false;
};

// Evaluates conditions (1)-(6) exactly and searches for a JordanWitness
// within the budget; deterministic for a fixed budget. Failures are
// reported, never thrown. Throws std::invalid_argument only on degree
// mismatch.
ConditionReport check_conditions(const Permutation& sigma, const Permutation& tau,
                                 const WitnessBudget& budget = WitnessBudget{});

// Re-derives every JordanWitness invariant from scratch and additionally
// requires <sigma, tau> transitive. True means the generated group contains
// A_n; combined with an odd sigma*tau it is all of Sigma_n.
bool verify_jordan(const Permutation& sigma, const Permutation& tau,
                   const JordanWitness& w);

// Lifts (sigma, tau) to ([sigma, b], [tau, c]) with b and c the singleton
// sign blocks marking i and j. Preconditions, each rejected by name:
// equal degrees; sigma(i) = i; tau(j) = j; sigma and tau of even order;
// i and j in the same sigma*tau cycle. The outputs and their product
// provably keep the orders of sigma, tau, and sigma*tau; that is asserted.
std::pair<SignedElement, SignedElement> lift_pair(const Permutation& sigma,
                                                  const Permutation& tau, int i,
                                                  int j);

// Static hint rows for the witness search: known word shapes that exhibit
// p-cycles for degrees n = residue_mod_12 + 12m in large families. Hints
// are tried before the systematic enumeration and never trusted blindly;
// every hit is validated like any other candidate.
struct WitnessHint {
  int residue_mod_12;
  const char* word;
  int prime;
};
const std::vector<WitnessHint>& witness_hints();

}  // namespace octagen
