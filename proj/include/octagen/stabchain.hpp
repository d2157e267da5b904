#pragma once
// Stabilizer chains (deterministic Schreier-Sims): exact order and
// membership testing for permutation groups given by generators. This is
// the ground truth behind every "generates B_n" claim in the toolkit.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "octagen/integers.hpp"
#include "octagen/perm.hpp"
#include "octagen/signed_perm.hpp"

namespace octagen {

class StabilizerChain {
 public:
  // Builds a chain for the group <gens> acting on {1..degree}. Identity
  // generators are ignored; an empty or all-identity list yields the
  // trivial chain (empty base, size 1).
  StabilizerChain(std::vector<Permutation> gens, int degree);

  int degree() const { return degree_; }
  const std::vector<int>& base() const { return base_; }

  // Exact group order: product of the transversal sizes.
  BigInt size() const;

  // Membership by sifting. Throws std::invalid_argument on degree mismatch.
  bool contains(const Permutation& g) const;

  // All strong generators, deduplicated. Rebuilding a chain from these
  // reproduces size(); tests use that as an independent verification pass.
  std::vector<Permutation> strong_generators() const;

  // Redundant Schreier-condition check over the finished chain; throws
  // std::logic_error if any level fails. Intended for tests.
  void verify() const;

 private:
  struct Level {
    int beta = 0;
    std::vector<Permutation> gens;
    std::vector<int> orbit;  // discovery order; orbit[0] == beta
    // rep[p] maps beta to p; entries are never overwritten once set, so
    // previously computed sift paths stay valid as orbits grow. That also
    // means a Schreier generator that once sifted to the identity always
    // will, so each (orbit point, generator) pair needs processing once;
    // sifted_upto[oi] counts the generators already processed for orbit[oi].
    std::vector<std::optional<Permutation>> rep;
    std::vector<std::size_t> sifted_upto;
  };

  void new_level(int beta);
  void extend_orbit(std::size_t i);
  // Sifts g through levels i, i+1, ...; returns the residue and the first
  // level whose transversal could not absorb it (levels count past the end
  // when g sifts all the way through).
  std::pair<Permutation, std::size_t> sift_from(std::size_t i, Permutation g) const;

  int degree_ = 0;
  std::vector<int> base_;
  std::vector<Level> levels_;
};

// Spec'd entry points. build_chain requires a nonempty generator list with
// a common degree (the degree is read from the generators).
StabilizerChain build_chain(const std::vector<Permutation>& gens);
BigInt group_size(const StabilizerChain& chain);
bool contains(const StabilizerChain& chain, const Permutation& p);

// True iff <gens> is all of B_n, certified by chain order n!*2^n on the
// embedded generators. Applies the index-2 subgroup refutations first: if
// every generator has even sign block, or every generator is
// parity-matched, the group is proper and no chain is built.
bool is_full_hyperoctahedral(const std::vector<SignedElement>& gens, int n);

enum class SymmetricClass { full_symmetric, alternating, smaller };

// Classifies <gens> by exact order: n! -> full_symmetric, n!/2 ->
// alternating (the unique index-2 subgroup), otherwise smaller.
SymmetricClass is_full_symmetric(const std::vector<Permutation>& gens);

}  // namespace octagen
