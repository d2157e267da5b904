#include "octagen/stabchain.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace octagen {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

int first_moved_point(const Permutation& g) {
  for (int p = 1; p <= g.degree(); ++p) {
    if (g(p) != p) return p;
  }
  throw std::logic_error("first_moved_point: identity permutation");
}

}  // namespace

StabilizerChain::StabilizerChain(std::vector<Permutation> gens, int degree)
    : degree_(degree) {
  require(degree >= 0, "StabilizerChain: negative degree");
  std::vector<Permutation> work;
  for (auto& g : gens) {
    require(g.degree() == degree, "StabilizerChain: generator degree mismatch");
    if (!g.is_identity()) work.push_back(std::move(g));
  }
  if (work.empty()) return;

  new_level(first_moved_point(work.front()));
  for (auto& g : work) levels_[0].gens.push_back(std::move(g));
  extend_orbit(0);

  // Schreier-Sims: certify levels bottom-up. A level is certified when all
  // of its Schreier generators sift to the identity through the deeper
  // levels; any residue is adjoined below and certification restarts at the
  // deepest level it touched. Pairs are marked done only on success, and
  // only unprocessed pairs are visited when a level is revisited.
  std::size_t i = levels_.size() - 1;
  while (true) {
    bool restarted = false;
    for (std::size_t oi = 0; oi < levels_[i].orbit.size() && !restarted; ++oi) {
      const int delta = levels_[i].orbit[oi];
      while (levels_[i].sifted_upto[oi] < levels_[i].gens.size() && !restarted) {
        const std::size_t gi = levels_[i].sifted_upto[oi];
        const Permutation& s = levels_[i].gens[gi];
        const int gamma = s(delta);
        Permutation schreier =
            compose(compose(*levels_[i].rep[static_cast<std::size_t>(delta)], s),
                    inverse(*levels_[i].rep[static_cast<std::size_t>(gamma)]));
        if (schreier.is_identity()) {
          ++levels_[i].sifted_upto[oi];
          continue;
        }
        auto [residue, j] = sift_from(i + 1, std::move(schreier));
        if (residue.is_identity()) {
          ++levels_[i].sifted_upto[oi];
          continue;
        }
        // residue fixes base points 0..j-1, so it belongs to every level
        // from i+1 through j.
        if (j == levels_.size()) new_level(first_moved_point(residue));
        for (std::size_t l = i + 1; l <= j; ++l) {
          levels_[l].gens.push_back(residue);
          extend_orbit(l);
        }
        i = j;
        restarted = true;
      }
    }
    if (restarted) continue;
    if (i == 0) break;
    --i;
  }
}

void StabilizerChain::new_level(int beta) {
  Level level;
  level.beta = beta;
  level.orbit.push_back(beta);
  level.sifted_upto.push_back(0);
  level.rep.assign(static_cast<std::size_t>(degree_) + 1, std::nullopt);
  level.rep[static_cast<std::size_t>(beta)] = Permutation::identity(degree_);
  levels_.push_back(std::move(level));
  base_.push_back(beta);
}

void StabilizerChain::extend_orbit(std::size_t i) {
  Level& level = levels_[i];
  // Reprocess the whole orbit with the current generator set. Existing
  // representatives are kept, so the pass is idempotent and cheap.
  std::vector<int> queue = level.orbit;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int delta = queue[qi];
    for (const Permutation& s : level.gens) {
      const int gamma = s(delta);
      auto& slot = level.rep[static_cast<std::size_t>(gamma)];
      if (!slot) {
        slot = compose(*level.rep[static_cast<std::size_t>(delta)], s);
        level.orbit.push_back(gamma);
        level.sifted_upto.push_back(0);
        queue.push_back(gamma);
      }
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::sift_from(std::size_t i,
                                                               Permutation g) const {
  for (std::size_t k = i; k < levels_.size(); ++k) {
    const int delta = g(levels_[k].beta);
    const auto& rep = levels_[k].rep[static_cast<std::size_t>(delta)];
    if (!rep) return {std::move(g), k};
    g = compose(g, inverse(*rep));
  }
  return {std::move(g), levels_.size()};
}

BigInt StabilizerChain::size() const {
  BigInt total = 1;
  for (const Level& level : levels_) total *= static_cast<unsigned>(level.orbit.size());
  return total;
}

bool StabilizerChain::contains(const Permutation& g) const {
  require(g.degree() == degree_, "contains: degree mismatch");
  auto [residue, stuck] = sift_from(0, g);
  (void)stuck;
  return residue.is_identity();
}

std::vector<Permutation> StabilizerChain::strong_generators() const {
  std::set<std::vector<int>> seen;
  std::vector<Permutation> out;
  for (const Level& level : levels_) {
    for (const Permutation& g : level.gens) {
      if (seen.insert(g.images()).second) out.push_back(g);
    }
  }
  return out;
}

void StabilizerChain::verify() const {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const Permutation& s : levels_[i].gens) {
      for (std::size_t l = 0; l < i; ++l) {
        if (s(levels_[l].beta) != levels_[l].beta) {
          throw std::logic_error("StabilizerChain::verify: generator moves an earlier base point");
        }
      }
    }
    for (const int delta : levels_[i].orbit) {
      for (const Permutation& s : levels_[i].gens) {
        const int gamma = s(delta);
        Permutation schreier =
            compose(compose(*levels_[i].rep[static_cast<std::size_t>(delta)], s),
                    inverse(*levels_[i].rep[static_cast<std::size_t>(gamma)]));
        auto [residue, stuck] = sift_from(i + 1, std::move(schreier));
        (void)stuck;
        if (!residue.is_identity()) {
          throw std::logic_error("StabilizerChain::verify: Schreier generator fails to sift");
        }
      }
    }
  }
}

StabilizerChain build_chain(const std::vector<Permutation>& gens) {
  require(!gens.empty(), "build_chain: empty generator list");
  return StabilizerChain(gens, gens.front().degree());
}

BigInt group_size(const StabilizerChain& chain) { return chain.size(); }

bool contains(const StabilizerChain& chain, const Permutation& p) {
  return chain.contains(p);
}

bool is_full_hyperoctahedral(const std::vector<SignedElement>& gens, int n) {
  require(n >= 1, "is_full_hyperoctahedral: degree must be positive");
  for (const SignedElement& g : gens) {
    require(g.degree() == n, "is_full_hyperoctahedral: generator degree mismatch");
  }
  if (gens.empty()) return false;

  const bool all_even_signs = std::all_of(
      gens.begin(), gens.end(), [](const SignedElement& g) { return in_even_sign_subgroup(g); });
  const bool all_parity_matched =
      std::all_of(gens.begin(), gens.end(),
                  [](const SignedElement& g) { return in_parity_matched_subgroup(g); });
  if (all_even_signs || all_parity_matched) return false;

  std::vector<Permutation> embedded;
  embedded.reserve(gens.size());
  for (const SignedElement& g : gens) embedded.push_back(embed(g));
  StabilizerChain chain(std::move(embedded), 2 * n);
  return chain.size() == hyperoctahedral_order(n);
}

SymmetricClass is_full_symmetric(const std::vector<Permutation>& gens) {
  require(!gens.empty(), "is_full_symmetric: empty generator list");
  const int n = gens.front().degree();
  StabilizerChain chain(gens, n);
  const BigInt sz = chain.size();
  const BigInt full = factorial(n);
  if (sz == full) return SymmetricClass::full_symmetric;
  if (sz * 2 == full) return SymmetricClass::alternating;
  return SymmetricClass::smaller;
}

}  // namespace octagen
