#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "octagen/rng.hpp"

namespace octagen {

// Permutation of {1..n}, stored as an image table. All points at the API are
// 1-based; img_[k] is the image of point k+1 and is itself a 1-based point.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity on {1..n}
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n) { return Permutation(n); }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int point) const { return img_[point - 1]; }

  bool is_identity() const;
  bool operator==(const Permutation&) const = default;

  const std::vector<int>& images() const { return img_; }

 private:
  std::vector<int> img_;
};

enum class Parity { even, odd };

// Left-to-right composition: compose(p, q) applies p first, then q.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
Permutation power(const Permutation& p, std::uint64_t k);
std::uint64_t order(const Permutation& p);
Parity parity(const Permutation& p);

// Cycles of length >= 2, each rotated to start at its smallest point,
// sorted by first point.
std::vector<std::vector<int>> cycle_decomposition(const Permutation& p);
std::vector<int> fixed_points(const Permutation& p);

struct CycleType {
  std::vector<int> lengths;  // cycle lengths >= 2, sorted descending
  int fixed_count = 0;
  bool operator==(const CycleType&) const = default;
};
CycleType cycle_type(const Permutation& p);

// Orbit of `start` under `gens`, ascending.
std::vector<int> orbit_of(int start, const std::vector<Permutation>& gens);

// An empty generating list is transitive only for n = 1.
bool is_transitive(const std::vector<Permutation>& gens, int n);

// A partition of {1..n} into blocks of equal size 1 < k < n preserved by all
// generators, or nullopt if the action is primitive. Requires a transitive
// action. Atkinson's minimal-block algorithm seeded with each pair {1, j}.
std::optional<std::vector<std::vector<int>>> find_block_system(
    const std::vector<Permutation>& gens, int n);

// Cycle notation: "(1 2 3)(7 8)"; "" and "()" denote the identity.
// Rejects malformed input, points outside 1..n, and repeated points.
Permutation parse_cycles(const std::string& text, int n);
std::string format_cycles(const Permutation& p);

Permutation random_permutation(int n, Rng& rng);

}  // namespace octagen
