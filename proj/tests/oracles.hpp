#pragma once

// Independent oracles used by the unit and acceptance suites. These
// deliberately avoid the library's own shortcuts: orders are measured by
// iterated multiplication, block systems by exhaustive partition search.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "octagen/perm.hpp"
#include "octagen/signed_perm.hpp"

namespace oracles {

inline std::uint64_t perm_order_by_iteration(const octagen::Permutation& p) {
  octagen::Permutation q = p;
  std::uint64_t k = 1;
  while (!q.is_identity()) {
    q = octagen::compose(q, p);
    ++k;
  }
  return k;
}

inline std::uint64_t signed_order_by_iteration(const octagen::SignedElement& x) {
  octagen::SignedElement y = x;
  const octagen::SignedElement id = octagen::identity_element(x.degree());
  std::uint64_t k = 1;
  while (!(y == id)) {
    y = octagen::multiply(y, x);
    ++k;
  }
  return k;
}

// All partitions of {1..n} into blocks of equal size k (1 < k < n) that every
// generator permutes. Each partition is returned with blocks sorted by their
// smallest point, points ascending inside a block.
inline std::vector<std::vector<std::vector<int>>> all_block_systems(
    const std::vector<octagen::Permutation>& gens, int n) {
  std::vector<std::vector<std::vector<int>>> found;

  auto preserved = [&](const std::vector<std::vector<int>>& blocks) {
    for (const auto& g : gens) {
      for (const auto& blk : blocks) {
        std::vector<int> image;
        image.reserve(blk.size());
        for (int pt : blk) image.push_back(g(pt));
        std::sort(image.begin(), image.end());
        bool is_block = false;
        for (const auto& other : blocks) {
          if (other == image) {
            is_block = true;
            break;
          }
        }
        if (!is_block) return false;
      }
    }
    return true;
  };

  for (int k = 2; k < n; ++k) {
    if (n % k != 0) continue;
    std::vector<std::vector<int>> blocks;
    std::vector<bool> used(n + 1, false);

    auto rec = [&](auto&& self) -> void {
      int first = 0;
      for (int v = 1; v <= n; ++v) {
        if (!used[v]) {
          first = v;
          break;
        }
      }
      if (first == 0) {
        if (preserved(blocks)) found.push_back(blocks);
        return;
      }
      std::vector<int> pool;
      for (int v = first + 1; v <= n; ++v) {
        if (!used[v]) pool.push_back(v);
      }
      std::vector<int> pick;
      auto choose = [&](auto&& chooser, std::size_t from) -> void {
        if (static_cast<int>(pick.size()) == k - 1) {
          std::vector<int> blk{first};
          blk.insert(blk.end(), pick.begin(), pick.end());
          used[first] = true;
          for (int v : pick) used[v] = true;
          blocks.push_back(blk);
          self(self);
          blocks.pop_back();
          used[first] = false;
          for (int v : pick) used[v] = false;
          return;
        }
        for (std::size_t idx = from; idx < pool.size(); ++idx) {
          pick.push_back(pool[idx]);
          chooser(chooser, idx + 1);
          pick.pop_back();
        }
      };
      choose(choose, 0);
    };
    rec(rec);
  }
  return found;
}

}  // namespace oracles
