#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace octagen {

// All randomized code goes through mt19937_64 plus the helpers below, never
// through std::uniform_int_distribution or std::shuffle, whose output is
// implementation-defined. Same seed, same results, on any platform.
using Rng = std::mt19937_64;

// Uniform value in [0, k), k >= 1, by rejection on the raw 64-bit stream.
std::uint64_t rand_below(Rng& rng, std::uint64_t k);

// Uniform value in [lo, hi], inclusive.
int rand_int(Rng& rng, int lo, int hi);

template <typename T>
void shuffle_vec(Rng& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rand_below(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace octagen
