#include "octagen/rng.hpp"

namespace octagen {

std::uint64_t rand_below(Rng& rng, std::uint64_t k) {
  // Rejection sampling keeps the distribution exact and the stream portable.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % k;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % k;
}

int rand_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rand_below(
                  rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

}  // namespace octagen
