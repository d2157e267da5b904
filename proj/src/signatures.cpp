#include "octagen/signatures.hpp"

#include <algorithm>
#include <stdexcept>

namespace octagen {

PairSignature signature_of(const SignedElement& x, const SignedElement& y) {
  std::uint64_t orders[3] = {element_order(x), element_order(y),
                             element_order(multiply(x, y))};
  std::sort(std::begin(orders), std::end(orders));
  return PairSignature{static_cast<int>(orders[0]), static_cast<int>(orders[1]),
                       static_cast<int>(orders[2])};
}

BigRational signature_sum(const PairSignature& s) {
  if (s.p < 1 || s.q < 1 || s.r < 1) {
    throw std::invalid_argument("signature_sum: entries must be positive");
  }
  return BigRational(1, s.p) + BigRational(1, s.q) + BigRational(1, s.r);
}

bool better_signature(const PairSignature& a, const PairSignature& b) {
  return signature_sum(a) > signature_sum(b);
}

std::vector<PairSignature> candidate_signatures(int n) {
  if (n < 3) throw std::invalid_argument("candidate_signatures: n must be at least 3");
  static const std::vector<PairSignature> list = {
      {2, 4, 6}, {2, 4, 8}, {2, 4, 10}, {2, 6, 6}, {2, 4, 12},
  };
  return list;
}

}  // namespace octagen
