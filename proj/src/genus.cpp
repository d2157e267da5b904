#include "octagen/genus.hpp"

#include <sstream>
#include <stdexcept>

namespace octagen {

BigInt rh_upper_bound(const BigInt& order, const PairSignature& sig) {
  const BigRational sum = signature_sum(sig);
  if (sum >= 1) {
    throw std::invalid_argument("rh_upper_bound: signature is not hyperbolic");
  }
  if (order < 1) throw std::invalid_argument("rh_upper_bound: order must be positive");
  const BigRational bound = 1 + BigRational(order) / 2 * (1 - sum);
  if (denominator(bound) != 1) {
    std::ostringstream msg;
    msg << "rh_upper_bound: non-integer bound " << bound << " for order " << order
        << " and signature (" << sig.p << "," << sig.q << "," << sig.r << ")";
    throw std::runtime_error(msg.str());
  }
  return numerator(bound);
}

PairSignature minimal_signature(int n) {
  if (n < 3) throw std::invalid_argument("minimal_signature: n must be at least 3");
  switch (n) {
    case 5:
      return {2, 4, 10};
    case 6:
      return {2, 6, 6};
    case 8:
      return {2, 4, 8};
    default:
      return {2, 4, 6};
  }
}

BigInt genus_Bn(int n) {
  if (n < 3) throw std::invalid_argument("genus_Bn: n must be at least 3");
  BigInt value;
  switch (n) {
    case 5:
      value = 289;
      break;
    case 6:
      value = 3841;
      break;
    case 8:
      value = 645121;
      break;
    default:
      value = hyperoctahedral_order(n) / 24 + 1;
      break;
  }
  if (value != rh_upper_bound(hyperoctahedral_order(n), minimal_signature(n))) {
    throw std::logic_error("genus_Bn: closed form disagrees with the RH bound");
  }
  return value;
}

bool singerman_applicable(const BigInt& order, const BigInt& genus) {
  if (genus < 2) throw std::invalid_argument("singerman_applicable: genus must be at least 2");
  return order > 12 * (genus - 1);
}

}  // namespace octagen
