#include "octagen/integers.hpp"

#include <stdexcept>

namespace octagen {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

BigInt hyperoctahedral_order(int n) {
  if (n < 1) throw std::invalid_argument("hyperoctahedral_order: n must be >= 1");
  return factorial(n) << n;
}

}  // namespace octagen
