#pragma once
// Exact Riemann-Hurwitz arithmetic and the strong symmetric genus of B_n.
// Everything here is big-integer / exact-rational; no floating point.

#include "octagen/integers.hpp"
#include "octagen/signatures.hpp"

namespace octagen {

// 1 + |G|/2 * (1 - 1/p - 1/q - 1/r), evaluated exactly. Requires
// 1/p + 1/q + 1/r < 1; a non-integer result is a hard error naming the
// inputs (it would mean the signature/order combination is inconsistent).
BigInt rh_upper_bound(const BigInt& order, const PairSignature& sig);

// The minimal signature of B_n: (2,4,6) except for the three exceptional
// degrees 5 -> (2,4,10), 6 -> (2,6,6), 8 -> (2,4,8).
PairSignature minimal_signature(int n);

// The strong symmetric genus of B_n (n >= 3): n!*2^n/24 + 1 away from the
// exceptional degrees, table values 289 / 3841 / 645121 at n = 5, 6, 8.
// Always equals rh_upper_bound(n!*2^n, minimal_signature(n)).
BigInt genus_Bn(int n);

// Exact test |G| > 12*(genus - 1). Requires genus >= 2. Note the strict
// inequality fails for B_6 exactly: 46080 = 12 * 3840.
bool singerman_applicable(const BigInt& order, const BigInt& genus);

}  // namespace octagen
