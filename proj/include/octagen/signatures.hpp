#pragma once
// (p,q,r) signatures of generating pairs and the candidate ordering the
// minimality searches walk through.

#include <vector>

#include "octagen/integers.hpp"
#include "octagen/signed_perm.hpp"

namespace octagen {

struct PairSignature {
  int p = 0;  // p <= q <= r
  int q = 0;
  int r = 0;
  friend bool operator==(const PairSignature&, const PairSignature&) = default;
};

// The multiset {|x|, |y|, |xy|} sorted ascending.
PairSignature signature_of(const SignedElement& x, const SignedElement& y);

// Exact value of 1/p + 1/q + 1/r.
BigRational signature_sum(const PairSignature& s);

// True iff a's sum 1/p+1/q+1/r strictly exceeds b's (exact rationals);
// a larger sum means a smaller Riemann-Hurwitz bound. Ties are not better.
bool better_signature(const PairSignature& a, const PairSignature& b);

// The all-even signatures with 5/6 <= 1/p+1/q+1/r < 1, which are exactly
// the ones whose Riemann-Hurwitz bound rh satisfies |G| >= 12(rh - 1) --
// independently of |G|. Ordered by strictly decreasing sum, so a walk that
// stops at the first realizable signature has found a minimal pair:
// (2,4,6), (2,4,8), (2,4,10), then the 5/6 tie (2,6,6), (2,4,12). The tie
// shares one genus value either way; (2,6,6) goes first so the boundary
// degree reports the classical pair.
std::vector<PairSignature> candidate_signatures(int n);

}  // namespace octagen
