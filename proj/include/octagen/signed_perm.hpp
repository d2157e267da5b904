#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "octagen/perm.hpp"

namespace octagen {

// Sign vector over {1..n}: bit k says whether letter k carries a minus sign.
class SignBlock {
 public:
  SignBlock() = default;
  explicit SignBlock(int n) : bits_(n, 0) {}
  explicit SignBlock(std::vector<std::uint8_t> bits);

  // "0110" -> bits for points 1..4.
  static SignBlock from_string(const std::string& text);

  int size() const { return static_cast<int>(bits_.size()); }
  int bit(int k) const { return bits_[k - 1]; }
  void set_bit(int k, int value);
  int weight() const;
  bool even() const { return weight() % 2 == 0; }
  std::string to_string() const;

  bool operator==(const SignBlock&) const = default;
  const std::vector<std::uint8_t>& bits() const { return bits_; }

 private:
  std::vector<std::uint8_t> bits_;
};

SignBlock xor_blocks(const SignBlock& a, const SignBlock& b);

// Signed permutation [perm, signs]: an element of the hyperoctahedral group
// B_n, the wreath product of Z_2 by the symmetric group on n letters.
// Multiplication follows left-to-right composition on the permutation part;
// the product's sign block d satisfies d[tau(k)] = b[k] XOR c[tau(k)] for
// [sigma,b]*[tau,c] (the permuted copy of b, XORed with c).
struct SignedElement {
  Permutation perm;
  SignBlock signs;

  SignedElement() = default;
  SignedElement(Permutation p, SignBlock s);

  int degree() const { return perm.degree(); }
  bool operator==(const SignedElement&) const = default;
};

SignedElement identity_element(int n);
SignedElement multiply(const SignedElement& x, const SignedElement& y);
SignedElement inverse(const SignedElement& x);
SignedElement power(const SignedElement& x, std::uint64_t k);

// Order from the signed cycle structure: a cycle of length L with an even
// number of signs contributes L, with an odd number 2L; the order is the lcm.
std::uint64_t element_order(const SignedElement& x);

// Faithful degree-2n permutation representation: point i is letter +i,
// point n+i is letter -i.
Permutation embed(const SignedElement& x);

Permutation project(const SignedElement& x);     // forget signs
SignedElement inject(const SignBlock& b);        // [identity, b]
SignedElement section(const Permutation& p);     // [p, all-plus]

// The two index-2 subgroups used as generation pre-filters: elements with an
// even sign block, and elements whose sign parity matches the permutation
// parity (even signs exactly on even permutations).
bool in_even_sign_subgroup(const SignedElement& x);
bool in_parity_matched_subgroup(const SignedElement& x);

// Text form "[(1 2)(3 4) | 0110]"; the sign string fixes the degree.
SignedElement parse_signed(const std::string& text);
std::string format_signed(const SignedElement& x);

SignedElement random_signed_element(int n, Rng& rng);

}  // namespace octagen
