#pragma once
// Words in two letters s, t with positive exponents, evaluated against a
// concrete pair of permutations.

#include <string>
#include <vector>

#include "octagen/perm.hpp"

namespace octagen {

struct Syllable {
  char letter = 's';  // 's' or 't'
  int exponent = 1;   // >= 1
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

struct GroupWord {
  std::vector<Syllable> letters;  // nonempty
  friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

// Substitutes s -> sigma, t -> tau and composes left to right.
// Throws std::invalid_argument on degree mismatch, an empty word, or a
// nonpositive exponent.
Permutation evaluate_word(const GroupWord& w, const Permutation& sigma,
                          const Permutation& tau);

// Grammar: word := item+ ; item := ("s"|"t") ("^" int)?
// Items may be whitespace-separated or concatenated: "sts" == "s t s".
GroupWord parse_word(const std::string& text);

// Space-separated items, "^k" suppressed when k == 1; parse_word round-trips.
std::string format_word(const GroupWord& w);

GroupWord concat(const GroupWord& a, const GroupWord& b);

}  // namespace octagen
