#include "octagen/words.hpp"

#include <cctype>
#include <stdexcept>

namespace octagen {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Permutation evaluate_word(const GroupWord& w, const Permutation& sigma,
                          const Permutation& tau) {
  require(sigma.degree() == tau.degree(), "evaluate_word: degree mismatch");
  require(!w.letters.empty(), "evaluate_word: empty word");
  Permutation acc = Permutation::identity(sigma.degree());
  for (const Syllable& syl : w.letters) {
    require(syl.letter == 's' || syl.letter == 't', "evaluate_word: unknown letter");
    require(syl.exponent >= 1, "evaluate_word: exponent must be positive");
    const Permutation& base = (syl.letter == 's') ? sigma : tau;
    acc = compose(acc, power(base, static_cast<std::uint64_t>(syl.exponent)));
  }
  return acc;
}

GroupWord parse_word(const std::string& text) {
  GroupWord w;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    const char letter = text[pos];
    require(letter == 's' || letter == 't', "parse_word: unknown token");
    ++pos;
    int exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      require(pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])),
              "parse_word: expected an exponent after '^'");
      exponent = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        exponent = exponent * 10 + (text[pos] - '0');
        require(exponent <= 1000000, "parse_word: exponent too large");
        ++pos;
      }
      require(exponent >= 1, "parse_word: exponent must be positive");
    }
    w.letters.push_back(Syllable{letter, exponent});
    skip_ws();
  }
  require(!w.letters.empty(), "parse_word: empty word");
  return w;
}

std::string format_word(const GroupWord& w) {
  std::string out;
  for (const Syllable& syl : w.letters) {
    if (!out.empty()) out += ' ';
    out += syl.letter;
    if (syl.exponent != 1) {
      out += '^';
      out += std::to_string(syl.exponent);
    }
  }
  return out;
}

GroupWord concat(const GroupWord& a, const GroupWord& b) {
  GroupWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

}  // namespace octagen
