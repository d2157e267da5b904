#include "octagen/signed_perm.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace octagen {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

SignBlock::SignBlock(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) require(b <= 1, "SignBlock: bits must be 0 or 1");
}

SignBlock SignBlock::from_string(const std::string& text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    require(c == '0' || c == '1', "SignBlock: expected '0' or '1'");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return SignBlock(std::move(bits));
}

void SignBlock::set_bit(int k, int value) {
  require(value == 0 || value == 1, "SignBlock: bit must be 0 or 1");
  bits_[static_cast<std::size_t>(k) - 1] = static_cast<std::uint8_t>(value);
}

int SignBlock::weight() const {
  int w = 0;
  for (auto b : bits_) w += b;
  return w;
}

std::string SignBlock::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = char('0' + bits_[i]);
  return s;
}

SignBlock xor_blocks(const SignBlock& a, const SignBlock& b) {
  require(a.size() == b.size(), "xor_blocks: size mismatch");
  std::vector<std::uint8_t> bits(a.bits());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] ^= b.bits()[i];
  return SignBlock(std::move(bits));
}

SignedElement::SignedElement(Permutation p, SignBlock s)
    : perm(std::move(p)), signs(std::move(s)) {
  require(perm.degree() == signs.size(), "SignedElement: degree mismatch");
}

SignedElement identity_element(int n) {
  return SignedElement(Permutation::identity(n), SignBlock(n));
}

SignedElement multiply(const SignedElement& x, const SignedElement& y) {
  require(x.degree() == y.degree(), "multiply: degree mismatch");
  const int n = x.degree();
  std::vector<std::uint8_t> d(y.signs.bits());  // start from c, fold in moved b
  for (int i = 1; i <= n; ++i) {
    d[static_cast<std::size_t>(y.perm(i)) - 1] ^= x.signs.bits()[static_cast<std::size_t>(i) - 1];
  }
  return SignedElement(compose(x.perm, y.perm), SignBlock(std::move(d)));
}

SignedElement inverse(const SignedElement& x) {
  // Solving multiply(x, y) = identity gives y = [sigma^-1, c] with
  // c[i] = b[sigma(i)].
  const int n = x.degree();
  std::vector<std::uint8_t> c(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    c[static_cast<std::size_t>(i) - 1] =
        x.signs.bits()[static_cast<std::size_t>(x.perm(i)) - 1];
  }
  return SignedElement(inverse(x.perm), SignBlock(std::move(c)));
}

SignedElement power(const SignedElement& x, std::uint64_t k) {
  SignedElement result = identity_element(x.degree());
  SignedElement base = x;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

std::uint64_t element_order(const SignedElement& x) {
  const int n = x.degree();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::uint64_t result = 1;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::uint64_t len = 0;
    int sign_sum = 0;
    int pt = start;
    do {
      seen[static_cast<std::size_t>(pt)] = true;
      sign_sum += x.signs.bit(pt);
      ++len;
      pt = x.perm(pt);
    } while (pt != start);
    std::uint64_t contribution = (sign_sum % 2 == 0) ? len : 2 * len;
    result = std::lcm(result, contribution);
  }
  return result;
}

Permutation embed(const SignedElement& x) {
  const int n = x.degree();
  std::vector<int> img(2 * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int target = x.perm(i);
    bool flip = x.signs.bit(target) == 1;
    img[static_cast<std::size_t>(i) - 1] = flip ? n + target : target;
    img[static_cast<std::size_t>(n + i) - 1] = flip ? target : n + target;
  }
  return Permutation(std::move(img));
}

Permutation project(const SignedElement& x) { return x.perm; }

SignedElement inject(const SignBlock& b) {
  return SignedElement(Permutation::identity(b.size()), b);
}

SignedElement section(const Permutation& p) {
  return SignedElement(p, SignBlock(p.degree()));
}

bool in_even_sign_subgroup(const SignedElement& x) { return x.signs.even(); }

bool in_parity_matched_subgroup(const SignedElement& x) {
  return x.signs.even() == (parity(x.perm) == Parity::even);
}

SignedElement parse_signed(const std::string& text) {
  auto fail = [] { throw std::invalid_argument("parse_signed: expected \"[(cycles) | bits]\""); };
  std::size_t open = text.find('[');
  std::size_t bar = text.find('|');
  std::size_t close = text.rfind(']');
  if (open == std::string::npos || bar == std::string::npos ||
      close == std::string::npos || !(open < bar && bar < close)) {
    fail();
  }
  std::string perm_part = text.substr(open + 1, bar - open - 1);
  std::string bits_part = text.substr(bar + 1, close - bar - 1);
  auto strip = [](std::string s) {
    std::size_t a = s.find_first_not_of(" \t");
    std::size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) return std::string();
    return s.substr(a, b - a + 1);
  };
  SignBlock signs = SignBlock::from_string(strip(bits_part));
  Permutation perm = parse_cycles(strip(perm_part), signs.size());
  return SignedElement(std::move(perm), std::move(signs));
}

std::string format_signed(const SignedElement& x) {
  std::ostringstream out;
  out << '[' << format_cycles(x.perm) << " | " << x.signs.to_string() << ']';
  return out.str();
}

SignedElement random_signed_element(int n, Rng& rng) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (auto& b : bits) b = static_cast<std::uint8_t>(rand_below(rng, 2));
  return SignedElement(random_permutation(n, rng), SignBlock(std::move(bits)));
}

}  // namespace octagen
