#include "octagen/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace octagen {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check_same_degree(const Permutation& p, const Permutation& q, const char* op) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument(std::string(op) + ": degree mismatch");
  }
}

}  // namespace

Permutation::Permutation(int n) : img_(static_cast<std::size_t>(n)) {
  require(n >= 0, "Permutation: negative degree");
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : img_) {
    require(v >= 1 && v <= n, "Permutation: image out of range");
    require(!seen[static_cast<std::size_t>(v)], "Permutation: image repeated");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (img_[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  check_same_degree(p, q, "compose");
  std::vector<int> img(p.images().size());
  for (std::size_t i = 0; i < img.size(); ++i) {
    img[i] = q(p.images()[i]);
  }
  return Permutation(std::move(img));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> img(p.images().size());
  for (int i = 1; i <= p.degree(); ++i) {
    img[static_cast<std::size_t>(p(i)) - 1] = i;
  }
  return Permutation(std::move(img));
}

Permutation power(const Permutation& p, std::uint64_t k) {
  Permutation result = Permutation::identity(p.degree());
  Permutation base = p;
  while (k > 0) {
    if (k & 1) result = compose(result, base);
    k >>= 1;
    if (k > 0) base = compose(base, base);
  }
  return result;
}

std::uint64_t order(const Permutation& p) {
  std::uint64_t result = 1;
  for (const auto& cyc : cycle_decomposition(p)) {
    result = std::lcm(result, static_cast<std::uint64_t>(cyc.size()));
  }
  return result;
}

Parity parity(const Permutation& p) {
  int transpositions = 0;
  for (const auto& cyc : cycle_decomposition(p)) {
    transpositions += static_cast<int>(cyc.size()) - 1;
  }
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

std::vector<std::vector<int>> cycle_decomposition(const Permutation& p) {
  const int n = p.degree();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::vector<int>> cycles;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cyc;
    int pt = start;
    do {
      seen[static_cast<std::size_t>(pt)] = true;
      cyc.push_back(pt);
      pt = p(pt);
    } while (pt != start);
    if (cyc.size() >= 2) cycles.push_back(std::move(cyc));
  }
  return cycles;
}

std::vector<int> fixed_points(const Permutation& p) {
  std::vector<int> fixed;
  for (int i = 1; i <= p.degree(); ++i) {
    if (p(i) == i) fixed.push_back(i);
  }
  return fixed;
}

CycleType cycle_type(const Permutation& p) {
  CycleType ct;
  for (const auto& cyc : cycle_decomposition(p)) {
    ct.lengths.push_back(static_cast<int>(cyc.size()));
  }
  std::sort(ct.lengths.begin(), ct.lengths.end(), std::greater<int>());
  ct.fixed_count = static_cast<int>(fixed_points(p).size());
  return ct;
}

std::vector<int> orbit_of(int start, const std::vector<Permutation>& gens) {
  std::vector<int> stack{start};
  std::set<int> seen{start};
  while (!stack.empty()) {
    int pt = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      int image = g(pt);
      if (seen.insert(image).second) stack.push_back(image);
    }
  }
  return std::vector<int>(seen.begin(), seen.end());
}

bool is_transitive(const std::vector<Permutation>& gens, int n) {
  require(n >= 1, "is_transitive: n must be >= 1");
  if (gens.empty()) return n == 1;
  for (const auto& g : gens) {
    require(g.degree() == n, "is_transitive: generator degree mismatch");
  }
  return static_cast<int>(orbit_of(1, gens).size()) == n;
}

namespace {

// Atkinson's algorithm: the finest block system in which a and b share a
// block, as a union-find structure; returns the blocks, or an empty vector
// if the system is trivial (one block).
std::vector<std::vector<int>> minimal_blocks(const std::vector<Permutation>& gens,
                                             int n, int a, int b) {
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };

  std::vector<std::pair<int, int>> queue{{a, b}};
  parent[static_cast<std::size_t>(find(b))] = find(a);
  while (!queue.empty()) {
    auto [x, y] = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      int gx = find(g(x));
      int gy = find(g(y));
      if (gx != gy) {
        parent[static_cast<std::size_t>(gy)] = gx;
        queue.emplace_back(gx, gy);
      }
    }
  }

  std::vector<std::vector<int>> blocks;
  std::vector<int> index(static_cast<std::size_t>(n) + 1, -1);
  for (int v = 1; v <= n; ++v) {
    int root = find(v);
    if (index[static_cast<std::size_t>(root)] == -1) {
      index[static_cast<std::size_t>(root)] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(index[static_cast<std::size_t>(root)])]
        .push_back(v);
  }
  if (blocks.size() <= 1) return {};
  return blocks;
}

}  // namespace

std::optional<std::vector<std::vector<int>>> find_block_system(
    const std::vector<Permutation>& gens, int n) {
  if (!is_transitive(gens, n)) {
    throw std::invalid_argument("find_block_system: action must be transitive");
  }
  for (int j = 2; j <= n; ++j) {
    auto blocks = minimal_blocks(gens, n, 1, j);
    if (!blocks.empty()) return blocks;
  }
  return std::nullopt;
}

Permutation parse_cycles(const std::string& text, int n) {
  require(n >= 0, "parse_cycles: negative degree");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_ws();
  while (pos < text.size()) {
    require(text[pos] == '(', "parse_cycles: expected '('");
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      require(std::isdigit(static_cast<unsigned char>(text[pos])),
              "parse_cycles: expected a point");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        require(v <= n, "parse_cycles: point out of range");
        ++pos;
      }
      require(v >= 1 && v <= n, "parse_cycles: point out of range");
      require(!seen[static_cast<std::size_t>(v)], "parse_cycles: repeated point");
      seen[static_cast<std::size_t>(v)] = true;
      cyc.push_back(v);
      skip_ws();
    }
    require(pos < text.size() && text[pos] == ')', "parse_cycles: missing ')'");
    ++pos;
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      img[static_cast<std::size_t>(cyc[k]) - 1] = cyc[(k + 1) % cyc.size()];
    }
    skip_ws();
  }
  return Permutation(std::move(img));
}

std::string format_cycles(const Permutation& p) {
  auto cycles = cycle_decomposition(p);
  if (cycles.empty()) return "()";
  std::ostringstream out;
  for (const auto& cyc : cycles) {
    out << '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k > 0) out << ' ';
      out << cyc[k];
    }
    out << ')';
  }
  return out.str();
}

Permutation random_permutation(int n, Rng& rng) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  shuffle_vec(rng, img);
  return Permutation(std::move(img));
}

}  // namespace octagen
