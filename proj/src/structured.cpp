#include "octagen/structured.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "octagen/conditions.hpp"
#include "octagen/rng.hpp"

namespace octagen {

namespace {

// Pieces are transitive diagrams on a handful of points whose sigma*tau
// cycles all have length 1, 2, 3, or 6. Consecutive pieces are joined by a
// tau-transposition between two "ports": tau-fixed points lying on
// sigma*tau 3-cycles. A join splices the two port 3-cycles into one
// 6-cycle and leaves every other cycle alone, so the assembled sigma*tau
// keeps order 6; it also drops the cycle count by one, flipping the parity
// of sigma*tau once per join.
//
// The first piece is a fixed 9-point diagram carrying the anchor pair for
// the signed lift: a sigma-fixed point and a tau-fixed point on a common
// sigma*tau cycle. Such a pair can only live on a 6-cycle — on a shorter
// cycle the involution relations close those points into their own orbit,
// contradicting transitivity — and solving the resulting constraints
// around the 6-cycle (1 2 3 4 5 6) with sigma(1) = 1 and tau(4) = 4 pins
// the diagram below up to relabeling. Its lone 3-cycle (7 8 9) supplies
// the join port, so assembly never touches the anchor cycle.
//
// Middle pieces use even sizes only: two tau-fixed ports on distinct
// 3-cycles almost never coexist with the cycle-length filter at odd sizes
// (measured at < 1 in 300000 draws, versus ~1 in 1000 at even sizes). The
// end piece absorbs the leftover size and parity.
constexpr int kAnchorSize = 9;
constexpr int kTailMin = 12, kTailMax = 25;  // last piece
constexpr int kMidMin = 12, kMidMax = 16;    // middle pieces, even sizes

// Single-port piece sizes with no transitive diagram under the cycle-length
// filter (13 is provably empty; 19 never appeared in extensive sampling).
constexpr bool blocked_tail(int s) { return s == 13 || s == 19; }

struct Piece {
  std::vector<int> sigma;  // local image tables over {1..size}
  std::vector<int> tau;
  std::vector<int> ports;  // tau-fixed points on distinct sigma*tau 3-cycles
  int cycle_count = 0;     // sigma*tau cycles, counting fixed points
  int size = 0;
};

struct PieceSpec {
  int size = 0;
  int ports_needed = 1;          // 1 for the end piece, 2 for middle pieces
  int extra_tau_fixed = 0;       // tau-fixed points beyond the ports
  std::optional<int> parity_req; // required (size - cycle_count) mod 2
};

Piece anchor_piece() {
  Piece piece;
  piece.sigma = {1, 7, 4, 8, 6, 2, 5, 9, 3};  // (2 7 5 6)(3 4 8 9)
  piece.tau = {2, 1, 7, 4, 8, 6, 3, 5, 9};    // (1 2)(3 7)(5 8)
  piece.ports = {9};
  piece.cycle_count = 2;  // sigma*tau = (1 2 3 4 5 6)(7 8 9)
  piece.size = kAnchorSize;
  return piece;
}

std::optional<Piece> find_piece(const PieceSpec& spec, Rng& rng) {
  const int s = spec.size;
  const int min_tau_fixed = spec.ports_needed + spec.extra_tau_fixed;
  if (s < kTailMin) return std::nullopt;

  std::vector<int> pts(static_cast<std::size_t>(s));
  std::vector<int> sigma(pts.size()), tau(pts.size()), st(pts.size());
  std::vector<int> cid(pts.size());  // sigma*tau cycle id per point
  std::vector<int> ports;

  constexpr int kDraws = 300000;
  for (int draw = 0; draw < kDraws; ++draw) {
    // Keep supports dense: points fixed by both sigma and tau are isolated,
    // so fragmented draws are never transitive. sigma gets as many 4-cycles
    // as possible (minus one of slack), tau as many 2-cycles as the
    // required fixed points allow.
    const int max4 = s / 4;
    const int n4 = rand_int(rng, std::max(1, max4 - 1), max4);
    const int after4 = s - 4 * n4;
    int n1 = after4 % 2 + 2 * static_cast<int>(rand_below(rng, 2));
    if (n1 > after4) n1 = after4 % 2;
    const int n2 = (after4 - n1) / 2;

    std::iota(pts.begin(), pts.end(), 1);
    shuffle_vec(rng, pts);
    std::size_t at = 0;
    auto lay_cycles = [&](std::vector<int>& img, int count, int len) {
      for (int c = 0; c < count; ++c) {
        for (int i = 0; i < len; ++i)
          img[static_cast<std::size_t>(pts[at + static_cast<std::size_t>(i)]) - 1] =
              pts[at + static_cast<std::size_t>((i + 1) % len)];
        at += static_cast<std::size_t>(len);
      }
    };
    std::iota(sigma.begin(), sigma.end(), 1);
    lay_cycles(sigma, n4, 4);
    lay_cycles(sigma, n2, 2);

    int fixed = min_tau_fixed + static_cast<int>(rand_below(rng, 3));
    if ((s - fixed) % 2 != 0) ++fixed;
    const int pairs = (s - fixed) / 2;
    if (pairs < 1) continue;
    std::iota(pts.begin(), pts.end(), 1);
    shuffle_vec(rng, pts);
    at = 0;
    std::iota(tau.begin(), tau.end(), 1);
    lay_cycles(tau, pairs, 2);

    for (int p = 1; p <= s; ++p)
      st[static_cast<std::size_t>(p) - 1] =
          tau[static_cast<std::size_t>(sigma[static_cast<std::size_t>(p) - 1]) - 1];

    // Walk the sigma*tau cycles; reject lengths outside {1,2,3,6}.
    std::fill(cid.begin(), cid.end(), 0);
    int cycles = 0;
    bool bad = false;
    std::vector<int> three_cycle_ids;
    for (int start = 1; start <= s && !bad; ++start) {
      if (cid[static_cast<std::size_t>(start) - 1] != 0) continue;
      ++cycles;
      int len = 0;
      int p = start;
      do {
        cid[static_cast<std::size_t>(p) - 1] = cycles;
        ++len;
        p = st[static_cast<std::size_t>(p) - 1];
      } while (p != start);
      if (len != 1 && len != 2 && len != 3 && len != 6) bad = true;
      if (len == 3) three_cycle_ids.push_back(cycles);
    }
    if (bad) continue;
    if (spec.parity_req && (s - cycles) % 2 != *spec.parity_req) continue;

    Permutation sig{std::vector<int>(sigma)}, tu{std::vector<int>(tau)};
    if (!is_transitive({sig, tu}, s)) continue;

    // Ports: one tau-fixed point on each of ports_needed distinct 3-cycles.
    ports.clear();
    for (int id : three_cycle_ids) {
      for (int p = 1; p <= s; ++p)
        if (cid[static_cast<std::size_t>(p) - 1] == id &&
            tau[static_cast<std::size_t>(p) - 1] == p) {
          ports.push_back(p);
          break;
        }
      if (static_cast<int>(ports.size()) == spec.ports_needed) break;
    }
    if (static_cast<int>(ports.size()) < spec.ports_needed) continue;

    return Piece{sigma, tau, ports, cycles, s};
  }
  return std::nullopt;
}

// Splits n - kAnchorSize into middle sizes (even, 12..16) plus one tail
// size (12..25), or nullopt if this draw found none (caller retries).
std::optional<std::vector<int>> plan_sizes(int n, Rng& rng) {
  const int rem = n - kAnchorSize;
  for (int tries = 0; tries < 20; ++tries) {
    // Feasible middle totals M (even, m pieces of 12..16) keep the tail in
    // range: M in [rem - kTailMax, rem - kTailMin].
    std::vector<std::pair<int, int>> options;  // (m, M)
    for (int m = 0; kMidMin * m <= rem - kTailMin; ++m) {
      int lo = std::max(kMidMin * m, rem - kTailMax);
      const int hi = std::min(kMidMax * m, rem - kTailMin);
      if (lo % 2 != 0) ++lo;
      if (lo <= hi) options.push_back({m, lo + 2 * static_cast<int>(rand_below(
                                              rng, static_cast<std::uint64_t>(
                                                       (hi - lo) / 2 + 1)))});
    }
    if (options.empty()) continue;
    const auto [m, total] = options[rand_below(rng, options.size())];
    if (blocked_tail(rem - total)) continue;
    std::vector<int> sizes{kAnchorSize};
    for (int t = 0; t < m; ++t) sizes.push_back(kMidMin);
    int left = total - kMidMin * m;
    while (left > 0) {
      const int t = 1 + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(m)));
      if (sizes[static_cast<std::size_t>(t)] < kMidMax) {
        sizes[static_cast<std::size_t>(t)] += 2;
        left -= 2;
      }
    }
    sizes.push_back(rem - total);
    return sizes;
  }
  return std::nullopt;
}

}  // namespace

std::pair<Permutation, Permutation> assembled_sigma_tau(int n, std::uint64_t seed) {
  if (n < kAnchorSize + kTailMin)
    throw std::invalid_argument("assembled_sigma_tau: n must be >= " +
                                std::to_string(kAnchorSize + kTailMin));
  Rng rng(seed);

  constexpr int kAttempts = 60;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const auto sizes = plan_sizes(n, rng);
    if (!sizes) continue;
    const int k = static_cast<int>(sizes->size());

    std::vector<Piece> pieces{anchor_piece()};
    bool complete = true;
    for (int t = 1; t < k && complete; ++t) {
      PieceSpec spec;
      spec.size = (*sizes)[static_cast<std::size_t>(t)];
      spec.ports_needed = t == k - 1 ? 1 : 2;
      // The end piece keeps a spare tau-fixed point: together with the two
      // the anchor piece retains, the assembled tau fixes >= 3 letters.
      spec.extra_tau_fixed = t == k - 1 ? 1 : 0;
      auto piece = find_piece(spec, rng);
      if (!piece)
        complete = false;
      else
        pieces.push_back(std::move(*piece));
    }
    if (!complete) continue;

    // Each of the k-1 joins flips the parity of sigma*tau once; redraw the
    // far end piece in the opposite parity class if the total comes out even.
    int par = (k - 1) % 2;
    for (const auto& piece : pieces) par = (par + piece.size - piece.cycle_count) % 2;
    if (par == 0) {
      PieceSpec fix;
      const Piece& last = pieces.back();
      fix.size = last.size;
      fix.ports_needed = 1;
      fix.extra_tau_fixed = 1;
      fix.parity_req = (last.size - last.cycle_count + 1) % 2;
      auto redrawn = find_piece(fix, rng);
      if (!redrawn) continue;
      pieces.back() = std::move(*redrawn);
    }

    std::vector<int> offset(static_cast<std::size_t>(k), 0);
    for (int t = 1; t < k; ++t)
      offset[static_cast<std::size_t>(t)] =
          offset[static_cast<std::size_t>(t) - 1] + pieces[static_cast<std::size_t>(t) - 1].size;

    std::vector<int> sigma(static_cast<std::size_t>(n)), tau(static_cast<std::size_t>(n));
    for (int t = 0; t < k; ++t) {
      const auto& piece = pieces[static_cast<std::size_t>(t)];
      const int off = offset[static_cast<std::size_t>(t)];
      for (int p = 1; p <= piece.size; ++p) {
        sigma[static_cast<std::size_t>(off + p) - 1] =
            piece.sigma[static_cast<std::size_t>(p) - 1] + off;
        tau[static_cast<std::size_t>(off + p) - 1] =
            piece.tau[static_cast<std::size_t>(p) - 1] + off;
      }
    }
    // A middle piece's ports are [left, right]; end pieces have one port,
    // where front and back coincide.
    for (int t = 0; t + 1 < k; ++t) {
      const int u = pieces[static_cast<std::size_t>(t)].ports.back() +
                    offset[static_cast<std::size_t>(t)];
      const int v = pieces[static_cast<std::size_t>(t) + 1].ports.front() +
                    offset[static_cast<std::size_t>(t) + 1];
      tau[static_cast<std::size_t>(u) - 1] = v;
      tau[static_cast<std::size_t>(v) - 1] = u;
    }

    Permutation sig{std::move(sigma)}, tu{std::move(tau)};
    if (order(compose(sig, tu)) != 6) continue;
    const ConditionReport report = check_conditions(sig, tu);
    if (!report.all_pass) continue;
    return {std::move(sig), std::move(tu)};
  }
  throw std::runtime_error("assembled_sigma_tau: budget exhausted for n = " +
                           std::to_string(n));
}

std::pair<Permutation, Permutation> structured_sigma_tau(int n, std::uint64_t seed) {
  if (n < 41)
    throw std::invalid_argument("structured_sigma_tau: n must be >= 41");
  return assembled_sigma_tau(n, seed);
}

}  // namespace octagen
