#include "octagen/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "octagen/stabchain.hpp"

namespace octagen {

namespace {

std::uint64_t part_contribution(const SignedCyclePart& part) {
  return part.negative ? 2ull * static_cast<std::uint64_t>(part.length)
                       : static_cast<std::uint64_t>(part.length);
}

void enumerate_types(int remaining, int max_key, SignedCycleType& acc,
                     std::vector<SignedCycleType>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  for (int key = std::min(max_key, 2 * remaining); key >= 1; --key) {
    SignedCyclePart part{(key + 1) / 2, key % 2 == 1};
    if (part.length > remaining) continue;
    acc.push_back(part);
    enumerate_types(remaining - part.length, key, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<SignedCycleType> signed_cycle_types(int n) {
  if (n < 1) throw std::invalid_argument("signed_cycle_types: n must be >= 1");
  std::vector<SignedCycleType> out;
  SignedCycleType acc;
  enumerate_types(n, 2 * n, acc, out);
  return out;
}

std::uint64_t order_of_type(const SignedCycleType& type) {
  std::uint64_t m = 1;
  for (const auto& part : type) m = std::lcm(m, part_contribution(part));
  return m;
}

SignedElement class_representative(const SignedCycleType& type, int n) {
  int total = 0;
  for (const auto& part : type) {
    if (part.length < 1) throw std::invalid_argument("class_representative: bad part");
    total += part.length;
  }
  if (total != n)
    throw std::invalid_argument("class_representative: parts do not sum to n");
  std::vector<int> images(static_cast<std::size_t>(n));
  SignBlock signs(n);
  int start = 1;
  for (const auto& part : type) {
    for (int i = 0; i < part.length; ++i)
      images[static_cast<std::size_t>(start + i) - 1] =
          (i + 1 < part.length) ? start + i + 1 : start;
    if (part.negative) signs.set_bit(start, 1);
    start += part.length;
  }
  return SignedElement(Permutation(std::move(images)), std::move(signs));
}

SignedElement random_element_of_order(int n, std::uint64_t m, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random_element_of_order: n must be >= 1");
  if (m < 1) throw std::invalid_argument("random_element_of_order: order must be >= 1");

  std::vector<SignedCyclePart> valid;
  for (int len = 1; len <= n; ++len) {
    if (m % static_cast<std::uint64_t>(len) == 0) valid.push_back({len, false});
    if (m % (2ull * static_cast<std::uint64_t>(len)) == 0) valid.push_back({len, true});
  }
  std::vector<SignedCyclePart> lead;  // parts contributing exactly m
  if (m <= static_cast<std::uint64_t>(n)) lead.push_back({static_cast<int>(m), false});
  if (m % 2 == 0 && m / 2 <= static_cast<std::uint64_t>(n))
    lead.push_back({static_cast<int>(m / 2), true});

  constexpr int kTypeAttempts = 400;
  for (int attempt = 0; attempt < kTypeAttempts; ++attempt) {
    SignedCycleType type;
    int remaining = n;
    // Usually seed the type with a part of full order m, so the lcm check
    // below almost always passes; sometimes build freely to reach orders
    // only obtainable as an lcm of smaller contributions.
    if (!lead.empty() && rand_below(rng, 4) != 0)
      type.push_back(lead[rand_below(rng, lead.size())]);
    for (const auto& part : type) remaining -= part.length;
    while (remaining > 0) {
      std::vector<SignedCyclePart> fits;
      std::uint64_t total_weight = 0;
      for (const auto& part : valid)
        if (part.length <= remaining) {
          fits.push_back(part);
          total_weight += static_cast<std::uint64_t>(part.length) *
                          static_cast<std::uint64_t>(part.length);
        }
      if (fits.empty()) break;
      // Weight by length^2: pairs with large support are far more likely to
      // act transitively, which is where generating pairs live.
      std::uint64_t roll = rand_below(rng, total_weight);
      const SignedCyclePart* pick = &fits.back();
      for (const auto& part : fits) {
        const std::uint64_t w = static_cast<std::uint64_t>(part.length) *
                                static_cast<std::uint64_t>(part.length);
        if (roll < w) {
          pick = &part;
          break;
        }
        roll -= w;
      }
      type.push_back(*pick);
      remaining -= pick->length;
    }
    if (remaining != 0 || order_of_type(type) != m) continue;

    std::vector<int> points(static_cast<std::size_t>(n));
    std::iota(points.begin(), points.end(), 1);
    shuffle_vec(rng, points);
    std::vector<int> images(static_cast<std::size_t>(n));
    SignBlock signs(n);
    std::size_t at = 0;
    for (const auto& part : type) {
      const std::size_t len = static_cast<std::size_t>(part.length);
      int ones = 0;
      for (std::size_t i = 0; i < len; ++i) {
        const int from = points[at + i];
        images[static_cast<std::size_t>(from) - 1] = points[at + (i + 1) % len];
        const int bit = static_cast<int>(rand_below(rng, 2));
        signs.set_bit(from, bit);
        ones += bit;
      }
      if ((ones % 2 != 0) != part.negative) {  // fix the cycle's sign parity
        const int flip_at = points[at + rand_below(rng, len)];
        signs.set_bit(flip_at, 1 - signs.bit(flip_at));
      }
      at += len;
    }
    SignedElement x(Permutation(std::move(images)), std::move(signs));
    if (element_order(x) != m)
      throw std::logic_error("random_element_of_order: order mismatch after layout");
    return x;
  }
  throw std::invalid_argument("random_element_of_order: no element of order " +
                              std::to_string(m) + " found in B_" + std::to_string(n));
}

namespace {

// Streams every element of B_n whose order is `target`, amortizing the cycle
// decomposition over the 2^n sign blocks of each permutation part. The
// visitor returns false to stop the stream. Point masks fit in 32 bits
// because the exhaustive regime caps n at 8.
template <typename Visitor>
void for_each_element_of_order(int n, std::uint64_t target, bool reverse,
                               Visitor&& visit) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  if (reverse) std::reverse(images.begin(), images.end());

  struct CycleInfo {
    std::uint32_t mask;
    std::uint64_t length;
  };
  std::vector<CycleInfo> cycles;
  std::vector<char> seen(static_cast<std::size_t>(n));

  while (true) {
    cycles.clear();
    std::fill(seen.begin(), seen.end(), 0);
    for (int start = 1; start <= n; ++start) {
      if (seen[static_cast<std::size_t>(start) - 1]) continue;
      std::uint32_t mask = 0;
      std::uint64_t len = 0;
      int p = start;
      do {
        seen[static_cast<std::size_t>(p) - 1] = 1;
        mask |= 1u << (p - 1);
        ++len;
        p = images[static_cast<std::size_t>(p) - 1];
      } while (p != start);
      cycles.push_back({mask, len});
    }

    const std::uint32_t mask_end = n >= 32 ? 0xffffffffu : (1u << n);
    for (std::uint32_t step = 0; step < mask_end; ++step) {
      const std::uint32_t mask = reverse ? mask_end - 1 - step : step;
      std::uint64_t ord = 1;
      for (const auto& c : cycles)
        ord = std::lcm(ord, __builtin_parity(mask & c.mask) ? 2 * c.length : c.length);
      if (ord != target) continue;
      SignBlock signs(n);
      for (int k = 1; k <= n; ++k)
        if (mask & (1u << (k - 1))) signs.set_bit(k, 1);
      if (!visit(SignedElement(Permutation(images), std::move(signs)))) return;
    }

    const bool more = reverse ? std::prev_permutation(images.begin(), images.end())
                              : std::next_permutation(images.begin(), images.end());
    if (!more) return;
  }
}

double elapsed_seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Cheap necessary conditions checked before paying for a stabilizer chain:
// generators inside a common index-2 subgroup cannot generate, and neither
// can a pair whose projections act intransitively.
bool passes_pair_prefilters(const SignedElement& x, const SignedElement& y, int n) {
  if (in_even_sign_subgroup(x) && in_even_sign_subgroup(y)) return false;
  if (in_parity_matched_subgroup(x) && in_parity_matched_subgroup(y)) return false;
  return is_transitive({x.perm, y.perm}, n);
}

}  // namespace

SearchOutcome exhaustive_signature_search(int n, const PairSignature& sig,
                                          const ExhaustiveOptions& opts) {
  if (n < 1) throw std::invalid_argument("exhaustive_signature_search: n must be >= 1");
  const int bound = opts.allow_long ? 8 : 6;
  if (n > bound)
    throw std::invalid_argument(
        "exhaustive_signature_search: n = " + std::to_string(n) +
        " exceeds the exhaustive bound " + std::to_string(bound) +
        (opts.allow_long ? "" : " (enable allow_long for n up to 8)"));
  if (sig.p < 1 || sig.q < 1 || sig.r < 1)
    throw std::invalid_argument("exhaustive_signature_search: bad signature");

  const auto t0 = std::chrono::steady_clock::now();
  SearchOutcome out;
  out.stats = {};

  std::vector<SignedElement> xs;
  if (opts.class_reduction) {
    // A conjugate pair generates the same group with the same orders, so x
    // only needs to range over class representatives.
    for (const auto& type : signed_cycle_types(n))
      if (order_of_type(type) == static_cast<std::uint64_t>(sig.p))
        xs.push_back(class_representative(type, n));
  } else {
    for_each_element_of_order(n, static_cast<std::uint64_t>(sig.p), false,
                              [&xs](SignedElement x) {
                                xs.push_back(std::move(x));
                                return true;
                              });
  }
  if (opts.reverse_enumeration) std::reverse(xs.begin(), xs.end());

  for (const auto& x : xs) {
    bool stop = false;
    for_each_element_of_order(
        n, static_cast<std::uint64_t>(sig.q), opts.reverse_enumeration,
        [&](const SignedElement& y) {
          ++out.stats.candidates_tested;
          if (element_order(multiply(x, y)) != static_cast<std::uint64_t>(sig.r))
            return true;
          if (!passes_pair_prefilters(x, y, n)) return true;
          ++out.stats.chains_built;
          if (!is_full_hyperoctahedral({x, y}, n)) return true;
          out.status = SearchStatus::found;
          out.pair = {x, y};
          out.signature = signature_of(x, y);
          stop = true;
          return false;
        });
    if (stop) break;
  }

  if (out.status != SearchStatus::found) out.status = SearchStatus::exhausted_none;
  out.stats.seconds = elapsed_seconds(t0);
  return out;
}

MinimalSearchReport exhaustive_minimal_pair(
    int n, const std::optional<PairSignature>& signature_filter,
    const ExhaustiveOptions& opts) {
  std::vector<PairSignature> sigs;
  if (signature_filter)
    sigs.push_back(*signature_filter);
  else
    sigs = candidate_signatures(n);

  MinimalSearchReport report;
  for (const auto& sig : sigs) {
    SearchOutcome outcome = exhaustive_signature_search(n, sig, opts);
    report.trail.push_back({sig, outcome.status});
    const bool found = outcome.status == SearchStatus::found;
    report.outcome.stats.candidates_tested += outcome.stats.candidates_tested;
    report.outcome.stats.chains_built += outcome.stats.chains_built;
    report.outcome.stats.seconds += outcome.stats.seconds;
    if (found) {
      outcome.stats = report.outcome.stats;
      report.outcome = std::move(outcome);
      return report;
    }
  }
  report.outcome.status = SearchStatus::exhausted_none;
  return report;
}

SearchOutcome randomized_pair_search(int n, const PairSignature& target,
                                     std::uint64_t max_attempts, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("randomized_pair_search: n must be >= 1");
  if (target.p < 1 || target.q < 1 || target.r < 1)
    throw std::invalid_argument("randomized_pair_search: bad signature");

  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(seed);
  SearchOutcome out;

  for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
    SignedElement x, y;
    try {
      x = random_element_of_order(n, static_cast<std::uint64_t>(target.p), rng);
      y = random_element_of_order(n, static_cast<std::uint64_t>(target.q), rng);
    } catch (const std::invalid_argument&) {
      break;  // B_n has no element of a required order; no pair can exist
    }
    ++out.stats.candidates_tested;
    if (element_order(multiply(x, y)) != static_cast<std::uint64_t>(target.r)) continue;
    if (!passes_pair_prefilters(x, y, n)) continue;
    ++out.stats.chains_built;
    if (!is_full_hyperoctahedral({x, y}, n)) continue;
    out.status = SearchStatus::found;
    out.pair = {std::move(x), std::move(y)};
    out.signature = target;
    break;
  }

  if (out.status == SearchStatus::found) out.signature = signature_of(out.pair->first, out.pair->second);
  out.stats.seconds = elapsed_seconds(t0);
  return out;
}

SearchOutcome sign_solved_246_search(int n, std::uint64_t max_shapes, std::uint64_t seed) {
  if (n < 7)
    throw std::invalid_argument(
        "sign_solved_246_search: needs n >= 7 (the sampled skeletons put an "
        "honest 6-cycle in the product)");

  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(seed);
  SearchOutcome out;
  const PairSignature target{2, 4, 6};

  std::vector<int> pts(n), ximg(n), yimg(n), prod(n);
  for (std::uint64_t draw = 0; draw < max_shapes; ++draw) {
    ++out.stats.candidates_tested;

    // Skeleton of x: an involution with (up to parity) 1..3 fixed points.
    // Skeleton of y: a maximal or near-maximal pile of 4-cycles, the rest
    // split into 2-cycles and at most a few fixed points.
    const int xfix = 1 + static_cast<int>(rand_below(rng, 3));
    const int pairs = (n - xfix) / 2;
    std::iota(pts.begin(), pts.end(), 1);
    shuffle_vec(rng, pts);
    std::iota(ximg.begin(), ximg.end(), 1);
    for (int k = 0; k < pairs; ++k) {
      const int a = pts[2 * k], b = pts[2 * k + 1];
      ximg[a - 1] = b;
      ximg[b - 1] = a;
    }
    const int n4 = std::max(1, n / 4 - static_cast<int>(rand_below(rng, 2)));
    const int rest = n - 4 * n4;
    int n1 = rest % 2 + 2 * static_cast<int>(rand_below(rng, 2));
    if (n1 > rest) n1 = rest % 2;
    const int n2 = (rest - n1) / 2;
    std::iota(pts.begin(), pts.end(), 1);
    shuffle_vec(rng, pts);
    std::iota(yimg.begin(), yimg.end(), 1);
    std::size_t at = 0;
    for (int c = 0; c < n4; ++c, at += 4)
      for (int i = 0; i < 4; ++i) yimg[pts[at + i] - 1] = pts[at + (i + 1) % 4];
    for (int c = 0; c < n2; ++c, at += 2)
      for (int i = 0; i < 2; ++i) yimg[pts[at + i] - 1] = pts[at + (i + 1) % 2];

    for (int p = 1; p <= n; ++p) prod[p - 1] = yimg[ximg[p - 1] - 1];

    // Keep the skeleton only if every product cycle length lies in
    // {1, 2, 3, 6} with a 6-cycle present: the sign system below then pins
    // each cycle's order contribution to a divisor of 6, with 6 attained.
    std::vector<int> cyc_id(n, 0), cyc_len;
    int cycles = 0;
    bool bad = false, has6 = false;
    for (int s = 1; s <= n && !bad; ++s) {
      if (cyc_id[s - 1]) continue;
      ++cycles;
      int len = 0, p = s;
      do {
        cyc_id[p - 1] = cycles;
        ++len;
        p = prod[p - 1];
      } while (p != s && len <= 6);
      if (p != s || (len != 1 && len != 2 && len != 3 && len != 6)) {
        bad = true;  // a cycle longer than 6, or one of length 4 or 5
        break;
      }
      cyc_len.push_back(len);
      if (len == 6) has6 = true;
    }
    if (bad || !has6) continue;

    Permutation X{std::vector<int>(ximg)}, Y{std::vector<int>(yimg)};
    if (!is_transitive({X, Y}, n)) continue;

    // Complete the signs exactly. Variables over GF(2): b[1..n] (signs of
    // x) then c[1..n] (signs of y). Equations force every order at once:
    //   - each 2-cycle of X: even b-parity        (else |x| = 4, not 2)
    //   - each 4-cycle of Y: even c-parity        (else |y| = 8, not 4)
    //   - each 6- or 2-cycle of XY: even d-parity (else |xy| = 12 or 4k)
    // where d is the sign block of x*y. Each d bit is a single b bit XOR a
    // single c bit, so the d-parities are linear in (b, c); rather than
    // re-deriving that wiring here, probe multiply() on the 2n basis sign
    // blocks and read the coefficients off the parity deltas.
    const auto d_parities = [&](const SignBlock& b, const SignBlock& c) {
      const SignedElement xe(X, b), ye(Y, c);
      const SignBlock d = multiply(xe, ye).signs;
      std::vector<int> par(cycles, 0);
      for (int p = 1; p <= n; ++p) par[cyc_id[p - 1] - 1] ^= d.bit(p);
      return par;
    };
    std::vector<int> want_rows;
    for (int ci = 0; ci < cycles; ++ci)
      if (cyc_len[ci] == 6 || cyc_len[ci] == 2) want_rows.push_back(ci);

    const int nvar = 2 * n;
    std::vector<std::vector<int>> rows;  // nvar coefficients then the rhs
    const std::vector<int> base = d_parities(SignBlock(n), SignBlock(n));
    for (int ci : want_rows) {
      std::vector<int> row(nvar + 1, 0);
      row[nvar] = base[ci];
      rows.push_back(row);
    }
    for (int v = 0; v < nvar; ++v) {
      SignBlock b(n), c(n);
      if (v < n)
        b.set_bit(v + 1, 1);
      else
        c.set_bit(v - n + 1, 1);
      const std::vector<int> par = d_parities(b, c);
      for (std::size_t r = 0; r < want_rows.size(); ++r)
        rows[r][v] = par[want_rows[r]] ^ base[want_rows[r]];
    }
    for (const auto& cyc : cycle_decomposition(X)) {
      std::vector<int> row(nvar + 1, 0);
      for (int p : cyc) row[p - 1] = 1;
      rows.push_back(row);
    }
    for (const auto& cyc : cycle_decomposition(Y))
      if (cyc.size() == 4) {
        std::vector<int> row(nvar + 1, 0);
        for (int p : cyc) row[n + p - 1] = 1;
        rows.push_back(row);
      }

    // Gaussian elimination over GF(2), recording pivot columns.
    std::vector<int> pivot_of_row;
    std::size_t rank = 0;
    for (int col = 0; col < nvar && rank < rows.size(); ++col) {
      std::size_t sel = rank;
      while (sel < rows.size() && !rows[sel][col]) ++sel;
      if (sel == rows.size()) continue;
      std::swap(rows[rank], rows[sel]);
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (r != rank && rows[r][col])
          for (int k = col; k <= nvar; ++k) rows[r][k] ^= rows[rank][k];
      pivot_of_row.push_back(col);
      ++rank;
    }
    bool inconsistent = false;
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r][nvar]) inconsistent = true;
    if (inconsistent) continue;

    // The solution space is large (>= 2^(n-ish)); sample a few points of
    // it, assigning free variables at random and back-substituting. Each
    // sample already has the right orders by construction; the remaining
    // hurdles are the index-2 dodges and the chain itself.
    std::vector<char> is_pivot(nvar, 0);
    for (int col : pivot_of_row) is_pivot[col] = 1;
    for (int sol = 0; sol < 24; ++sol) {
      std::vector<int> val(nvar, 0);
      for (int v = 0; v < nvar; ++v)
        if (!is_pivot[v]) val[v] = static_cast<int>(rand_below(rng, 2));
      for (std::size_t r = rank; r-- > 0;) {
        int s = rows[r][nvar];
        for (int v = pivot_of_row[r] + 1; v < nvar; ++v)
          if (rows[r][v]) s ^= val[v];
        val[pivot_of_row[r]] = s;
      }
      SignBlock b(n), c(n);
      for (int p = 1; p <= n; ++p) {
        b.set_bit(p, val[p - 1]);
        c.set_bit(p, val[n + p - 1]);
      }
      SignedElement x(X, b), y(Y, c);
      if (element_order(x) != 2 || element_order(y) != 4) continue;
      if (element_order(multiply(x, y)) != 6) continue;
      if (!passes_pair_prefilters(x, y, n)) continue;
      ++out.stats.chains_built;
      if (!is_full_hyperoctahedral({x, y}, n)) continue;
      out.status = SearchStatus::found;
      out.pair = {std::move(x), std::move(y)};
      out.signature = target;
      break;
    }
    if (out.status == SearchStatus::found) break;
  }

  out.stats.seconds = elapsed_seconds(t0);
  return out;
}

}  // namespace octagen
