#include "octagen/certificate.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "octagen/genus.hpp"
#include "octagen/stabchain.hpp"
#include "octagen/words.hpp"

namespace octagen {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("certificate parse error: line " +
                           std::to_string(line_no) + ": " + what);
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::uint64_t parse_u64(const std::string& s, std::size_t line_no,
                        const std::string& field) {
  if (!all_digits(s) || s.size() > 20)
    parse_fail(line_no, "field '" + field + "' is not an unsigned integer");
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    parse_fail(line_no, "field '" + field + "' overflows");
  }
}

int parse_small_int(const std::string& s, std::size_t line_no,
                    const std::string& field) {
  const std::uint64_t v = parse_u64(s, line_no, field);
  if (v > 1000000) parse_fail(line_no, "field '" + field + "' is out of range");
  return static_cast<int>(v);
}

std::vector<std::string> split_spaces(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct KvLine {
  std::string key;
  std::string value;
  std::size_t line_no = 0;
};

std::vector<KvLine> split_kv_lines(const std::string& text) {
  if (text.empty() || text.back() != '\n')
    throw std::runtime_error(
        "certificate parse error: file does not end with a newline "
        "(truncated?)");
  std::vector<KvLine> out;
  std::size_t pos = 0, line_no = 0;
  while (pos < text.size()) {
    ++line_no;
    const std::size_t eol = text.find('\n', pos);
    const std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) parse_fail(line_no, "blank line");
    const std::size_t sep = line.find(": ");
    if (sep == std::string::npos || sep == 0)
      parse_fail(line_no, "expected 'key: value'");
    out.push_back({line.substr(0, sep), line.substr(sep + 2), line_no});
  }
  return out;
}

// Pulls the next line, requiring the given key.
const KvLine& expect_key(const std::vector<KvLine>& lines, std::size_t& at,
                         const std::string& key) {
  if (at >= lines.size())
    throw std::runtime_error("certificate parse error: line " +
                             std::to_string(lines.size() + 1) +
                             ": missing field '" + key + "'");
  if (lines[at].key != key)
    parse_fail(lines[at].line_no,
               "expected field '" + key + "', found '" + lines[at].key + "'");
  return lines[at++];
}

BigInt parse_bigint(const KvLine& line) {
  if (!all_digits(line.value))
    parse_fail(line.line_no,
               "field '" + line.key + "' is not a decimal integer");
  return BigInt(line.value);
}

SignedElement parse_generator(const KvLine& line, int n) {
  SignedElement g;
  try {
    g = parse_signed(line.value);
  } catch (const std::exception& e) {
    parse_fail(line.line_no, "field '" + line.key + "': " + e.what());
  }
  if (g.perm.degree() != n)
    parse_fail(line.line_no, "field '" + line.key + "' has degree " +
                                 std::to_string(g.perm.degree()) +
                                 ", expected n = " + std::to_string(n));
  return g;
}

}  // namespace

std::string to_string(VerificationMode mode) {
  switch (mode) {
    case VerificationMode::chain:
      return "chain";
    case VerificationMode::jordan:
      return "jordan";
    case VerificationMode::jordan_chain:
      return "jordan+chain";
  }
  throw std::logic_error("to_string: bad VerificationMode");
}

std::optional<VerificationMode> parse_verification_mode(const std::string& text) {
  if (text == "chain") return VerificationMode::chain;
  if (text == "jordan") return VerificationMode::jordan;
  if (text == "jordan+chain") return VerificationMode::jordan_chain;
  return std::nullopt;
}

PairCertificate genus_certificate(int n, const SearchOutcome& outcome,
                                  std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("genus_certificate: n must be >= 3");
  if (outcome.status != SearchStatus::found || !outcome.pair ||
      !outcome.signature)
    throw std::invalid_argument(
        "genus_certificate: outcome is not a certified find");
  const SignedElement& x = outcome.pair->first;
  const SignedElement& y = outcome.pair->second;
  if (x.perm.degree() != n || y.perm.degree() != n)
    throw std::invalid_argument(
        "genus_certificate: pair degree does not match n");
  const PairSignature sig = *outcome.signature;
  if (element_order(x) != static_cast<std::uint64_t>(sig.p) ||
      element_order(y) != static_cast<std::uint64_t>(sig.q) ||
      element_order(multiply(x, y)) != static_cast<std::uint64_t>(sig.r))
    throw std::invalid_argument(
        "genus_certificate: recomputed orders disagree with the signature");

  PairCertificate cert;
  cert.n = n;
  cert.signature = sig;
  cert.x = x;
  cert.y = y;
  cert.order = hyperoctahedral_order(n);
  cert.genus = rh_upper_bound(cert.order, sig);
  if (sig == minimal_signature(n) && cert.genus != genus_Bn(n))
    throw std::logic_error(
        "genus_certificate: minimal-signature genus disagrees with genus_Bn");
  cert.seed = seed;
  cert.mode = VerificationMode::chain;
  return cert;
}

std::string format_certificate(const PairCertificate& cert) {
  std::ostringstream out;
  out << "schema_version: " << cert.schema_version << '\n';
  out << "n: " << cert.n << '\n';
  out << "signature: " << cert.signature.p << ' ' << cert.signature.q << ' '
      << cert.signature.r << '\n';
  out << "generator_x: " << format_signed(cert.x) << '\n';
  out << "generator_y: " << format_signed(cert.y) << '\n';
  out << "order: " << cert.order.str() << '\n';
  out << "genus: " << cert.genus.str() << '\n';
  if (cert.witness) {
    out << "jordan_word: " << format_word(cert.witness->word) << '\n';
    out << "jordan_power: " << cert.witness->power << '\n';
    out << "jordan_prime: " << cert.witness->prime_p << '\n';
    out << "jordan_cycle:";
    for (int p : cert.witness->cycle) out << ' ' << p;
    out << '\n';
    out << "jordan_anchor_a: " << cert.witness->anchor_a << '\n';
    out << "jordan_anchor_b: " << cert.witness->anchor_b << '\n';
  }
  out << "seed: " << cert.seed << '\n';
  out << "verification_mode: " << to_string(cert.mode) << '\n';
  return out.str();
}

PairCertificate parse_certificate(const std::string& text) {
  const std::vector<KvLine> lines = split_kv_lines(text);
  std::size_t at = 0;
  PairCertificate cert;

  {
    const KvLine& l = expect_key(lines, at, "schema_version");
    cert.schema_version = parse_small_int(l.value, l.line_no, l.key);
    if (cert.schema_version != kCertificateSchemaVersion)
      parse_fail(l.line_no, "unsupported schema_version " + l.value);
  }
  {
    const KvLine& l = expect_key(lines, at, "n");
    cert.n = parse_small_int(l.value, l.line_no, l.key);
    if (cert.n < 1) parse_fail(l.line_no, "n must be positive");
  }
  {
    const KvLine& l = expect_key(lines, at, "signature");
    const std::vector<std::string> parts = split_spaces(l.value);
    if (parts.size() != 3)
      parse_fail(l.line_no, "signature needs exactly three integers");
    cert.signature.p = parse_small_int(parts[0], l.line_no, l.key);
    cert.signature.q = parse_small_int(parts[1], l.line_no, l.key);
    cert.signature.r = parse_small_int(parts[2], l.line_no, l.key);
  }
  cert.x = parse_generator(expect_key(lines, at, "generator_x"), cert.n);
  cert.y = parse_generator(expect_key(lines, at, "generator_y"), cert.n);
  cert.order = parse_bigint(expect_key(lines, at, "order"));
  cert.genus = parse_bigint(expect_key(lines, at, "genus"));

  if (at < lines.size() && lines[at].key == "jordan_word") {
    JordanWitness w;
    {
      const KvLine& l = expect_key(lines, at, "jordan_word");
      try {
        w.word = parse_word(l.value);
      } catch (const std::exception& e) {
        parse_fail(l.line_no, std::string("field 'jordan_word': ") + e.what());
      }
    }
    {
      const KvLine& l = expect_key(lines, at, "jordan_power");
      w.power = parse_u64(l.value, l.line_no, l.key);
    }
    {
      const KvLine& l = expect_key(lines, at, "jordan_prime");
      w.prime_p = parse_small_int(l.value, l.line_no, l.key);
    }
    {
      const KvLine& l = expect_key(lines, at, "jordan_cycle");
      for (const std::string& tok : split_spaces(l.value))
        w.cycle.push_back(parse_small_int(tok, l.line_no, l.key));
      if (w.cycle.empty()) parse_fail(l.line_no, "jordan_cycle is empty");
    }
    {
      const KvLine& l = expect_key(lines, at, "jordan_anchor_a");
      w.anchor_a = parse_small_int(l.value, l.line_no, l.key);
    }
    {
      const KvLine& l = expect_key(lines, at, "jordan_anchor_b");
      w.anchor_b = parse_small_int(l.value, l.line_no, l.key);
    }
    cert.witness = std::move(w);
  }

  {
    const KvLine& l = expect_key(lines, at, "seed");
    cert.seed = parse_u64(l.value, l.line_no, l.key);
  }
  {
    const KvLine& l = expect_key(lines, at, "verification_mode");
    const auto mode = parse_verification_mode(l.value);
    if (!mode) parse_fail(l.line_no, "unknown verification_mode '" + l.value + "'");
    cert.mode = *mode;
  }
  if (at != lines.size())
    parse_fail(lines[at].line_no, "unexpected trailing field '" + lines[at].key + "'");
  return cert;
}

void save_certificate(const PairCertificate& cert, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  const std::string text = format_certificate(cert);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

PairCertificate load_certificate(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_certificate(buf.str());
}

VerifyReport verify_certificate(const PairCertificate& cert) {
  const auto fail = [](const std::string& check, const std::string& detail) {
    return VerifyReport{false, check, detail};
  };

  if (cert.schema_version != kCertificateSchemaVersion)
    return fail("schema_version",
                "unsupported version " + std::to_string(cert.schema_version));

  const int n = cert.n;
  if (n < 3 || cert.x.perm.degree() != n || cert.y.perm.degree() != n)
    return fail("degree", "generators must act on n >= 3 points, n = " +
                              std::to_string(n));

  const PairSignature sig = cert.signature;
  if (sig.p % 2 || sig.q % 2 || sig.r % 2)
    return fail("signature_orders_even",
                "a generating pair of a hyperoctahedral group has all three "
                "orders even");

  if (element_order(cert.x) != static_cast<std::uint64_t>(sig.p))
    return fail("order_of_x", "recomputed order " +
                                  std::to_string(element_order(cert.x)) +
                                  " != " + std::to_string(sig.p));
  if (element_order(cert.y) != static_cast<std::uint64_t>(sig.q))
    return fail("order_of_y", "recomputed order " +
                                  std::to_string(element_order(cert.y)) +
                                  " != " + std::to_string(sig.q));
  const std::uint64_t r = element_order(multiply(cert.x, cert.y));
  if (r != static_cast<std::uint64_t>(sig.r))
    return fail("order_of_product",
                "recomputed order " + std::to_string(r) +
                    " != " + std::to_string(sig.r));

  if (cert.order != hyperoctahedral_order(n))
    return fail("group_order", "order field is not n! * 2^n for n = " +
                                   std::to_string(n));

  try {
    if (cert.genus != rh_upper_bound(cert.order, sig))
      return fail("genus_arithmetic",
                  "genus field disagrees with 1 + |G|/2 (1 - 1/p - 1/q - 1/r)");
  } catch (const std::exception& e) {
    return fail("genus_arithmetic", e.what());
  }
  if (sig == minimal_signature(n) && cert.genus != genus_Bn(n))
    return fail("genus_minimal_consistency",
                "minimal-signature genus disagrees with genus_Bn");

  if ((cert.mode == VerificationMode::chain) == cert.witness.has_value())
    return fail("witness_presence",
                "a Jordan witness must be recorded exactly for the jordan "
                "verification modes");

  if (cert.witness) {
    const Permutation sigma = project(cert.y);
    const Permutation tau = project(cert.x);
    // Re-evaluate conditions (1)-(6) directly; the recorded witness stands
    // in for the search behind condition (7).
    const ConditionReport rep =
        check_conditions(sigma, tau, WitnessBudget{0, 0, 0});
    const auto condition = [&](bool held, const std::string& name)
        -> std::optional<VerifyReport> {
      if (held) return std::nullopt;
      return fail("conditions_1_6", "condition " + name + " failed");
    };
    for (const auto& bad :
         {condition(rep.orders_are_4_2, "(1) |sigma| = 4, |tau| = 2"),
          condition(rep.sigma_fixes_a_point, "(2) sigma fixes a point"),
          condition(rep.tau_fixes_three_points, "(3) tau fixes >= 3 points"),
          condition(rep.product_is_odd, "(4) sigma tau is odd"),
          condition(rep.fixed_points_share_cycle,
                    "(5) fixed points share a product cycle"),
          condition(rep.transitive, "(6) transitive")})
      if (bad) return *bad;

    if (!verify_jordan(sigma, tau, *cert.witness))
      return fail("jordan_witness",
                  "the recorded witness does not re-verify against the "
                  "projections");

    const auto lifted = lift_pair(sigma, tau, rep.chosen_i, rep.chosen_j);
    if (!(lifted.first == cert.y) || !(lifted.second == cert.x))
      return fail("lift_shape",
                  "the signed generators are not the canonical lift at i = " +
                      std::to_string(rep.chosen_i) +
                      ", j = " + std::to_string(rep.chosen_j));
  }

  if (!is_full_hyperoctahedral({cert.x, cert.y}, n))
    return fail("chain_order",
                "<x, y> has smaller order than B_" + std::to_string(n));

  return VerifyReport{true, "", ""};
}

}  // namespace octagen
