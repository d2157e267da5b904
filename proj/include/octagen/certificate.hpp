#pragma once
// Certified generating pairs. A PairCertificate is an exact, self-contained
// record of a (p,q,r) generating pair of B_n together with the genus value
// it implies and how the generation claim was established. Certificates
// serialize to a line-oriented key-value text format (UTF-8, LF endings, no
// timestamps or host data), so equal seeds reproduce equal bytes and a file
// can be re-verified from scratch years later.

#include <cstdint>
#include <optional>
#include <string>

#include "octagen/conditions.hpp"
#include "octagen/integers.hpp"
#include "octagen/search.hpp"
#include "octagen/signatures.hpp"
#include "octagen/signed_perm.hpp"

namespace octagen {

inline constexpr int kCertificateSchemaVersion = 1;

// How the generation claim was established when the certificate was made:
//   chain        -- stabilizer-chain order computation on <x, y>
//   jordan       -- seven-condition checklist plus Jordan witness on the
//                   projections, with the signed pair in lift shape
//   jordan+chain -- both
// verify_certificate always re-runs the chain regardless of mode; the mode
// records provenance and selects which *additional* checks must pass.
enum class VerificationMode { chain, jordan, jordan_chain };

std::string to_string(VerificationMode mode);
std::optional<VerificationMode> parse_verification_mode(const std::string& text);

struct PairCertificate {
  int schema_version = kCertificateSchemaVersion;
  int n = 0;
  PairSignature signature;  // (p, q, r) with p <= q <= r
  SignedElement x;          // order p; the involution comes first
  SignedElement y;          // order q
  BigInt order;             // |B_n| = n! * 2^n
  BigInt genus;             // 1 + |B_n|/2 * (1 - 1/p - 1/q - 1/r)
  // Present iff mode is jordan or jordan+chain; references the projections
  // sigma = project(y), tau = project(x).
  std::optional<JordanWitness> witness;
  std::uint64_t seed = 0;
  VerificationMode mode = VerificationMode::chain;

  bool operator==(const PairCertificate&) const = default;
};

// Builds the certificate implied by a successful search outcome: element
// orders are recomputed from the pair (never copied from the outcome), the
// group order and genus are evaluated exactly, and when the signature is
// the minimal one for B_n the genus is cross-checked against genus_Bn.
// Throws std::invalid_argument on an outcome whose status is not found or
// whose pair fails the recomputation, std::logic_error on a genus
// cross-check failure. The resulting mode is chain (every search
// chain-certifies before reporting found).
PairCertificate genus_certificate(int n, const SearchOutcome& outcome,
                                  std::uint64_t seed = 0);

// The exact file image (ends with a single LF) and its inverse.
// parse_certificate enforces the canonical key order and value syntax and
// throws std::runtime_error naming the offending line and field.
std::string format_certificate(const PairCertificate& cert);
PairCertificate parse_certificate(const std::string& text);

void save_certificate(const PairCertificate& cert, const std::string& path);
PairCertificate load_certificate(const std::string& path);

// Full independent re-verification. Checks run in a fixed order and the
// first failure is reported by name: schema_version, degree,
// signature_orders_even, order_of_x, order_of_y, order_of_product,
// group_order, genus_arithmetic, genus_minimal_consistency,
// witness_presence, conditions_1_6, jordan_witness, lift_shape (the last
// four only for jordan modes), chain_order.
struct VerifyReport {
  bool ok = false;
  std::string failed_check;  // empty when ok
  std::string detail;        // human-readable elaboration when failed
};

VerifyReport verify_certificate(const PairCertificate& cert);

}  // namespace octagen
