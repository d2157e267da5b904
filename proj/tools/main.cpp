// Command-line front end: human-readable genus tables, certificate
// construction and re-verification, and minimal-signature searches.
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget
// exhaustion.

#include <cstdint>
#include <exception>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "octagen/certificate.hpp"
#include "octagen/construct.hpp"
#include "octagen/genus.hpp"
#include "octagen/search.hpp"
#include "octagen/signed_perm.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string signature_text(const octagen::PairSignature& sig) {
  std::ostringstream out;
  out << '(' << sig.p << ',' << sig.q << ',' << sig.r << ')';
  return out.str();
}

bool is_exceptional_degree(int n) { return n == 5 || n == 6 || n == 8; }

int cmd_genus_table(int from, int to) {
  if (from < 3 || from > to) {
    std::cerr << "genus-table: need 3 <= --from <= --to (got " << from << ".."
              << to << ")\n";
    return kExitUsage;
  }
  std::cout << std::setw(4) << "n" << std::setw(28) << "|B_n|" << std::setw(12)
            << "signature" << std::setw(28) << "genus" << '\n';
  for (int n = from; n <= to; ++n) {
    const octagen::PairSignature sig = octagen::minimal_signature(n);
    std::cout << std::setw(4) << n << std::setw(28)
              << octagen::hyperoctahedral_order(n).str() << std::setw(12)
              << signature_text(sig) << std::setw(28)
              << octagen::genus_Bn(n).str()
              << (is_exceptional_degree(n) ? "  (exceptional)" : "") << '\n';
  }
  return kExitOk;
}

int cmd_construct(int n, std::uint64_t seed, bool no_chain_verify,
                  const std::string& out_path) {
  octagen::ConstructOptions opts;
  opts.chain_verify_large = !no_chain_verify;
  octagen::PairCertificate cert;
  try {
    cert = octagen::construct_minimal_pair(n, seed, opts);
  } catch (const octagen::BudgetExhausted& e) {
    std::cerr << "construct: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "construct: " << e.what() << '\n';
    return kExitUsage;
  }
  octagen::save_certificate(cert, out_path);
  std::cout << "n: " << cert.n << '\n'
            << "signature: " << signature_text(cert.signature) << '\n'
            << "genus: " << cert.genus.str() << '\n'
            << "verification: " << octagen::to_string(cert.mode) << '\n'
            << "certificate: " << out_path << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& path) {
  octagen::PairCertificate cert;
  try {
    cert = octagen::load_certificate(path);
  } catch (const std::exception& e) {
    std::cerr << "verify: " << e.what() << '\n';
    return kExitVerifyFail;
  }
  const octagen::VerifyReport report = octagen::verify_certificate(cert);
  if (!report.ok) {
    std::cerr << "verify: FAILED check '" << report.failed_check << "': "
              << report.detail << '\n';
    return kExitVerifyFail;
  }
  std::cout << "OK: B_" << cert.n << " pair, signature "
            << signature_text(cert.signature) << ", genus "
            << cert.genus.str() << ", mode " << octagen::to_string(cert.mode)
            << '\n';
  return kExitOk;
}

int cmd_search_min(int n, bool allow_long) {
  const int bound = allow_long ? 8 : 6;
  if (n < 3 || n > bound) {
    std::cerr << "search-min: exhaustive search supports 3 <= n <= 6, or up "
                 "to 8 with --long (got "
              << n << ")\n";
    return kExitUsage;
  }
  octagen::ExhaustiveOptions opts;
  opts.allow_long = allow_long;
  const octagen::MinimalSearchReport report =
      octagen::exhaustive_minimal_pair(n, {}, opts);
  std::cout << "B_" << n << " minimal signature search\n";
  for (const auto& entry : report.trail)
    std::cout << "  " << signature_text(entry.signature) << ": "
              << (entry.status == octagen::SearchStatus::found
                      ? "FOUND"
                      : "none (exhaustive)")
              << '\n';
  if (report.outcome.status != octagen::SearchStatus::found) {
    std::cerr << "search-min: no candidate signature admits a pair\n";
    return kExitVerifyFail;
  }
  const auto& pair = *report.outcome.pair;
  std::cout << "x = " << octagen::format_signed(pair.first) << '\n'
            << "y = " << octagen::format_signed(pair.second) << '\n'
            << "genus: "
            << octagen::rh_upper_bound(octagen::hyperoctahedral_order(n),
                                       *report.outcome.signature)
                   .str()
            << '\n'
            << "candidates: " << report.outcome.stats.candidates_tested
            << ", chains: " << report.outcome.stats.chains_built << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generating pairs and strong symmetric genus of the "
               "hyperoctahedral groups B_n"};
  app.require_subcommand(1);

  int from = 3, to = 10;
  auto* genus_table = app.add_subcommand(
      "genus-table", "Print n, |B_n|, minimal signature, genus");
  genus_table->add_option("--from", from, "first degree")->required();
  genus_table->add_option("--to", to, "last degree")->required();

  int cn = 0;
  std::uint64_t seed = 0;
  bool no_chain_verify = false;
  std::string out_path;
  auto* construct = app.add_subcommand(
      "construct", "Construct and certify a minimal-signature pair");
  construct->add_option("--n", cn, "degree (>= 3)")->required();
  construct->add_option("--seed", seed, "search seed (default 0)");
  construct->add_flag("--no-chain-verify", no_chain_verify,
                      "skip the stabilizer chain when n > 60");
  construct->add_option("--out", out_path,
                        "certificate path (default certificate_n<N>.txt)");

  std::string verify_path;
  auto* verify =
      app.add_subcommand("verify", "Re-verify a certificate file from scratch");
  verify->add_option("path", verify_path, "certificate file")->required();

  int sn = 0;
  bool allow_long = false;
  auto* search_min = app.add_subcommand(
      "search-min", "Exhaustive per-signature search for the minimal pair");
  search_min->add_option("--n", sn, "degree (3..6, or 3..8 with --long)")
      ->required();
  search_min->add_flag("--long", allow_long, "allow hours-scale degrees 7, 8");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (genus_table->parsed()) return cmd_genus_table(from, to);
    if (construct->parsed()) {
      if (out_path.empty())
        out_path = "certificate_n" + std::to_string(cn) + ".txt";
      return cmd_construct(cn, seed, no_chain_verify, out_path);
    }
    if (verify->parsed()) return cmd_verify(verify_path);
    if (search_min->parsed()) return cmd_search_min(sn, allow_long);
  } catch (const std::exception& e) {
    std::cerr << argv[0] << ": " << e.what() << '\n';
    return kExitVerifyFail;
  }
  return kExitUsage;
}
