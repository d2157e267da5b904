#include "octagen/construct.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "octagen/conditions.hpp"
#include "octagen/genus.hpp"
#include "octagen/search.hpp"
#include "octagen/stabchain.hpp"
#include "octagen/structured.hpp"

namespace octagen {

namespace {

// Shared certificate assembly for the lifted route, where the mode and
// witness are not the genus_certificate defaults.
PairCertificate make_lifted_certificate(int n, SignedElement x, SignedElement y,
                                        JordanWitness witness,
                                        std::uint64_t seed,
                                        VerificationMode mode) {
  PairCertificate cert;
  cert.n = n;
  cert.signature = signature_of(x, y);
  cert.x = std::move(x);
  cert.y = std::move(y);
  cert.order = hyperoctahedral_order(n);
  cert.genus = rh_upper_bound(cert.order, cert.signature);
  if (cert.signature == minimal_signature(n) && cert.genus != genus_Bn(n))
    throw std::logic_error(
        "construct: minimal-signature genus disagrees with genus_Bn");
  cert.witness = std::move(witness);
  cert.seed = seed;
  cert.mode = mode;
  return cert;
}

PairCertificate lifted_route(int n, std::uint64_t seed,
                             const ConstructOptions& opts) {
  std::pair<Permutation, Permutation> st;
  try {
    st = structured_sigma_tau(n, seed);
  } catch (const std::runtime_error& e) {
    throw BudgetExhausted(std::string("construct_246_pair: ") + e.what());
  }
  const Permutation& sigma = st.first;
  const Permutation& tau = st.second;

  const ConditionReport report = check_conditions(sigma, tau);
  if (!report.all_pass || !report.witness)
    throw std::logic_error(
        "construct_246_pair: assembled pair lost a condition on recheck");

  // lift_pair returns (sigma-lift, tau-lift); certificates list the
  // involution first, so the pair is swapped into (x, y) = (tau^, sigma^).
  auto lifted = lift_pair(sigma, tau, report.chosen_i, report.chosen_j);
  SignedElement x = std::move(lifted.second);
  SignedElement y = std::move(lifted.first);
  if (element_order(x) != 2 || element_order(y) != 4 ||
      element_order(multiply(x, y)) != 6)
    throw std::logic_error("construct_246_pair: lift changed an order");

  const bool chain = n <= 60 || opts.chain_verify_large;
  if (chain && !is_full_hyperoctahedral({x, y}, n))
    throw std::logic_error(
        "construct_246_pair: chain contradicts the witness argument");

  return make_lifted_certificate(
      n, std::move(x), std::move(y), *report.witness, seed,
      chain ? VerificationMode::jordan_chain : VerificationMode::jordan);
}

}  // namespace

PairCertificate construct_246_pair(int n, std::uint64_t seed,
                                   const ConstructOptions& opts) {
  if (n < 3)
    throw std::invalid_argument("construct_246_pair: n must be >= 3");
  if (n == 5 || n == 6 || n == 8)
    throw std::invalid_argument(
        "construct_246_pair: B_" + std::to_string(n) +
        " has no (2,4,6) generating pair; use construct_minimal_pair");

  if (n <= 4) {
    const SearchOutcome outcome = exhaustive_signature_search(n, {2, 4, 6});
    if (outcome.status != SearchStatus::found)
      throw std::logic_error("construct_246_pair: exhaustive search at n = " +
                             std::to_string(n) + " found nothing");
    return genus_certificate(n, outcome, seed);
  }

  if (n <= 40) {
    const SearchOutcome outcome =
        sign_solved_246_search(n, opts.sign_search_budget, seed);
    if (outcome.status != SearchStatus::found)
      throw BudgetExhausted(
          "construct_246_pair: sign-completion search exhausted " +
          std::to_string(opts.sign_search_budget) + " skeleton draws at n = " +
          std::to_string(n) + "; retry with another seed");
    return genus_certificate(n, outcome, seed);
  }

  return lifted_route(n, seed, opts);
}

PairCertificate construct_minimal_pair(int n, std::uint64_t seed,
                                       const ConstructOptions& opts) {
  if (n < 3)
    throw std::invalid_argument("construct_minimal_pair: n must be >= 3");

  if (n == 5 || n == 6) {
    const MinimalSearchReport report = exhaustive_minimal_pair(n);
    if (report.outcome.status != SearchStatus::found)
      throw std::logic_error(
          "construct_minimal_pair: exhaustive trail at n = " +
          std::to_string(n) + " found nothing");
    return genus_certificate(n, report.outcome, seed);
  }

  if (n == 8) {
    const SearchOutcome outcome =
        randomized_pair_search(8, {2, 4, 8}, opts.randomized_budget, seed);
    if (outcome.status != SearchStatus::found)
      throw BudgetExhausted(
          "construct_minimal_pair: randomized (2,4,8) search exhausted " +
          std::to_string(opts.randomized_budget) +
          " attempts at n = 8; retry with another seed");
    return genus_certificate(8, outcome, seed);
  }

  return construct_246_pair(n, seed, opts);
}

}  // namespace octagen
