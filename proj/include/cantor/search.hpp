#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cantor/cyclotomic.hpp"
#include "cantor/primality.hpp"

namespace cantor {

// Outcome of testing one candidate Phi_s(3^(s^j)). `digits3` is its exact
// ternary length (s-1)*s^j + 1; for j = 0 the candidate is the repunit R_s.
struct SearchRecord {
  std::uint64_t s = 0;
  std::uint64_t j = 0;
  std::uint64_t digits3 = 0;
  PrimalityStatus verdict = PrimalityStatus::Composite;
  int mr_rounds = 0;       // rounds behind a ProbablePrime verdict
  std::int64_t elapsed_ms = 0;
  bool positive() const { return verdict != PrimalityStatus::Composite; }
};

struct SearchOptions {
  int threads = 0;  // <= 0: all available
  int mr_rounds = kDefaultMrRounds;
  std::uint64_t trit_budget = kDefaultTritBudget;
  std::uint64_t min_s = 2;  // resume point for the repunit sweep
};

// Streaming hook: invoked once per record, in output order, as soon as the
// record is final.
using RecordSink = std::function<void(const SearchRecord&)>;

// Tests R_s for primality for every prime s in [min_s, max_s], ascending.
// The OpenMP kernel processes chunks in parallel but emits in order; its
// records match the serial reference exactly (timings aside).
std::vector<SearchRecord> search_repunit_prime_exponents(
    std::uint64_t max_s, const SearchOptions& opts = {},
    const RecordSink& sink = {});

// Single-threaded reference with identical records.
std::vector<SearchRecord> search_repunit_prime_exponents_serial(
    std::uint64_t max_s, const SearchOptions& opts = {},
    const RecordSink& sink = {});

// Tests Phi_s(3^(s^j)) for j = 0..max_j for one odd prime s. Candidates
// with j >= 1 get a trial-division prefilter (primes below 10^6) before
// the probabilistic test. Throws BudgetExceededError if the largest
// candidate would blow the trit budget.
std::vector<SearchRecord> search_deep_forms(std::uint64_t s,
                                            std::uint64_t max_j,
                                            const SearchOptions& opts = {},
                                            const RecordSink& sink = {});

// Exponents s for which R_s is known prime or probable-prime, ascending
// (OEIS A028491 through its 2024 state).
const std::vector<std::uint64_t>& known_positive_exponents();

}  // namespace cantor
