#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cantor/primality.hpp"
#include "cantor/ternary_oracle.hpp"

namespace cantor {

// Everything the library can say about one prime. The three routes (digit
// oracle, exponential equation, cyclotomic form) are always all run and
// must agree; disagreement raises instead of returning.
struct CantorCertificate {
  mpz_class p;
  bool is_cantor = false;
  // p = 3: in the Cantor set by the digit convention, but outside the
  // scope of the exponential and cyclotomic characterizations.
  bool small_special = false;
  std::optional<std::uint64_t> q;
  std::optional<mpz_class> K;
  std::optional<std::vector<std::uint64_t>> offsets;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> form;  // (s, j)
  std::optional<ExclusionVerdict> exclusion;
};

struct EnumerateOptions {
  int threads = 0;  // <= 0: all available
  int mr_rounds = kDefaultMrRounds;
};

// Full certificate for one prime p (NotPrimeError otherwise). p = 2 and
// p = 3 take the documented special paths; every other prime runs all
// three characterizations plus exclusion staging.
CantorCertificate certify(const mpz_class& p, int mr_rounds = kDefaultMrRounds);

// Certificates of all Cantor primes <= limit, ascending. The OpenMP
// kernel partitions the sieved primes across threads; results are merged
// and sorted, so the output is identical to the serial reference.
std::vector<CantorCertificate> enumerate_cantor_primes(
    std::uint64_t limit, const EnumerateOptions& opts = {});

// Single-threaded reference implementation with identical output.
std::vector<CantorCertificate> enumerate_cantor_primes_serial(
    std::uint64_t limit, const EnumerateOptions& opts = {});

enum class StageFilter { FirstDigit, SecondDigit, LaterDigit };

// Primes p with 3 < p <= limit excluded at the requested stage, ascending.
std::vector<std::uint64_t> exclusion_report(std::uint64_t limit,
                                            StageFilter stage);

}  // namespace cantor
