#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cantor {

inline constexpr int kDefaultMrRounds = 64;

enum class PrimalityStatus { Prime, ProbablePrime, Composite };

struct PrimalityVerdict {
  mpz_class n;
  PrimalityStatus status = PrimalityStatus::Composite;
  // Miller-Rabin rounds actually run (0 when the verdict is deterministic).
  int rounds = 0;
  // For Composite: a factor or a Miller-Rabin witness when one was cheap.
  std::optional<mpz_class> witness;

  bool passed() const {
    return status == PrimalityStatus::Prime ||
           status == PrimalityStatus::ProbablePrime;
  }
};

// Primality test. Deterministic (never ProbablePrime) below 2^64; above,
// Miller-Rabin with `mr_rounds` rounds on bases drawn from a generator
// seeded only by n, so verdicts do not depend on call order or threading.
PrimalityVerdict is_prime(const mpz_class& n, int mr_rounds = kDefaultMrRounds);

// Deterministic Miller-Rabin for 64-bit n.
bool is_prime_u64(std::uint64_t n);

// All primes <= limit, ascending (segmented sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// Prime factorization of n >= 1 as (prime, exponent) pairs, primes
// ascending. Trial division first, Pollard-Brent rho for the rest; factors
// above 2^64 are certified only as ProbablePrime internally.
std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n);

// Smallest prime factor of n among primes < limit, if any. Scans primes p
// with p*p <= n only; when the scan proves n prime (no factor and the
// sieve covers sqrt(n)) it returns nullopt like any other miss.
std::optional<std::uint64_t> smallest_trial_factor(const mpz_class& n,
                                                   std::uint64_t limit);

}  // namespace cantor
