#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace cantor {

// Decomposition of 3^q - 1 around an odd prime p with q = ord_p(3):
// 2*p*K + 1 = 3^q holds exactly. p passes the exponential criterion when
// every ternary digit of K is 0 or 1, i.e. K = sum of distinct powers 3^d.
struct ExponentialWitness {
  mpz_class p;
  std::uint64_t q = 0;
  mpz_class K;
  // Exponents d with K = sum 3^d, strictly descending; populated only when
  // `satisfied`. The final entry is then always 0 (K == 1 (mod 3)).
  std::vector<std::uint64_t> offsets;
  bool satisfied = false;
};

// ord_p(3): least e >= 1 with 3^e == 1 (mod p). Requires p prime, p != 3;
// ord_2(3) = 1. Computed by factoring p - 1 and descending through the
// divisor lattice.
mpz_class multiplicative_order_of_3(const mpz_class& p);

// Materializes 3^q and extracts K. Requires p prime, p > 3; throws
// BudgetExceededError when q exceeds kOrderMaterializationCap trits.
ExponentialWitness extract_K(const mpz_class& p);

// Whether every ternary digit of k >= 0 is 0 or 1.
bool is_zero_one_ternary(const mpz_class& k);

// The exponential criterion as a predicate. Requires p prime, p > 3.
bool is_cantor_by_exponential_equation(const mpz_class& p);

}  // namespace cantor
