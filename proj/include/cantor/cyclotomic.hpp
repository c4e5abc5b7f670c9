#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>

namespace cantor {

// Default ceiling on the ternary length of a constructed form value.
inline constexpr std::uint64_t kDefaultTritBudget = 300000;

// Phi_s(3^(s^j)) for an odd prime s: the candidate shape of a Cantor prime.
// Its value has exactly (s-1) * s^j + 1 ternary digits.
struct CyclotomicForm {
  std::uint64_t s = 0;
  std::uint64_t j = 0;
  mpz_class value;
  unsigned residue_mod4 = 0;  // == value mod 4
};

// Split of the base-3 repunit R_(r*s) as R_r * (sum of s powers 3^(k*r)).
struct RepunitFactorization {
  std::uint64_t r = 0;
  std::uint64_t s = 0;
  mpz_class repunit_r;   // R_r
  mpz_class cofactor;    // 1 + 3^r + ... + 3^((s-1)*r)
  mpz_class repunit_rs;  // R_(r*s) == repunit_r * cofactor
};

// R_q = (3^q - 1) / 2 = 11...1 (q ones, base 3). R_0 = 0.
mpz_class repunit3(std::uint64_t q);

// The factorization above; requires r, s >= 1.
RepunitFactorization repunit_split(std::uint64_t r, std::uint64_t s);

// Phi_s(y) = (y^s - 1) / (y - 1) for prime s (s = 2 included) and y >= 2.
// Throws NotPrimeError for composite s.
mpz_class phi_prime_at(std::uint64_t s, const mpz_class& y);

// Constructs Phi_s(3^(s^j)) for odd prime s. Throws BudgetExceededError
// when the value would exceed trit_budget ternary digits.
CyclotomicForm cantor_form_value(std::uint64_t s, std::uint64_t j,
                                 std::uint64_t trit_budget = kDefaultTritBudget);

// Phi_s(3^(s^j)) mod 4 for odd prime s, computed from digit parities alone
// (never materializes the value). Always 1 for odd prime s.
unsigned residue_mod4(std::uint64_t s, std::uint64_t j);

// Inverse search: the unique (s, j) with p == Phi_s(3^(s^j)), if any.
// Requires p prime, p > 3. Candidate pairs are read off the ternary length
// of p, so the search touches at most a handful of divisors.
std::optional<std::pair<std::uint64_t, std::uint64_t>> find_cantor_form(
    const mpz_class& p);

// The cyclotomic criterion: p has a form and p == 1 (mod 4).
bool is_cantor_by_cyclotomic_form(const mpz_class& p);

}  // namespace cantor
