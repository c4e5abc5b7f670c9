#include "cantor/cyclotomic.hpp"

#include <string>
#include <vector>

#include "cantor/base3.hpp"
#include "cantor/errors.hpp"
#include "cantor/primality.hpp"
#include "validate.hpp"

namespace cantor {
namespace {

void require_odd_prime_s(std::uint64_t s, const char* op) {
  if (!is_prime_u64(s)) {
    throw NotPrimeError(std::string(op) + ": s = " + std::to_string(s) +
                        " is not prime");
  }
  if (s == 2) {
    throw BadArgumentError(std::string(op) + ": s must be odd");
  }
}

// (s - 1) * s^j, guarded against u64 overflow and against the budget on
// the value's trit count (s - 1) * s^j + 1. Returns 0 on a blown budget.
std::uint64_t guarded_trits(std::uint64_t s, std::uint64_t j,
                            std::uint64_t budget) {
  if (budget == 0) return 0;
  const std::uint64_t cap = budget - 1;
  unsigned __int128 acc = s - 1;
  for (std::uint64_t i = 0; i < j; ++i) {
    acc *= s;
    if (acc > cap) return 0;
  }
  return acc > cap ? 0 : static_cast<std::uint64_t>(acc);
}

}  // namespace

mpz_class repunit3(std::uint64_t q) {
  mpz_class out = pow3(q) - 1;
  // 3^q - 1 is even.
  out >>= 1;
  return out;
}

RepunitFactorization repunit_split(std::uint64_t r, std::uint64_t s) {
  if (r < 1 || s < 1) throw BadArgumentError("repunit_split requires r, s >= 1");
  RepunitFactorization out;
  out.r = r;
  out.s = s;
  out.repunit_r = repunit3(r);
  out.repunit_rs = repunit3(r * s);
  out.cofactor = 0;
  for (std::uint64_t k = 0; k < s; ++k) out.cofactor += pow3(k * r);
  if (out.repunit_r * out.cofactor != out.repunit_rs) {
    throw Error("repunit_split: product check failed for r = " +
                std::to_string(r) + ", s = " + std::to_string(s));
  }
  return out;
}

mpz_class phi_prime_at(std::uint64_t s, const mpz_class& y) {
  if (!is_prime_u64(s)) {
    throw NotPrimeError("phi_prime_at: s = " + std::to_string(s) +
                        " is not prime");
  }
  if (y < 2) throw BadArgumentError("phi_prime_at requires y >= 2");
  // For prime s the s-th cyclotomic polynomial is 1 + y + ... + y^(s-1).
  mpz_class num;
  mpz_pow_ui(num.get_mpz_t(), y.get_mpz_t(), s);
  num -= 1;
  return num / (y - 1);
}

CyclotomicForm cantor_form_value(std::uint64_t s, std::uint64_t j,
                                 std::uint64_t trit_budget) {
  require_odd_prime_s(s, "cantor_form_value");
  const std::uint64_t trits = guarded_trits(s, j, trit_budget);
  if (trits == 0) {
    throw BudgetExceededError(
        "cantor_form_value: (s-1)*s^j + 1 exceeds the " +
        std::to_string(trit_budget) + "-trit budget for s = " +
        std::to_string(s) + ", j = " + std::to_string(j));
  }
  CyclotomicForm out;
  out.s = s;
  out.j = j;
  const std::uint64_t r = trits / (s - 1);  // s^j
  out.value = phi_prime_at(s, pow3(r));
  out.residue_mod4 = static_cast<unsigned>(mpz_fdiv_ui(out.value.get_mpz_t(), 4));
  return out;
}

unsigned residue_mod4(std::uint64_t s, [[maybe_unused]] std::uint64_t j) {
  require_odd_prime_s(s, "residue_mod4");
  // 3 has order 2 mod 4, so only exponent parities matter. r = s^j is odd
  // for every j, hence term k contributes 3^(k*r mod 2) = 3^(k mod 2).
  const std::uint64_t odd_terms = (s - 1) / 2;   // k odd, contribute 3 each
  const std::uint64_t even_terms = s - odd_terms;  // contribute 1 each
  return static_cast<unsigned>((even_terms + 3 * odd_terms) % 4);
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> find_cantor_form(
    const mpz_class& p) {
  require_prime(p, "find_cantor_form");
  if (p <= 3) {
    throw BadArgumentError("find_cantor_form requires p > 3");
  }
  // A match with parameters (s, j) has exactly (s-1)*s^j + 1 ternary
  // digits, so s - 1 ranges over the divisors of trit_count(p) - 1 and the
  // cofactor must then be a power of s.
  const std::uint64_t m = trit_count(p) - 1;
  if (m == 0) return std::nullopt;
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    divisors.push_back(d);
    if (d != m / d) divisors.push_back(m / d);
  }
  for (std::uint64_t d : divisors) {
    const std::uint64_t s = d + 1;
    if (s == 2 || !is_prime_u64(s)) continue;
    // m / d must be s^j for some j >= 0.
    std::uint64_t rest = m / d, j = 0;
    while (rest % s == 0) {
      rest /= s;
      ++j;
    }
    if (rest != 1) continue;
    const std::uint64_t r = m / d;
    if (phi_prime_at(s, pow3(r)) == p) return std::make_pair(s, j);
  }
  return std::nullopt;
}

bool is_cantor_by_cyclotomic_form(const mpz_class& p) {
  if (!find_cantor_form(p)) return false;
  return mpz_fdiv_ui(p.get_mpz_t(), 4) == 1;
}

}  // namespace cantor
