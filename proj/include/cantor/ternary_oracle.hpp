#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace cantor {

// Materializing a digit vector or a power of 3 longer than this many trits
// is refused (BudgetExceededError) instead of exhausting memory.
inline constexpr std::uint64_t kOrderMaterializationCap = 1ull << 27;

// One full repetend of 1/p in base 3. The expansion of 1/p is purely
// periodic for every prime p != 3, and its period equals ord_p(3).
struct TernaryPeriod {
  mpz_class p;
  std::vector<std::uint8_t> digits;  // most significant first
  std::uint64_t period = 0;          // == digits.size()
};

enum class ExclusionStage {
  FailsFirstDigit,   // first non-zero digit of 1/p is 1
  FailsSecondDigit,  // second non-zero digit is 1
  FailsAtDigit,      // n-th non-zero digit is 1, n >= 3
  Passes,            // every non-zero digit is 2
};

// Result of staging p through the interval chain: starting from D = 1,
// each step finds the k with D * 3^k in (2p, 3p) and replaces D by
// D * 3^k - 2p; p passes when D returns to 1 and fails at step n when no
// such k exists. Stage n corresponds exactly to the n-th non-zero digit of
// 1/p being 1 rather than 2.
struct ExclusionVerdict {
  mpz_class p;
  ExclusionStage stage = ExclusionStage::Passes;
  // 1-based index of the offending non-zero digit; 0 when p passes.
  std::uint64_t digit_index = 0;
  // The exponents k confirmed before the verdict; on a pass they sum to
  // ord_p(3).
  std::vector<std::uint64_t> witness_exponents;

  bool passes() const { return stage == ExclusionStage::Passes; }
};

// Digits of one repetend of 1/p. Requires p prime; p = 3 is rejected
// (DivisibleByThreeError), p = 2 yields the single digit 1. Throws
// BudgetExceededError when the period exceeds kOrderMaterializationCap.
TernaryPeriod ternary_digits_of_reciprocal(const mpz_class& p);

// Whether 1/p lies in the middle-thirds Cantor set, i.e. whether the
// repetend avoids the digit 1. Short-circuits at the first 1 seen; never
// materializes the digit vector. By convention p = 3 passes (1/3 = 0.1 =
// 0.0222... has an all-2 expansion) and p = 2 fails (1/2 = 0.111...).
bool is_reciprocal_in_cantor_set(const mpz_class& p);

// Interval-chain staging of p, including witness exponents. Requires p
// prime, p != 3.
ExclusionVerdict exclusion_stage(const mpz_class& p);

// The unique k >= 0 with lo < 3^k < hi, if one exists. Requires
// 0 < lo < hi (BadIntervalError otherwise).
std::optional<std::uint64_t> power_of_3_in_open_interval(const mpz_class& lo,
                                                         const mpz_class& hi);

}  // namespace cantor
