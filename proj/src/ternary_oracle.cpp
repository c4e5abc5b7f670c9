#include "cantor/ternary_oracle.hpp"

#include <cstdint>

#include "cantor/errors.hpp"
#include "validate.hpp"

namespace cantor {
namespace {

using u64 = std::uint64_t;

// 3r must not overflow in the digit loops.
constexpr u64 kDigitFastLimit = u64(1) << 62;
// 2 * 3p must not overflow in the interval chain.
constexpr u64 kChainFastLimit = u64(1) << 61;

[[noreturn]] void throw_period_budget(const mpz_class& p) {
  throw BudgetExceededError("period of 1/" + p.get_str() + " exceeds " +
                            std::to_string(kOrderMaterializationCap) +
                            " trits");
}

}  // namespace

TernaryPeriod ternary_digits_of_reciprocal(const mpz_class& p) {
  require_prime(p, "ternary_digits_of_reciprocal");
  if (p == 3) {
    throw DivisibleByThreeError("1/3 has no purely periodic ternary expansion");
  }

  TernaryPeriod out;
  out.p = p;
  // Long division of 1.000... by p in base 3; the remainder returns to 1
  // after exactly ord_p(3) steps.
  if (mpz_fits_ulong_p(p.get_mpz_t()) &&
      mpz_get_ui(p.get_mpz_t()) < kDigitFastLimit) {
    const u64 m = mpz_get_ui(p.get_mpz_t());
    u64 r = 1;
    do {
      r *= 3;
      out.digits.push_back(static_cast<std::uint8_t>(r / m));
      r %= m;
      if (out.digits.size() > kOrderMaterializationCap) throw_period_budget(p);
    } while (r != 1);
  } else {
    mpz_class r = 1, q;
    do {
      r *= 3;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
      out.digits.push_back(static_cast<std::uint8_t>(mpz_get_ui(q.get_mpz_t())));
      if (out.digits.size() > kOrderMaterializationCap) throw_period_budget(p);
    } while (r != 1);
  }
  out.period = out.digits.size();
  return out;
}

bool is_reciprocal_in_cantor_set(const mpz_class& p) {
  require_prime(p, "is_reciprocal_in_cantor_set");
  // 1/3 = 0.0222...: in the set. 1/2 = 0.111...: not.
  if (p == 3) return true;

  if (mpz_fits_ulong_p(p.get_mpz_t()) &&
      mpz_get_ui(p.get_mpz_t()) < kDigitFastLimit) {
    const u64 m = mpz_get_ui(p.get_mpz_t());
    u64 r = 1, steps = 0;
    do {
      r *= 3;
      if (r / m == 1) return false;
      r %= m;
      if (++steps > kOrderMaterializationCap) throw_period_budget(p);
    } while (r != 1);
    return true;
  }
  mpz_class r = 1, q;
  u64 steps = 0;
  do {
    r *= 3;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
    if (q == 1) return false;
    if (++steps > kOrderMaterializationCap) throw_period_budget(p);
  } while (r != 1);
  return true;
}

std::optional<std::uint64_t> power_of_3_in_open_interval(const mpz_class& lo,
                                                         const mpz_class& hi) {
  if (lo <= 0 || lo >= hi) {
    throw BadIntervalError("power_of_3_in_open_interval: need 0 < lo < hi");
  }
  mpz_class v = 1;
  std::uint64_t k = 0;
  while (v <= lo) {
    v *= 3;
    ++k;
  }
  if (v < hi) return k;
  return std::nullopt;
}

namespace {

ExclusionVerdict verdict_for(const mpz_class& p, std::uint64_t failed_at,
                             std::vector<u64> witnesses) {
  ExclusionVerdict out;
  out.p = p;
  out.witness_exponents = std::move(witnesses);
  if (failed_at == 0) {
    out.stage = ExclusionStage::Passes;
    out.digit_index = 0;
  } else {
    out.digit_index = failed_at;
    out.stage = failed_at == 1   ? ExclusionStage::FailsFirstDigit
                : failed_at == 2 ? ExclusionStage::FailsSecondDigit
                                 : ExclusionStage::FailsAtDigit;
  }
  return out;
}

ExclusionVerdict exclusion_chain_u64(const mpz_class& p_z) {
  const u64 p = mpz_get_ui(p_z.get_mpz_t());
  const u64 lo = 2 * p, hi = 3 * p;
  std::vector<u64> ks;
  u64 d = 1;
  for (u64 step = 1;; ++step) {
    if (step > kOrderMaterializationCap) throw_period_budget(p_z);
    // Smallest power of 3 lifting d past 2p; d < p keeps v below 6p.
    u64 v = d, k = 0;
    while (v <= lo) {
      v *= 3;
      ++k;
    }
    if (v >= hi) return verdict_for(p_z, step, std::move(ks));
    ks.push_back(k);
    d = v - lo;
    if (d == 1) return verdict_for(p_z, 0, std::move(ks));
  }
}

ExclusionVerdict exclusion_chain_mpz(const mpz_class& p) {
  const mpz_class lo = 2 * p, hi = 3 * p;
  std::vector<u64> ks;
  mpz_class d = 1, v;
  for (u64 step = 1;; ++step) {
    if (step > kOrderMaterializationCap) throw_period_budget(p);
    v = d;
    u64 k = 0;
    while (v <= lo) {
      v *= 3;
      ++k;
    }
    if (v >= hi) return verdict_for(p, step, std::move(ks));
    ks.push_back(k);
    d = v - lo;
    if (d == 1) return verdict_for(p, 0, std::move(ks));
  }
}

}  // namespace

ExclusionVerdict exclusion_stage(const mpz_class& p) {
  require_prime(p, "exclusion_stage");
  if (p == 3) {
    throw DivisibleByThreeError("exclusion_stage is undefined for p = 3");
  }
  if (mpz_fits_ulong_p(p.get_mpz_t()) &&
      mpz_get_ui(p.get_mpz_t()) < kChainFastLimit) {
    return exclusion_chain_u64(p);
  }
  return exclusion_chain_mpz(p);
}

}  // namespace cantor
