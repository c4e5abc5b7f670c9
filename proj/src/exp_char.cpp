#include "cantor/exp_char.hpp"

#include <string>

#include "cantor/base3.hpp"
#include "cantor/errors.hpp"
#include "cantor/primality.hpp"
#include "cantor/ternary_oracle.hpp"
#include "validate.hpp"

namespace cantor {
namespace {

using u64 = std::uint64_t;

// 3r + 1 must not overflow in the repunit division loops.
constexpr u64 kStreamFastLimit = u64(1) << 62;

void require_odd_target(const mpz_class& p, const char* op) {
  require_prime(p, op);
  if (p == 3) {
    throw DivisibleByThreeError(std::string(op) + " is undefined for p = 3");
  }
  if (p == 2) {
    throw BadArgumentError(std::string(op) + " requires p > 3");
  }
}

[[noreturn]] void throw_order_budget(const mpz_class& p, const char* op) {
  throw BudgetExceededError(std::string(op) + ": ord_" + p.get_str() +
                            "(3) exceeds the " +
                            std::to_string(kOrderMaterializationCap) +
                            "-trit materialization cap");
}

// K = R_q / p is extracted by long division of the ternary repunit
// 111... by p, most significant digit first. The running remainder is
// R_i mod p, which first returns to 0 exactly at i = ord_p(3), so the
// loop discovers q on its own. Digits land in `digits`; with `decide_only`
// the division aborts unsatisfied at the first digit above 1.
struct RepunitDivision {
  std::string digits;
  u64 q = 0;
  bool satisfied = true;
};

RepunitDivision divide_repunit_u64(u64 p, bool decide_only, const char* op,
                                   const mpz_class& p_z) {
  RepunitDivision out;
  u64 r = 0, steps = 0;
  do {
    r = 3 * r + 1;
    const u64 digit = r / p;
    r %= p;
    ++steps;
    if (digit > 1) {
      out.satisfied = false;
      if (decide_only) return out;
    }
    if (!decide_only) out.digits.push_back(static_cast<char>('0' + digit));
    if (steps > kOrderMaterializationCap) throw_order_budget(p_z, op);
  } while (r != 0);
  out.q = steps;
  return out;
}

RepunitDivision divide_repunit_mpz(const mpz_class& p, bool decide_only,
                                   const char* op) {
  RepunitDivision out;
  mpz_class r = 0, digit;
  u64 steps = 0;
  do {
    r = 3 * r + 1;
    mpz_fdiv_qr(digit.get_mpz_t(), r.get_mpz_t(), r.get_mpz_t(),
                p.get_mpz_t());
    ++steps;
    if (digit > 1) {
      out.satisfied = false;
      if (decide_only) return out;
    }
    if (!decide_only) {
      out.digits.push_back(
          static_cast<char>('0' + mpz_get_ui(digit.get_mpz_t())));
    }
    if (steps > kOrderMaterializationCap) throw_order_budget(p, op);
  } while (r != 0);
  out.q = steps;
  return out;
}

RepunitDivision divide_repunit(const mpz_class& p, bool decide_only,
                               const char* op) {
  if (mpz_fits_ulong_p(p.get_mpz_t()) &&
      mpz_get_ui(p.get_mpz_t()) < kStreamFastLimit) {
    return divide_repunit_u64(mpz_get_ui(p.get_mpz_t()), decide_only, op, p);
  }
  return divide_repunit_mpz(p, decide_only, op);
}

}  // namespace

mpz_class multiplicative_order_of_3(const mpz_class& p) {
  require_prime(p, "multiplicative_order_of_3");
  if (p == 3) {
    throw DivisibleByThreeError("3 is not a unit mod 3");
  }
  if (p == 2) return 1;

  // Start from the group order and strip prime factors while 3^(q/f) stays 1.
  mpz_class q = p - 1;
  const mpz_class three = 3;
  mpz_class e, r;
  for (const auto& [f, mult] : factorize(p - 1)) {
    for (unsigned i = 0; i < mult; ++i) {
      if (!mpz_divisible_p(q.get_mpz_t(), f.get_mpz_t())) break;
      e = q / f;
      mpz_powm(r.get_mpz_t(), three.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
      if (r != 1) break;
      q = e;
    }
  }
  return q;
}

bool is_zero_one_ternary(const mpz_class& k) {
  if (k < 0) throw BadArgumentError("is_zero_one_ternary requires k >= 0");
  const std::string digits = k.get_str(3);
  return digits.find('2') == std::string::npos;
}

ExponentialWitness extract_K(const mpz_class& p) {
  require_odd_target(p, "extract_K");

  const RepunitDivision div = divide_repunit(p, false, "extract_K");
  ExponentialWitness w;
  w.p = p;
  w.q = div.q;
  w.K = mpz_class(div.digits, 3);
  w.satisfied = div.satisfied;
  if (w.satisfied) {
    const u64 top = div.digits.size() - 1;
    for (u64 i = 0; i < div.digits.size(); ++i) {
      if (div.digits[i] == '1') w.offsets.push_back(top - i);
    }
    // K == 1 (mod 3) whenever every digit is 0 or 1, so 3^0 is present.
    if (w.offsets.empty() || w.offsets.back() != 0) {
      throw Error("extract_K: satisfied K lost its unit digit, p = " +
                  p.get_str());
    }
  }
  return w;
}

bool is_cantor_by_exponential_equation(const mpz_class& p) {
  require_odd_target(p, "is_cantor_by_exponential_equation");
  return divide_repunit(p, true, "is_cantor_by_exponential_equation")
      .satisfied;
}

}  // namespace cantor
