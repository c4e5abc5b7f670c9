#pragma once

#include <gmpxx.h>

#include <string>

#include "cantor/errors.hpp"
#include "cantor/primality.hpp"

namespace cantor {

// Shared argument guard: throws NotPrimeError unless p is prime (or
// probably prime) under the default testing policy.
inline void require_prime(const mpz_class& p, const char* op) {
  PrimalityVerdict v = is_prime(p);
  if (!v.passed()) {
    throw NotPrimeError(std::string(op) + ": " + p.get_str() + " is not prime",
                        v.witness ? v.witness->get_str() : std::string());
  }
}

}  // namespace cantor
