#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cantor {

// 3^k.
mpz_class pow3(std::uint64_t k);

// Number of ternary digits of n. Requires n >= 1.
std::uint64_t trit_count(const mpz_class& n);

// Ternary digits of n >= 0, most significant first ("0" for zero).
std::string to_base3(const mpz_class& n);

}  // namespace cantor
