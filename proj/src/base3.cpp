#include "cantor/base3.hpp"

#include "cantor/errors.hpp"

namespace cantor {

mpz_class pow3(std::uint64_t k) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 3, k);
  return out;
}

std::uint64_t trit_count(const mpz_class& n) {
  if (n < 1) throw BadArgumentError("trit_count requires n >= 1");
  // mpz_sizeinbase may overestimate by one for non-power-of-2 bases.
  std::uint64_t est = mpz_sizeinbase(n.get_mpz_t(), 3);
  if (est > 1 && n < pow3(est - 1)) --est;
  return est;
}

std::string to_base3(const mpz_class& n) {
  if (n < 0) throw BadArgumentError("to_base3 requires n >= 0");
  return n.get_str(3);
}

}  // namespace cantor
