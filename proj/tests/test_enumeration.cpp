#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "cantor/cyclotomic.hpp"
#include "cantor/enumeration.hpp"
#include "cantor/errors.hpp"
#include "cantor/parallel.hpp"

using namespace cantor;

namespace {

std::vector<std::uint64_t> cantor_values(
    const std::vector<CantorCertificate>& certs) {
  std::vector<std::uint64_t> out;
  for (const auto& c : certs) out.push_back(c.p.get_ui());
  return out;
}

void check_equal_certificates(const std::vector<CantorCertificate>& a,
                              const std::vector<CantorCertificate>& b) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].p == b[i].p);
    CHECK(a[i].is_cantor == b[i].is_cantor);
    CHECK(a[i].small_special == b[i].small_special);
    CHECK(a[i].q == b[i].q);
    CHECK(a[i].K == b[i].K);
    CHECK(a[i].offsets == b[i].offsets);
    CHECK(a[i].form == b[i].form);
    REQUIRE(a[i].exclusion.has_value() == b[i].exclusion.has_value());
    if (a[i].exclusion) {
      CHECK(a[i].exclusion->stage == b[i].exclusion->stage);
      CHECK(a[i].exclusion->digit_index == b[i].exclusion->digit_index);
      CHECK(a[i].exclusion->witness_exponents ==
            b[i].exclusion->witness_exponents);
    }
  }
}

}  // namespace

TEST_CASE("certify fills the full certificate") {
  const CantorCertificate c = certify(mpz_class(757));
  CHECK(c.is_cantor);
  CHECK_FALSE(c.small_special);
  CHECK(c.q == 9);
  CHECK(c.K == 13);
  CHECK(c.offsets == std::vector<std::uint64_t>{2, 1, 0});
  CHECK(c.form == std::pair<std::uint64_t, std::uint64_t>{3, 1});
  REQUIRE(c.exclusion.has_value());
  CHECK(c.exclusion->passes());

  const CantorCertificate miss = certify(mpz_class(5));
  CHECK_FALSE(miss.is_cantor);
  CHECK(miss.q == 4);
  CHECK(miss.K == 8);
  CHECK_FALSE(miss.offsets.has_value());
  CHECK_FALSE(miss.form.has_value());
  REQUIRE(miss.exclusion.has_value());
  CHECK(miss.exclusion->stage == ExclusionStage::FailsFirstDigit);
}

TEST_CASE("certify of the edge primes") {
  const CantorCertificate two = certify(mpz_class(2));
  CHECK_FALSE(two.is_cantor);
  CHECK_FALSE(two.small_special);
  CHECK_FALSE(two.q.has_value());
  CHECK_FALSE(two.K.has_value());
  CHECK_FALSE(two.exclusion.has_value());

  const CantorCertificate three = certify(mpz_class(3));
  CHECK(three.is_cantor);
  CHECK(three.small_special);
  CHECK_FALSE(three.q.has_value());

  CHECK_THROWS_AS(certify(mpz_class(756)), NotPrimeError);
  CHECK_THROWS_AS(certify(mpz_class(0)), NotPrimeError);
  try {
    certify(mpz_class(9841));
  } catch (const NotPrimeError& e) {
    CHECK(e.witness() == "13");
  }
}

TEST_CASE("enumeration ground truth") {
  CHECK(cantor_values(enumerate_cantor_primes(2)).empty());
  CHECK(cantor_values(enumerate_cantor_primes(3)) ==
        std::vector<std::uint64_t>{3});
  CHECK(cantor_values(enumerate_cantor_primes(12)) ==
        std::vector<std::uint64_t>{3});
  CHECK(cantor_values(enumerate_cantor_primes(100000)) ==
        std::vector<std::uint64_t>{3, 13, 757, 1093});
  const auto certs = enumerate_cantor_primes(100000);
  CHECK(certs[0].small_special);
  for (std::size_t i = 1; i < certs.size(); ++i) {
    CHECK_FALSE(certs[i].small_special);
    CHECK(certs[i].form.has_value());
  }
}

TEST_CASE("parallel kernel matches the serial reference") {
  EnumerateOptions opts;
  opts.threads = 4;
  check_equal_certificates(enumerate_cantor_primes(100000, opts),
                           enumerate_cantor_primes_serial(100000));
}

TEST_CASE("thread cap from the environment") {
  setenv("CANTOR_SIEVE_THREADS", "2", 1);
  CHECK(effective_threads(8) == 2);
  CHECK(effective_threads(1) == 1);
  setenv("CANTOR_SIEVE_THREADS", "junk", 1);
  CHECK(effective_threads(3) == 3);
  unsetenv("CANTOR_SIEVE_THREADS");
  CHECK(effective_threads(5) == 5);

  setenv("CANTOR_SIEVE_THREADS", "1", 1);
  check_equal_certificates(enumerate_cantor_primes(20000),
                           enumerate_cantor_primes_serial(20000));
  unsetenv("CANTOR_SIEVE_THREADS");
}

TEST_CASE("stage-1 exclusions up to 50") {
  CHECK(exclusion_report(50, StageFilter::FirstDigit) ==
        std::vector<std::uint64_t>{5, 7, 17, 19, 23, 41, 43, 47});
}

TEST_CASE("stage-2 exclusions up to 1009") {
  // Full second-stage list, confirmed independently against the digit
  // expansion of every prime in range.
  const std::vector<std::uint64_t> expected = {
      11,  31,  37,  97,  101, 103, 113, 277, 281, 283, 293, 307, 311,
      331, 337, 353, 821, 823, 827, 829, 839, 853, 857, 859, 863, 877,
      881, 883, 887, 907, 911, 919, 929, 937, 991, 997, 1009};
  const auto got = exclusion_report(1009, StageFilter::SecondDigit);
  CHECK(got == expected);

  // The eight near-miss examples all sit inside it.
  for (std::uint64_t p : {37u, 113u, 331u, 337u, 353u, 991u, 997u, 1009u}) {
    CHECK(std::find(got.begin(), got.end(), p) != got.end());
  }
}

TEST_CASE("later-stage exclusions") {
  const auto got = exclusion_report(1000, StageFilter::LaterDigit);
  for (std::uint64_t p : {29u, 83u, 89u, 107u, 109u, 251u, 257u, 263u}) {
    CHECK(std::find(got.begin(), got.end(), p) != got.end());
  }
  CHECK(exclusion_stage(mpz_class(29)).digit_index == 3);
  CHECK(exclusion_stage(mpz_class(83)).digit_index == 4);
  CHECK(exclusion_stage(mpz_class(263)).digit_index == 5);
  CHECK(exclusion_stage(mpz_class(313)).digit_index == 5);
}

TEST_CASE("stages partition the primes") {
  const auto first = exclusion_report(2000, StageFilter::FirstDigit);
  const auto second = exclusion_report(2000, StageFilter::SecondDigit);
  const auto later = exclusion_report(2000, StageFilter::LaterDigit);
  std::size_t cantor = 0;
  std::size_t total = 0;
  for (std::uint64_t p : primes_up_to(2000)) {
    if (p <= 3) continue;
    ++total;
    if (exclusion_stage(mpz_class(p)).passes()) ++cantor;
  }
  CHECK(first.size() + second.size() + later.size() + cantor == total);
  CHECK(exclusion_report(4, StageFilter::FirstDigit).empty());
  CHECK(exclusion_report(4, StageFilter::SecondDigit).empty());
  CHECK(exclusion_report(4, StageFilter::LaterDigit).empty());
}
