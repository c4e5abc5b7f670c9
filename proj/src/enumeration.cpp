#include "cantor/enumeration.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <sstream>

#include "cantor/cyclotomic.hpp"
#include "cantor/errors.hpp"
#include "cantor/exp_char.hpp"
#include "cantor/parallel.hpp"
#include "validate.hpp"

namespace cantor {
namespace {

[[noreturn]] void throw_disagreement(const mpz_class& p, bool by_digits,
                                     const ExponentialWitness& w,
                                     bool by_form) {
  std::ostringstream os;
  os << "characterizations disagree for p = " << p
     << ": digit_oracle=" << by_digits << " exponential=" << w.satisfied
     << " cyclotomic=" << by_form << " (q=" << w.q << ", K=" << w.K << ")";
  throw DisagreementError(os.str());
}

CantorCertificate certify_validated(const mpz_class& p) {
  CantorCertificate cert;
  cert.p = p;
  if (p == 2) return cert;
  if (p == 3) {
    cert.is_cantor = true;
    cert.small_special = true;
    return cert;
  }

  const bool by_digits = is_reciprocal_in_cantor_set(p);
  const ExponentialWitness w = extract_K(p);
  const auto form = find_cantor_form(p);
  const bool by_form = form.has_value() && mpz_fdiv_ui(p.get_mpz_t(), 4) == 1;
  if (by_digits != w.satisfied || by_digits != by_form) {
    throw_disagreement(p, by_digits, w, by_form);
  }

  cert.is_cantor = by_digits;
  cert.q = w.q;
  cert.K = w.K;
  if (w.satisfied) cert.offsets = w.offsets;
  cert.form = form;
  cert.exclusion = exclusion_stage(p);
  return cert;
}

// Decision-only path for the enumeration kernels: runs all three
// characterizations but skips witness assembly, so a miss costs O(1)
// expected digit steps instead of O(ord_p(3)). Full certificates are only
// built for the (rare) hits.
bool decide_validated(const mpz_class& p) {
  if (p == 2) return false;
  if (p == 3) return true;
  const bool by_digits = is_reciprocal_in_cantor_set(p);
  const bool by_exponential = is_cantor_by_exponential_equation(p);
  const bool by_form = is_cantor_by_cyclotomic_form(p);
  if (by_digits != by_exponential || by_digits != by_form) {
    throw_disagreement(p, by_digits, extract_K(p), by_form);
  }
  return by_digits;
}

}  // namespace

CantorCertificate certify(const mpz_class& p, int mr_rounds) {
  PrimalityVerdict v = is_prime(p, mr_rounds);
  if (!v.passed()) {
    throw NotPrimeError("certify: " + p.get_str() + " is not prime",
                        v.witness ? v.witness->get_str() : std::string());
  }
  return certify_validated(p);
}

std::vector<CantorCertificate> enumerate_cantor_primes_serial(
    std::uint64_t limit, const EnumerateOptions&) {
  std::vector<CantorCertificate> out;
  for (std::uint64_t p : primes_up_to(limit)) {
    const mpz_class p_z(p);
    if (decide_validated(p_z)) out.push_back(certify_validated(p_z));
  }
  return out;
}

std::vector<CantorCertificate> enumerate_cantor_primes(
    std::uint64_t limit, const EnumerateOptions& opts) {
  const std::vector<std::uint64_t> primes = primes_up_to(limit);
  const int threads = effective_threads(opts.threads);
  std::vector<std::vector<CantorCertificate>> found(threads);
  std::exception_ptr failure;

// Exceptions may not cross the parallel region; the first one is parked
// and rethrown after the join.
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
  for (std::size_t i = 0; i < primes.size(); ++i) {
    try {
      const mpz_class p_z(primes[i]);
      if (decide_validated(p_z)) {
        found[omp_get_thread_num()].push_back(certify_validated(p_z));
      }
    } catch (...) {
#pragma omp critical(cantor_enumeration_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<CantorCertificate> out;
  for (auto& chunk : found) {
    for (auto& cert : chunk) out.push_back(std::move(cert));
  }
  std::sort(out.begin(), out.end(),
            [](const CantorCertificate& a, const CantorCertificate& b) {
              return a.p < b.p;
            });
  return out;
}

std::vector<std::uint64_t> exclusion_report(std::uint64_t limit,
                                            StageFilter stage) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : primes_up_to(limit)) {
    if (p <= 3) continue;
    const ExclusionVerdict v = exclusion_stage(mpz_class(p));
    const bool match = (stage == StageFilter::FirstDigit &&
                        v.stage == ExclusionStage::FailsFirstDigit) ||
                       (stage == StageFilter::SecondDigit &&
                        v.stage == ExclusionStage::FailsSecondDigit) ||
                       (stage == StageFilter::LaterDigit &&
                        v.stage == ExclusionStage::FailsAtDigit);
    if (match) out.push_back(p);
  }
  return out;
}

}  // namespace cantor
