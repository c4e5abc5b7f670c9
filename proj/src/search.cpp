#include "cantor/search.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <exception>

#include "cantor/base3.hpp"
#include "cantor/errors.hpp"
#include "cantor/parallel.hpp"

namespace cantor {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               t0)
      .count();
}

SearchRecord test_repunit(std::uint64_t s, int mr_rounds) {
  const auto t0 = Clock::now();
  SearchRecord rec;
  rec.s = s;
  rec.j = 0;
  rec.digits3 = s;
  const PrimalityVerdict v = is_prime(repunit3(s), mr_rounds);
  rec.verdict = v.status;
  rec.mr_rounds = v.status == PrimalityStatus::ProbablePrime ? v.rounds : 0;
  rec.elapsed_ms = ms_since(t0);
  return rec;
}

}  // namespace

std::vector<SearchRecord> search_repunit_prime_exponents_serial(
    std::uint64_t max_s, const SearchOptions& opts, const RecordSink& sink) {
  std::vector<SearchRecord> out;
  for (std::uint64_t s : primes_up_to(max_s)) {
    if (s < opts.min_s) continue;
    out.push_back(test_repunit(s, opts.mr_rounds));
    if (sink) sink(out.back());
  }
  return out;
}

std::vector<SearchRecord> search_repunit_prime_exponents(
    std::uint64_t max_s, const SearchOptions& opts, const RecordSink& sink) {
  std::vector<std::uint64_t> exponents;
  for (std::uint64_t s : primes_up_to(max_s)) {
    if (s >= opts.min_s) exponents.push_back(s);
  }
  const int threads = effective_threads(opts.threads);
  std::vector<SearchRecord> out;
  out.reserve(exponents.size());
  std::exception_ptr failure;

  // Chunks keep the sink streaming in ascending order while the chunk
  // body runs parallel.
  constexpr std::size_t kChunk = 32;
  std::vector<SearchRecord> chunk(kChunk);
  for (std::size_t base = 0; base < exponents.size() && !failure;
       base += kChunk) {
    const std::size_t n = std::min(kChunk, exponents.size() - base);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::size_t i = 0; i < n; ++i) {
      try {
        chunk[i] = test_repunit(exponents[base + i], opts.mr_rounds);
      } catch (...) {
#pragma omp critical(cantor_search_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) break;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(chunk[i]);
      if (sink) sink(out.back());
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<SearchRecord> search_deep_forms(std::uint64_t s,
                                            std::uint64_t max_j,
                                            const SearchOptions& opts,
                                            const RecordSink& sink) {
  // Probe the largest candidate first so the whole sweep fails fast when
  // it cannot fit the budget.
  cantor_form_value(s, max_j, opts.trit_budget);

  std::vector<SearchRecord> out;
  for (std::uint64_t j = 0; j <= max_j; ++j) {
    const auto t0 = Clock::now();
    const CyclotomicForm form = cantor_form_value(s, j, opts.trit_budget);
    SearchRecord rec;
    rec.s = s;
    rec.j = j;
    rec.digits3 = trit_count(form.value);

    // Deep candidates are dense in small factors; a long trial-division
    // prefilter is far cheaper than Miller-Rabin at these sizes.
    std::optional<std::uint64_t> factor;
    if (j >= 1) factor = smallest_trial_factor(form.value, 1000000);
    if (factor) {
      rec.verdict = PrimalityStatus::Composite;
      rec.mr_rounds = 0;
    } else {
      const PrimalityVerdict v = is_prime(form.value, opts.mr_rounds);
      rec.verdict = v.status;
      rec.mr_rounds = v.status == PrimalityStatus::ProbablePrime ? v.rounds : 0;
    }
    rec.elapsed_ms = ms_since(t0);
    out.push_back(rec);
    if (sink) sink(out.back());
  }
  return out;
}

const std::vector<std::uint64_t>& known_positive_exponents() {
  static const std::vector<std::uint64_t> known = {
      7,     13,    71,    103,   541,    1091,   1367,  1627, 4177,
      9011,  9551,  36913, 43063, 49681,  57917,  483611, 877843};
  return known;
}

}  // namespace cantor
