// Compares the serial reference kernels against the OpenMP ones and checks
// that both produce identical results while timing them.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cantor/enumeration.hpp"
#include "cantor/parallel.hpp"
#include "cantor/search.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void report(const std::string& name, double serial_s, double parallel_s,
            int threads, bool equal) {
  std::cout << name << ": serial " << serial_s << " s, parallel "
            << parallel_s << " s on " << threads << " thread(s), speedup "
            << (parallel_s > 0 ? serial_s / parallel_s : 0.0)
            << (equal ? "" : " RESULTS DIFFER") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kernel benchmark"};
  std::uint64_t limit = 1000000;
  std::uint64_t max_s = 700;
  int threads = 0;
  app.add_option("--limit", limit, "enumeration limit");
  app.add_option("--max-s", max_s, "repunit search exponent bound");
  app.add_option("--threads", threads, "thread count (0 = all)");
  CLI11_PARSE(app, argc, argv);

  const int effective = cantor::effective_threads(threads);

  {
    cantor::EnumerateOptions opts;
    opts.threads = threads;
    auto t0 = std::chrono::steady_clock::now();
    const auto serial = cantor::enumerate_cantor_primes_serial(limit, opts);
    const double serial_s = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto parallel = cantor::enumerate_cantor_primes(limit, opts);
    const double parallel_s = seconds_since(t0);

    bool equal = serial.size() == parallel.size();
    for (std::size_t i = 0; equal && i < serial.size(); ++i) {
      equal = serial[i].p == parallel[i].p &&
              serial[i].is_cantor == parallel[i].is_cantor;
    }
    report("enumerate(" + std::to_string(limit) + ")", serial_s, parallel_s,
           effective, equal);
  }

  {
    cantor::SearchOptions serial_opts;
    serial_opts.threads = 1;
    auto t0 = std::chrono::steady_clock::now();
    const auto serial =
        cantor::search_repunit_prime_exponents_serial(max_s, serial_opts);
    const double serial_s = seconds_since(t0);

    cantor::SearchOptions parallel_opts;
    parallel_opts.threads = threads;
    t0 = std::chrono::steady_clock::now();
    const auto parallel =
        cantor::search_repunit_prime_exponents(max_s, parallel_opts);
    const double parallel_s = seconds_since(t0);

    bool equal = serial.size() == parallel.size();
    for (std::size_t i = 0; equal && i < serial.size(); ++i) {
      equal = serial[i].s == parallel[i].s &&
              serial[i].verdict == parallel[i].verdict;
    }
    report("search-repunit(" + std::to_string(max_s) + ")", serial_s,
           parallel_s, effective, equal);
  }

  return 0;
}
