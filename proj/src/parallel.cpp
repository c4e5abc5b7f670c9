#include "cantor/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace cantor {

int effective_threads(int requested) {
  int n = requested > 0 ? requested : omp_get_max_threads();
  if (const char* cap = std::getenv("CANTOR_SIEVE_THREADS")) {
    try {
      int c = std::stoi(cap);
      if (c > 0 && c < n) n = c;
    } catch (...) {
      // Unparseable cap: ignore it.
    }
  }
  return n > 0 ? n : 1;
}

}  // namespace cantor
