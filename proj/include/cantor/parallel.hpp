#pragma once

namespace cantor {

// Number of OpenMP threads a kernel should actually use. `requested` <= 0
// means "all available". The CANTOR_SIEVE_THREADS environment variable, when
// set to a positive integer, caps the result; the result is always >= 1.
int effective_threads(int requested);

}  // namespace cantor
