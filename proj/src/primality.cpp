#include "cantor/primality.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>

#include "cantor/errors.hpp"

namespace cantor {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) {
  return static_cast<u64>(u128(a) * b % m);
}

u64 powmod_u64(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

// One Miller-Rabin round; n - 1 = d * 2^s with d odd. True means "probably
// prime for this base".
bool mr_round_u64(u64 n, u64 base, u64 d, int s) {
  base %= n;
  if (base == 0) return true;
  u64 x = powmod_u64(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// This base set decides primality for every n < 2^64 (Sinclair's verified
// 12-witness set).
constexpr u64 kU64Witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = primes_up_to(100000);
  return primes;
}

// Bases for the probabilistic path are drawn from a generator seeded only
// by the candidate, so the verdict is a pure function of (n, rounds).
void seed_by_operand(gmp_randclass& rng, const mpz_class& n) {
  unsigned long seed =
      0x9e3779b97f4a7c15UL ^ mpz_fdiv_ui(n.get_mpz_t(), 0xfffffffbUL);
  rng.seed(seed);
}

PrimalityVerdict composite(const mpz_class& n, std::optional<mpz_class> w) {
  PrimalityVerdict v;
  v.n = n;
  v.status = PrimalityStatus::Composite;
  v.witness = std::move(w);
  return v;
}

mpz_class pollard_brent(const mpz_class& n);

// Recursive splitter; results appended unsorted.
void split_into_primes(const mpz_class& n, std::vector<mpz_class>& out) {
  if (n == 1) return;
  if (is_prime(n).passed()) {
    out.push_back(n);
    return;
  }
  mpz_class d = pollard_brent(n);
  split_into_primes(d, out);
  split_into_primes(n / d, out);
}

// Pollard's rho, Brent's cycle-finding variant. Only ever called on odd
// composites with no factor below 10^5.
mpz_class pollard_brent(const mpz_class& n) {
  gmp_randclass rng(gmp_randinit_mt);
  seed_by_operand(rng, n);
  while (true) {
    mpz_class y = rng.get_z_range(n - 3) + 2;
    mpz_class c = rng.get_z_range(n - 2) + 1;
    mpz_class x, q = 1, g = 1, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned long k = 0; k < r && g == 1; k += m) {
        ys = y;
        const unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * (x > y ? x - y : y - x) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      r *= 2;
    }
    if (g == n) {
      // Backtrack one step at a time.
      do {
        ys = (ys * ys + c) % n;
        mpz_class diff = x > ys ? x - ys : ys - x;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
    // Degenerate cycle; retry with fresh parameters.
  }
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {u64(2), u64(3), u64(5), u64(7)}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 w : kU64Witnesses) {
    if (!mr_round_u64(n, w, d, s)) return false;
  }
  return true;
}

PrimalityVerdict is_prime(const mpz_class& n, int mr_rounds) {
  if (mr_rounds < 1) throw BadArgumentError("mr_rounds must be >= 1");
  PrimalityVerdict v;
  v.n = n;
  if (n < 2) return composite(n, std::nullopt);

  if (mpz_fits_ulong_p(n.get_mpz_t())) {
    u64 m = mpz_get_ui(n.get_mpz_t());
    if (is_prime_u64(m)) {
      v.status = PrimalityStatus::Prime;
      return v;
    }
    // Cheap witness for small composites: smallest prime factor when the
    // cached sieve reaches it.
    for (u64 p : small_primes()) {
      if (p * p > m) break;
      if (m % p == 0) return composite(n, mpz_class(p));
    }
    return composite(n, std::nullopt);
  }

  // n >= 2^64: trial division, then Miller-Rabin on seeded random bases.
  for (u64 p : small_primes()) {
    if (mpz_fdiv_ui(n.get_mpz_t(), p) == 0) return composite(n, mpz_class(p));
  }

  mpz_class d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;
  gmp_randclass rng(gmp_randinit_mt);
  seed_by_operand(rng, n);
  mpz_class base, x;
  for (int round = 0; round < mr_rounds; ++round) {
    base = rng.get_z_range(n - 3) + 2;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned long i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) {
      v = composite(n, base);
      v.rounds = round + 1;
      return v;
    }
  }
  v.status = PrimalityStatus::ProbablePrime;
  v.rounds = mr_rounds;
  return v;
}

std::vector<u64> primes_up_to(u64 limit) {
  std::vector<u64> out;
  if (limit < 2) return out;

  // Base primes up to sqrt(limit) by a plain sieve.
  u64 root = 1;
  while ((root + 1) * (root + 1) <= limit) ++root;
  std::vector<bool> base(root + 1, true);
  for (u64 i = 2; i <= root; ++i) {
    if (!base[i]) continue;
    for (u64 j = i * i; j <= root; j += i) base[j] = false;
  }
  std::vector<u64> base_primes;
  for (u64 i = 2; i <= root; ++i) {
    if (base[i]) base_primes.push_back(i);
  }

  constexpr u64 kSegment = 1u << 20;
  std::vector<bool> seg;
  for (u64 lo = 2; lo <= limit; lo += kSegment) {
    const u64 hi = std::min(limit, lo + kSegment - 1);
    seg.assign(hi - lo + 1, true);
    for (u64 p : base_primes) {
      if (p * p > hi) break;
      u64 start = std::max(p * p, (lo + p - 1) / p * p);
      for (u64 j = start; j <= hi; j += p) seg[j - lo] = false;
    }
    for (u64 i = lo; i <= hi; ++i) {
      if (seg[i - lo]) out.push_back(i);
    }
  }
  return out;
}

std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n) {
  if (n < 1) throw BadArgumentError("factorize requires n >= 1");
  mpz_class rest = n;
  std::vector<mpz_class> primes;
  for (u64 p : small_primes()) {
    if (mpz_class(p) * p > rest) break;
    while (mpz_fdiv_ui(rest.get_mpz_t(), p) == 0) {
      primes.push_back(mpz_class(p));
      rest /= p;
    }
  }
  if (rest > 1) split_into_primes(rest, primes);
  std::sort(primes.begin(), primes.end());

  std::vector<std::pair<mpz_class, unsigned>> out;
  for (const mpz_class& p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1u);
    }
  }
  return out;
}

std::optional<u64> smallest_trial_factor(const mpz_class& n, u64 limit) {
  if (n < 2) throw BadArgumentError("smallest_trial_factor requires n >= 2");
  static std::mutex sieve_mutex;
  static std::map<u64, std::vector<u64>> sieves;
  const std::vector<u64>* primes;
  {
    std::lock_guard<std::mutex> lock(sieve_mutex);
    auto it = sieves.find(limit);
    if (it == sieves.end()) it = sieves.emplace(limit, primes_up_to(limit)).first;
    primes = &it->second;
  }
  for (u64 p : *primes) {
    if (mpz_class(p) * p > n) return std::nullopt;
    if (mpz_fdiv_ui(n.get_mpz_t(), p) == 0) return p;
  }
  return std::nullopt;
}

}  // namespace cantor
