#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace loewy {

// Deterministic 64-bit generator (splitmix64).  Used only where a seeded
// stream of pseudo-random values is wanted, e.g. property-test sampling;
// nothing in the main computation path depends on it.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((__uint128_t)a * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  // deterministic Miller-Rabin for 64-bit with the standard witness set
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

// prime factorization of a 64-bit integer by trial division; fine for the
// group orders and conductors handled here
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  if (n == 0) throw std::invalid_argument("factorize_u64: zero");
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) { n /= p; ++e; }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::uint64_t euler_phi_u64(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto [p, e] : factorize_u64(n)) r = r / p * (p - 1);
  return r;
}

// p-adic valuation of an arbitrary-precision integer
inline unsigned valuation(const mpz_class& n, unsigned long p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  mpz_class q = n, r;
  unsigned v = 0;
  for (;;) {
    mpz_class quo;
    r = q % p;
    if (r != 0) break;
    q /= p;
    ++v;
  }
  return v;
}

inline std::vector<std::uint64_t> prime_divisors(const mpz_class& n) {
  // group orders here factor over small primes; trial division suffices
  std::vector<std::uint64_t> out;
  mpz_class m = abs(n);
  if (m <= 1) return out;
  for (std::uint64_t p = 2; mpz_class(p) * p <= m; p += (p == 2) ? 1 : 2) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      out.push_back(p);
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) m /= p;
    }
  }
  if (m > 1) {
    if (!m.fits_ulong_p()) throw std::runtime_error("prime_divisors: residual factor too large");
    out.push_back(m.get_ui());
  }
  return out;
}

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

} // namespace loewy
