// Square-part extraction for surd normalization. Small primes go by trial
// division; whatever survives is split with Brent's variant of Pollard rho.

#include <map>
#include <stdexcept>

#include "mensura/exactnum.hpp"

namespace mensura {
namespace {

constexpr unsigned long kTrialLimit = 1UL << 15;

bool is_perfect_square(const BigInt& n) { return mpz_perfect_square_p(n.get_mpz_t()) != 0; }

bool is_probable_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0; }

BigInt rho_factor(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, q = 1, g = 1, ys;
    auto step = [&](const BigInt& v) {
      BigInt r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    unsigned long r = 1;
    constexpr unsigned long m = 128;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          q = q * ::abs(BigInt(x - y));
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        BigInt diff = ::abs(BigInt(x - ys));
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

// n > 1 has no prime factor below kTrialLimit.
void factor_large(const BigInt& n, std::map<BigInt, unsigned>& primes) {
  if (n == 1) return;
  if (is_perfect_square(n)) {
    std::map<BigInt, unsigned> root;
    factor_large(isqrt(n), root);
    for (const auto& [p, e] : root) primes[p] += 2 * e;
    return;
  }
  if (is_probable_prime(n)) {
    ++primes[n];
    return;
  }
  const BigInt d = rho_factor(n);
  factor_large(d, primes);
  factor_large(n / d, primes);
}

}  // namespace

std::pair<BigInt, BigInt> square_part(const BigInt& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("square_part needs a positive integer");
  BigInt rest = n;
  BigInt square = 1;
  BigInt free = 1;

  auto take = [&](unsigned long p) {
    unsigned count = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++count;
    }
    for (unsigned i = 0; i + 1 < count; i += 2) square *= p;
    if (count % 2 == 1) free *= p;
  };

  unsigned long p = 2;
  take(p);
  for (p = 3; p < kTrialLimit; p += 2) {
    // Past the cube root, at most two prime factors remain.
    if (BigInt(p) * p * p > rest) break;
    take(p);
  }
  if (rest == 1) return {square, free};
  if (is_perfect_square(rest)) return {square * isqrt(rest), free};
  if (p >= kTrialLimit && BigInt(p) * p * p <= rest) {
    std::map<BigInt, unsigned> primes;
    factor_large(rest, primes);
    for (const auto& [prime, exponent] : primes) {
      for (unsigned i = 0; i + 1 < exponent; i += 2) square *= prime;
      if (exponent % 2 == 1) free *= prime;
    }
    return {square, free};
  }
  return {square, free * rest};
}

bool is_squarefree(const BigInt& n) { return sgn(n) > 0 && square_part(n).first == 1; }

}  // namespace mensura
