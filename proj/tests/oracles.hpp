#pragma once

// Test-side reference implementations. None of these call into the library's
// algorithms; they use direct definitions only.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <vector>

#include "congrlab/rational.hpp"

namespace oracle {

using congrlab::BigInt;
using congrlab::Rational;

// Inverse of a modulo m by the extended Euclidean algorithm on 64-bit integers.
inline std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = ((a % m) + m) % m, r1 = m, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) return -1;
  return ((s0 % m) + m) % m;
}

inline Rational inv_pow(std::int64_t d, int a) {
  BigInt den = 1;
  for (int i = 0; i < a; ++i) den *= static_cast<long>(d);
  return Rational(BigInt(1), den);
}

// Nested enumeration of sum_{k_1 < ... < k_r} prod 1/den(k_j)^{a_j} with k in [lo, hi].
inline Rational nested(const std::vector<int>& parts, std::int64_t lo, std::int64_t hi,
                       const std::function<std::int64_t(std::int64_t)>& den) {
  std::function<Rational(std::size_t, std::int64_t)> rec = [&](std::size_t depth, std::int64_t start) -> Rational {
    if (depth == parts.size()) return Rational(1);
    Rational acc;
    for (std::int64_t k = start; k <= hi; ++k) acc += inv_pow(den(k), parts[depth]) * rec(depth + 1, k + 1);
    return acc;
  };
  return rec(0, lo);
}

inline Rational brute_mhs(std::int64_t n, const std::vector<int>& parts) {
  return nested(parts, 1, n, [](std::int64_t k) { return k; });
}

inline Rational brute_odd_mhs(std::int64_t n, const std::vector<int>& parts) {
  return nested(parts, 0, n - 1, [](std::int64_t k) { return 2 * k + 1; });
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// Reduces an exact rational with p-free denominator modulo m = p^k.
inline BigInt reduce_mod(const Rational& q, const BigInt& m) {
  BigInt inv, r;
  BigInt den = q.denominator();
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0) return BigInt(-1);
  r = q.numerator() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace oracle
