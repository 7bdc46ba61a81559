#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "congrlab/error.hpp"
#include "congrlab/modring.hpp"
#include "congrlab/rational.hpp"

namespace congrlab {

namespace detail {

inline std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) { return powmod64(a % p, p - 2, p); }

inline std::uint64_t reduce_signed(std::int64_t a, std::uint64_t m) {
  std::int64_t r = a % static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

inline std::uint64_t rational_mod_prime(const Rational& x, std::uint32_t p) {
  if (mpz_divisible_ui_p(x.den_ref().get_mpz_t(), p))
    throw Error(ErrorKind::DenominatorDivisibleByP, x.to_string() + " has denominator divisible by " + std::to_string(p));
  std::uint64_t a = mpz_fdiv_ui(x.num_ref().get_mpz_t(), p);
  std::uint64_t b = mpz_fdiv_ui(x.den_ref().get_mpz_t(), p);
  return mulmod64(a, inv_mod_prime(b, p), p);
}

inline void require_odd_prime(std::uint32_t p) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorKind::CompositeModulus, std::to_string(p) + " is not an odd prime");
}

}  // namespace detail

// B_m mod p from S_m = sum_{x<p} x^m, using S_m = p*B_m (mod p^2).
inline Residue bernoulli_powersum(int m, std::uint32_t p) {
  detail::require_odd_prime(p);
  if (m < 2 || m % 2 != 0 || m > static_cast<int>(p) - 3)
    throw Error(ErrorKind::IndexOutOfRange, "powersum method needs even 2 <= m <= p-3, got m = " + std::to_string(m));
  const std::uint64_t p2 = static_cast<std::uint64_t>(p) * p;
  std::uint64_t s = 0;
  for (std::uint64_t x = 1; x < p; ++x) {
    s += detail::powmod64(x, static_cast<std::uint64_t>(m), p2);
    if (s >= p2) s -= p2;
  }
  if (s % p != 0) throw Error(ErrorKind::DivisionFailure, "power sum not divisible by p");
  return residue(static_cast<std::int64_t>(s / p), make_ring(p, 1));
}

struct BernoulliTable {
  std::uint32_t p = 0;
  std::vector<Residue> values;  // B_0 .. B_{p-2} mod p

  const Residue& operator[](std::size_t m) const {
    if (m >= values.size()) throw Error(ErrorKind::IndexOutOfRange, "B_" + std::to_string(m) + " not in table");
    return values[m];
  }
};

// B_n = -1/(n+1) * sum_{j<n} C(n+1, j) B_j over Z/p, binomials by Pascal rows.
inline BernoulliTable bernoulli_table(std::uint32_t p) {
  detail::require_odd_prime(p);
  const std::uint64_t P = p;
  const std::size_t size = p - 1;
  std::vector<std::uint64_t> b(size, 0);
  std::vector<std::uint64_t> row{1, 1};  // C(1, j)
  b[0] = 1;
  for (std::size_t n = 1; n < size; ++n) {
    std::vector<std::uint64_t> next(row.size() + 1, 1);  // row n+1
    for (std::size_t j = 1; j < row.size(); ++j) {
      next[j] = row[j - 1] + row[j];
      if (next[j] >= P) next[j] -= P;
    }
    row = std::move(next);
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) s = (s + detail::mulmod64(row[j], b[j], P)) % P;
    std::uint64_t inv = detail::inv_mod_prime(n + 1, P);
    b[n] = (P - detail::mulmod64(s, inv, P)) % P;
  }
  BernoulliTable table;
  table.p = p;
  PrimePower ring = make_ring(p, 1);
  table.values.reserve(size);
  for (auto v : b) table.values.push_back(residue(static_cast<std::int64_t>(v), ring));
  return table;
}

// B_m for any 0 <= m <= p-2 without building a table.
inline Residue bernoulli_mod_p(int m, std::uint32_t p) {
  detail::require_odd_prime(p);
  if (m < 0 || m > static_cast<int>(p) - 2)
    throw Error(ErrorKind::IndexOutOfRange, "B_" + std::to_string(m) + " is not p-integral for p = " + std::to_string(p));
  PrimePower ring = make_ring(p, 1);
  if (m == 0) return residue(1, ring);
  if (m == 1) return rational_residue(-1, 2, ring);
  if (m % 2) return residue(0, ring);
  return bernoulli_powersum(m, p);
}

// B_m(x) = sum_k C(m,k) B_k x^{m-k} mod p.
inline Residue bernoulli_poly_value(int m, const Rational& x, std::uint32_t p, const BernoulliTable& table) {
  if (table.p != p) throw Error(ErrorKind::MixedModuli, "Bernoulli table built for another prime");
  if (m < 0 || m > static_cast<int>(p) - 2)
    throw Error(ErrorKind::IndexOutOfRange, "B_" + std::to_string(m) + "(x) needs 0 <= m <= p-2");
  const std::uint64_t P = p;
  std::uint64_t xv = detail::rational_mod_prime(x, p);
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= m; ++i) {
    std::vector<std::uint64_t> next(row.size() + 1, 1);
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = (row[j - 1] + row[j]) % P;
    row = std::move(next);
  }
  // Horner in x over k = 0..m with coefficient C(m,k) B_k on x^{m-k}.
  std::uint64_t acc = 0;
  for (int k = 0; k <= m; ++k) {
    std::uint64_t bk = mpz_get_ui(table[static_cast<std::size_t>(k)].value().get_mpz_t());
    acc = (detail::mulmod64(acc, xv, P) + detail::mulmod64(row[static_cast<std::size_t>(k)], bk, P)) % P;
  }
  return residue(static_cast<std::int64_t>(acc), make_ring(p, 1));
}

// E_0..E_limit mod p from sum_{k<=n} C(2n,2k) E_{2k} = 0.
inline std::vector<Residue> euler_numbers(int limit, std::uint32_t p) {
  detail::require_odd_prime(p);
  if (limit < 0 || limit > static_cast<int>(p) - 3)
    throw Error(ErrorKind::IndexOutOfRange, "Euler numbers mod p need 0 <= limit <= p-3");
  const std::uint64_t P = p;
  std::vector<std::uint64_t> e(static_cast<std::size_t>(limit) + 1, 0);
  e[0] = 1;
  std::vector<std::uint64_t> row{1};  // C(m, .)
  for (int m = 1; m <= limit; ++m) {
    std::vector<std::uint64_t> next(row.size() + 1, 1);
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = (row[j - 1] + row[j]) % P;
    row = std::move(next);
    if (m % 2) continue;
    std::uint64_t s = 0;
    for (int k = 0; k < m; k += 2) s = (s + detail::mulmod64(row[static_cast<std::size_t>(k)], e[static_cast<std::size_t>(k)], P)) % P;
    e[static_cast<std::size_t>(m)] = (P - s) % P;
  }
  PrimePower ring = make_ring(p, 1);
  std::vector<Residue> out;
  out.reserve(e.size());
  for (auto v : e) out.push_back(residue(static_cast<std::int64_t>(v), ring));
  return out;
}

// Exact B_0..B_limit (B_1 = -1/2) for small indices.
inline std::vector<Rational> bernoulli_numbers_exact(int limit) {
  std::vector<Rational> b;
  std::vector<BigInt> row{1, 1};
  b.push_back(Rational(1));
  for (int n = 1; n <= limit; ++n) {
    std::vector<BigInt> next(row.size() + 1, BigInt(1));
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
    Rational s;
    for (int j = 0; j < n; ++j) s += Rational(row[static_cast<std::size_t>(j)]) * b[static_cast<std::size_t>(j)];
    b.push_back(-s / Rational(n + 1));
  }
  return b;
}

// Exact E_0..E_limit.
inline std::vector<BigInt> euler_numbers_exact(int limit) {
  std::vector<BigInt> e(static_cast<std::size_t>(limit < 0 ? 0 : limit) + 1, BigInt(0));
  e[0] = 1;
  std::vector<BigInt> row{1};
  for (int m = 1; m <= limit; ++m) {
    std::vector<BigInt> next(row.size() + 1, BigInt(1));
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
    if (m % 2) continue;
    BigInt s = 0;
    for (int k = 0; k < m; k += 2) s += row[static_cast<std::size_t>(k)] * e[static_cast<std::size_t>(k)];
    e[static_cast<std::size_t>(m)] = -s;
  }
  return e;
}

}  // namespace congrlab
