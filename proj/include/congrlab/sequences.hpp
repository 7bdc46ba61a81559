#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "congrlab/error.hpp"
#include "congrlab/modring.hpp"
#include "congrlab/rational.hpp"
#include "congrlab/ring_traits.hpp"

namespace congrlab {

// s_n = x*s_{n-1} - y*s_{n-2}
template <class T>
struct LucasParams {
  T x;
  T y;
};

template <class T>
struct LucasPair {
  T u;
  T v;
};

template <class T>
struct LucasSequences {
  std::vector<T> u;
  std::vector<T> v;
};

// u_0..u_n and v_0..v_n by iteration.
template <class T>
LucasSequences<T> lucas_sequences(std::uint64_t n, const LucasParams<T>& params) {
  const T& x = params.x;
  LucasSequences<T> out;
  out.u.reserve(n + 1);
  out.v.reserve(n + 1);
  out.u.push_back(zero_like(x));
  out.v.push_back(integer_like(2, x));
  if (n >= 1) {
    out.u.push_back(one_like(x));
    out.v.push_back(x);
  }
  for (std::uint64_t i = 2; i <= n; ++i) {
    out.u.push_back(x * out.u[i - 1] - params.y * out.u[i - 2]);
    out.v.push_back(x * out.v[i - 1] - params.y * out.v[i - 2]);
  }
  return out;
}

template <class T>
LucasPair<T> lucas_pair(std::uint64_t n, const LucasParams<T>& params) {
  const T& x = params.x;
  T u0 = zero_like(x), u1 = one_like(x);
  T v0 = integer_like(2, x), v1 = x;
  for (std::uint64_t i = 0; i < n; ++i) {
    T u2 = x * u1 - params.y * u0;
    T v2 = x * v1 - params.y * v0;
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  return {std::move(u0), std::move(v0)};
}

namespace detail {

// Fast doubling for (U_n, V_n) of parameters (P, Q) modulo an odd M.
inline std::pair<BigInt, BigInt> lucas_uv_mod(const BigInt& n, const BigInt& P, const BigInt& Q, const BigInt& M) {
  auto mod = [&M](BigInt& a) { mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), M.get_mpz_t()); };
  BigInt half = (M + 1) / 2;
  BigInt D = P * P - 4 * Q;
  mod(D);
  BigInt q = Q;
  mod(q);
  BigInt U = 0, V = 2, Qk = 1;
  mod(V);
  for (std::size_t bit = mpz_sizeinbase(n.get_mpz_t(), 2); bit-- > 0;) {
    BigInt U2 = U * V;
    BigInt V2 = V * V - 2 * Qk;
    BigInt Q2 = Qk * Qk;
    mod(U2);
    mod(V2);
    mod(Q2);
    U = std::move(U2);
    V = std::move(V2);
    Qk = std::move(Q2);
    if (mpz_tstbit(n.get_mpz_t(), bit)) {
      BigInt U1 = (P * U + V) * half;
      BigInt V1 = (D * U + P * V) * half;
      BigInt Q1 = Qk * q;
      mod(U1);
      mod(V1);
      mod(Q1);
      U = std::move(U1);
      V = std::move(V1);
      Qk = std::move(Q1);
    }
  }
  if (n == 0) {
    U = 0;
    V = 2;
    mod(V);
  }
  return {U, V};
}

}  // namespace detail

// Fast doubling in Z/p^k; agrees with lucas_pair for any parameters.
inline LucasPair<Residue> lucas_pair_fast(const BigInt& n, const LucasParams<Residue>& params) {
  const PrimePower& ring = params.x.ring();
  if (!(params.y.ring() == ring)) throw Error(ErrorKind::MixedModuli, "lucas parameters in different rings");
  auto [u, v] = detail::lucas_uv_mod(n, params.x.value(), params.y.value(), ring.modulus());
  return {residue(u, ring), residue(v, ring)};
}
inline LucasPair<Residue> lucas_pair_fast(std::uint64_t n, const LucasParams<Residue>& params) {
  return lucas_pair_fast(BigInt(static_cast<unsigned long>(n)), params);
}

// w_{n+1} = 2x*w_n - w_{n-1}, w_0 = 1, w_1 = 1 + 2x.
template <class T>
T w_seq(std::uint64_t n, const T& x) {
  T two_x = integer_like(2, x) * x;
  T a = one_like(x);
  T b = a + two_x;
  for (std::uint64_t i = 0; i < n; ++i) {
    T c = two_x * b - a;
    a = std::move(b);
    b = std::move(c);
  }
  return a;
}

// q_p(a) = (a^{p-1} - 1)/p modulo p^k, computed from a^{p-1} mod p^{k+1}.
inline Residue fermat_quotient(std::int64_t a, std::uint32_t p, int k) {
  PrimePower ring = make_ring(p, k);
  if (a % static_cast<std::int64_t>(p) == 0)
    throw Error(ErrorKind::BaseDivisibleByP, std::to_string(p) + " divides " + std::to_string(a));
  BigInt M = ring.modulus() * static_cast<unsigned long>(p);
  BigInt base = make_bigint(a), e = static_cast<unsigned long>(p - 1), r;
  mpz_fdiv_r(base.get_mpz_t(), base.get_mpz_t(), M.get_mpz_t());
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), M.get_mpz_t());
  r -= 1;
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
  return residue(r, ring);
}

// q_L = (L_p - 1)/p modulo p^k, L_p = v_p(1, -1) by fast doubling mod p^{k+1}.
inline Residue lucas_quotient(std::uint32_t p, int k) {
  PrimePower ring = make_ring(p, k);
  BigInt M = ring.modulus() * static_cast<unsigned long>(p);
  auto [u, v] = detail::lucas_uv_mod(BigInt(static_cast<unsigned long>(p)), BigInt(1), BigInt(-1), M);
  (void)u;
  BigInt r = v - 1;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), M.get_mpz_t());
  if (!mpz_divisible_ui_p(r.get_mpz_t(), p))
    throw Error(ErrorKind::DivisionFailure, "L_p - 1 not divisible by " + std::to_string(p));
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
  return residue(r, ring);
}

// Entry k is C(2k, k), 0 <= k <= upper.
template <class T>
struct BinomTable {
  std::vector<T> values;

  std::size_t upper() const { return values.size() - 1; }
  const T& operator[](std::size_t k) const {
    if (k >= values.size()) throw Error(ErrorKind::IndexOutOfRange, "C(2k,k) for k = " + std::to_string(k));
    return values[k];
  }
};

// C(2k,k) for 0 <= k <= upper via k*C(2k,k) = 2(2k-1)*C(2k-2,k-1).
template <class T>
BinomTable<T> central_binomials_upto(std::uint64_t upper, const T& like) {
  std::vector<std::int64_t> ks;
  ks.reserve(upper);
  for (std::uint64_t k = 1; k <= upper; ++k) ks.push_back(static_cast<std::int64_t>(k));
  auto inv = RingTraits<T>::reciprocals(ks, like);
  BinomTable<T> table;
  table.values.reserve(upper + 1);
  table.values.push_back(one_like(like));
  for (std::uint64_t k = 1; k <= upper; ++k)
    table.values.push_back(table.values.back() * integer_like(static_cast<std::int64_t>(2 * (2 * k - 1)), like) * inv[k - 1]);
  return table;
}

inline BinomTable<Residue> central_binomials(const PrimePower& ring) {
  return central_binomials_upto<Residue>((ring.p() - 1) / 2, residue(0, ring));
}

inline BinomTable<Rational> central_binomials_exact(std::uint32_t p) {
  return central_binomials_upto<Rational>((p - 1) / 2, Rational());
}

}  // namespace congrlab
