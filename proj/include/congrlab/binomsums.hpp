#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "congrlab/error.hpp"
#include "congrlab/harmonic.hpp"
#include "congrlab/modring.hpp"
#include "congrlab/rational.hpp"
#include "congrlab/ring_traits.hpp"
#include "congrlab/sequences.hpp"

namespace congrlab {

enum class SumFamily { S1, S2, S1Weighted, S2Weighted, FibSum, LucSum, VSum, USum };
enum class FibLucas { F, L };
enum class LucasSeq { U, V };

struct SumSpec {
  SumFamily family = SumFamily::S1;
  std::optional<Rational> t;
  int d = 0;
};

namespace detail {

inline void require_d01(int d) {
  if (d != 0 && d != 1) throw Error(ErrorKind::PreconditionViolated, "d must be 0 or 1, got " + std::to_string(d));
}

template <class T>
std::vector<T> odd_reciprocals(std::size_t count, const T& like) {
  return reciprocal_range<T>(count, true, like);
}

}  // namespace detail

// sum_{k=0}^{n-1} C(2k,k) t^k / (2k+1)^{d+1}, n = (p-1)/2 = table.upper().
template <class T>
T s1(const T& t, int d, const BinomTable<T>& table) {
  detail::require_d01(d);
  const std::size_t n = table.upper();
  auto inv = detail::odd_reciprocals(n, t);
  T sum = zero_like(t), tk = one_like(t);
  for (std::size_t k = 0; k < n; ++k) {
    T term = table.values[k] * tk * inv[k];
    if (d == 1) term = term * inv[k];
    sum += term;
    tk = tk * t;
  }
  return sum;
}

// sum_{k=1}^{n} C(2k,k) t^k / k^d.
template <class T>
T s2(const T& t, int d, const BinomTable<T>& table) {
  detail::require_d01(d);
  const std::size_t n = table.upper();
  auto inv = detail::reciprocal_range<T>(n, false, t);
  T sum = zero_like(t), tk = t;
  for (std::size_t k = 1; k <= n; ++k) {
    T term = table.values[k] * tk;
    if (d == 1) term = term * inv[k - 1];
    sum += term;
    tk = tk * t;
  }
  return sum;
}

inline Residue s1(const Rational& t, int d, const PrimePower& ring, const BinomTable<Residue>& table) {
  return s1(rational_residue(t, ring), d, table);
}
inline Residue s2(const Rational& t, int d, const PrimePower& ring, const BinomTable<Residue>& table) {
  return s2(rational_residue(t, ring), d, table);
}

// (sum_{k<n} C(2k,k) t^k Hbar_k(2)/(2k+1), sum_{k<=n} C(2k,k) t^k Hbar_k(2)).
template <class T>
std::pair<T, T> weighted_sums(const T& t, const BinomTable<T>& table) {
  const std::size_t n = table.upper();
  auto hbar = odd_mhs_prefix(n, Composition{2}, t);
  auto inv = detail::odd_reciprocals(n, t);
  T first = zero_like(t), second = zero_like(t), tk = one_like(t);
  for (std::size_t k = 0; k <= n; ++k) {
    T term = table.values[k] * tk * hbar[k];
    if (k < n) first += term * inv[k];
    second += term;
    tk = tk * t;
  }
  return {first, second};
}
inline std::pair<Residue, Residue> weighted_sums(const Rational& t, const PrimePower& ring, const BinomTable<Residue>& table) {
  return weighted_sums(rational_residue(t, ring), table);
}

// sum_{k<n} C(2k,k) X_{2k+1} / ((2k+1) 16^k), X = F or L.
template <class T>
T fib_lucas_sum(FibLucas kind, const BinomTable<T>& table) {
  const T& like = table.values.front();
  const std::size_t n = table.upper();
  auto inv = detail::odd_reciprocals(n, like);
  const T inv16 = rational_like(Rational(1, 16), like);
  // (X_{2k}, X_{2k+1}) advanced two steps at a time.
  T even = kind == FibLucas::F ? zero_like(like) : integer_like(2, like);
  T odd = one_like(like);
  T sum = zero_like(like), scale = one_like(like);
  for (std::size_t k = 0; k < n; ++k) {
    sum += table.values[k] * odd * inv[k] * scale;
    T next_even = even + odd;
    T next_odd = next_even + odd;
    even = std::move(next_even);
    odd = std::move(next_odd);
    scale = scale * inv16;
  }
  return sum;
}
inline Residue fib_lucas_sum(FibLucas kind, const PrimePower& ring, const BinomTable<Residue>& table) {
  if (!(table.values.front().ring() == ring)) throw Error(ErrorKind::MixedModuli, "binomial table built for another ring");
  return fib_lucas_sum(kind, table);
}

// sum_{k=1}^{upper} s_k(c)/k^d with s = u or v at y = 1.
template <class T>
T rhs_lucas_sum(LucasSeq seq, const T& c, int d, std::uint64_t upper) {
  if (d < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  auto inv = detail::reciprocal_range<T>(upper, false, c);
  T prev = seq == LucasSeq::U ? zero_like(c) : integer_like(2, c);
  T cur = seq == LucasSeq::U ? one_like(c) : c;
  T sum = zero_like(c);
  for (std::uint64_t k = 1; k <= upper; ++k) {
    sum += cur * power(inv[k - 1], static_cast<std::uint64_t>(d));
    T next = c * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return sum;
}

// The right-hand Lucas sums are only needed mod p: the result lives in Z/p.
inline Residue rhs_lucas_sums(LucasSeq seq, const Rational& c, int d, const PrimePower& ring) {
  PrimePower base = ring.with_exponent(1);
  return rhs_lucas_sum(seq, rational_residue(c, base), d, ring.p() - 1);
}

inline Residue evaluate(const SumSpec& spec, const PrimePower& ring, const BinomTable<Residue>& table) {
  auto need_t = [&spec]() -> const Rational& {
    if (!spec.t) throw Error(ErrorKind::PreconditionViolated, "sum family needs a parameter t");
    return *spec.t;
  };
  switch (spec.family) {
    case SumFamily::S1: return s1(need_t(), spec.d, ring, table);
    case SumFamily::S2: return s2(need_t(), spec.d, ring, table);
    case SumFamily::S1Weighted: return weighted_sums(need_t(), ring, table).first;
    case SumFamily::S2Weighted: return weighted_sums(need_t(), ring, table).second;
    case SumFamily::FibSum: return fib_lucas_sum(FibLucas::F, ring, table);
    case SumFamily::LucSum: return fib_lucas_sum(FibLucas::L, ring, table);
    case SumFamily::VSum: return rhs_lucas_sums(LucasSeq::V, need_t(), spec.d, ring);
    case SumFamily::USum: return rhs_lucas_sums(LucasSeq::U, need_t(), spec.d, ring);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown sum family");
}

}  // namespace congrlab
