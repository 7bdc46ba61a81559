#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>

#include "congrlab/error.hpp"
#include "congrlab/rational.hpp"

namespace congrlab {

inline constexpr int kMaxExponent = 8;

namespace detail {

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, b, m);
    b = mulmod64(b, b, m);
    e >>= 1;
  }
  return r;
}

struct PowerTable {
  std::uint32_t p = 0;
  std::array<BigInt, kMaxExponent + 1> pow;
};

}  // namespace detail

// Deterministic Miller-Rabin; the bases {2, 7, 61} are exact below 4759123141.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2u, 3u, 5u, 7u, 11u, 13u, 61u}) {
    if (n == small) return true;
    if (n % small == 0) return false;
  }
  if (n >= 4759123141ULL) throw Error(ErrorKind::InvalidArgument, "primality test limited to n < 4759123141");
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint64_t a : {2u, 7u, 61u}) {
    std::uint64_t x = detail::powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mulmod64(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

class PrimePower {
 public:
  std::uint32_t p() const { return table_->p; }
  int k() const { return k_; }
  const BigInt& modulus() const { return table_->pow[k_]; }
  const BigInt& power(int j) const {
    if (j < 0 || j > kMaxExponent) throw Error(ErrorKind::ExponentOutOfRange, "p^" + std::to_string(j));
    return table_->pow[j];
  }

  // Same prime, different exponent, no repeated primality test.
  PrimePower with_exponent(int j) const {
    if (j < 1 || j > kMaxExponent)
      throw Error(ErrorKind::ExponentOutOfRange, "exponent " + std::to_string(j) + " outside 1..8");
    return PrimePower(table_, j);
  }

  friend bool operator==(const PrimePower& a, const PrimePower& b) {
    return a.k_ == b.k_ && (a.table_ == b.table_ || a.table_->p == b.table_->p);
  }

  std::string to_string() const {
    return std::to_string(p()) + "^" + std::to_string(k_);
  }

 private:
  friend PrimePower make_ring(std::int64_t p, int k);
  PrimePower(std::shared_ptr<const detail::PowerTable> table, int k) : table_(std::move(table)), k_(k) {}

  std::shared_ptr<const detail::PowerTable> table_;
  int k_;
};

inline PrimePower make_ring(std::int64_t p, int k) {
  if (p < 3 || p >= (std::int64_t{1} << 32) || !is_prime(static_cast<std::uint64_t>(p)))
    throw Error(ErrorKind::CompositeModulus, std::to_string(p) + " is not an odd prime below 2^32");
  if (k < 1 || k > kMaxExponent)
    throw Error(ErrorKind::ExponentOutOfRange, "exponent " + std::to_string(k) + " outside 1..8");
  auto table = std::make_shared<detail::PowerTable>();
  table->p = static_cast<std::uint32_t>(p);
  table->pow[0] = 1;
  for (int j = 1; j <= kMaxExponent; ++j) table->pow[j] = table->pow[j - 1] * static_cast<unsigned long>(p);
  return PrimePower(std::move(table), k);
}

class Residue {
 public:
  // Reduces an arbitrary integer into [0, p^k).
  Residue(const BigInt& n, PrimePower ring) : ring_(std::move(ring)) {
    mpz_fdiv_r(value_.get_mpz_t(), n.get_mpz_t(), ring_.modulus().get_mpz_t());
  }

  const BigInt& value() const { return value_; }
  const PrimePower& ring() const { return ring_; }
  std::uint32_t p() const { return ring_.p(); }
  int k() const { return ring_.k(); }
  bool is_zero() const { return value_ == 0; }
  bool is_unit() const { return mpz_divisible_ui_p(value_.get_mpz_t(), ring_.p()) == 0; }

  Residue operator-() const {
    Residue r = *this;
    if (r.value_ != 0) r.value_ = ring_.modulus() - value_;
    return r;
  }

  Residue& operator+=(const Residue& o) {
    check_same(o);
    value_ += o.value_;
    if (value_ >= ring_.modulus()) value_ -= ring_.modulus();
    return *this;
  }
  Residue& operator-=(const Residue& o) {
    check_same(o);
    value_ -= o.value_;
    if (sgn(value_) < 0) value_ += ring_.modulus();
    return *this;
  }
  Residue& operator*=(const Residue& o) {
    check_same(o);
    mpz_mul(value_.get_mpz_t(), value_.get_mpz_t(), o.value_.get_mpz_t());
    mpz_tdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), ring_.modulus().get_mpz_t());
    return *this;
  }

  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.ring_ == b.ring_ && a.value_ == b.value_;
  }

  Residue inv() const {
    if (!is_unit())
      throw Error(ErrorKind::NotAUnit, value_.get_str() + " is not invertible mod " + ring_.modulus().get_str());
    Residue r = *this;
    mpz_invert(r.value_.get_mpz_t(), value_.get_mpz_t(), ring_.modulus().get_mpz_t());
    return r;
  }

  Residue pow(const BigInt& e) const {
    if (sgn(e) < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
    Residue r = *this;
    mpz_powm(r.value_.get_mpz_t(), value_.get_mpz_t(), e.get_mpz_t(), ring_.modulus().get_mpz_t());
    return r;
  }
  Residue pow(std::uint64_t e) const { return pow(BigInt(static_cast<unsigned long>(e))); }

  std::string to_string() const { return value_.get_str(); }

 private:
  void check_same(const Residue& o) const {
    if (!(ring_ == o.ring_))
      throw Error(ErrorKind::MixedModuli, "mod " + ring_.to_string() + " vs mod " + o.ring_.to_string());
  }

  BigInt value_;
  PrimePower ring_;
};

inline Residue residue(const BigInt& n, const PrimePower& ring) { return Residue(n, ring); }
inline Residue residue(std::int64_t n, const PrimePower& ring) { return Residue(make_bigint(n), ring); }

inline Residue rational_residue(const BigInt& a, const BigInt& b, const PrimePower& ring) {
  if (b == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  if (mpz_divisible_ui_p(b.get_mpz_t(), ring.p()))
    throw Error(ErrorKind::DenominatorDivisibleByP,
                "denominator " + b.get_str() + " divisible by " + std::to_string(ring.p()));
  return Residue(a, ring) * Residue(b, ring).inv();
}
inline Residue rational_residue(std::int64_t a, std::int64_t b, const PrimePower& ring) {
  return rational_residue(make_bigint(a), make_bigint(b), ring);
}
inline Residue rational_residue(const Rational& q, const PrimePower& ring) {
  return rational_residue(q.num_ref(), q.den_ref(), ring);
}

inline Residue add(const Residue& x, const Residue& y) { return x + y; }
inline Residue sub(const Residue& x, const Residue& y) { return x - y; }
inline Residue mul(const Residue& x, const Residue& y) { return x * y; }
inline Residue neg(const Residue& x) { return -x; }
inline Residue inv(const Residue& x) { return x.inv(); }
inline Residue pow(const Residue& x, std::uint64_t e) { return x.pow(e); }
inline Residue pow(const Residue& x, const BigInt& e) { return x.pow(e); }

inline Residue divide_by_p(const Residue& x) {
  const PrimePower& ring = x.ring();
  if (ring.k() < 2) throw Error(ErrorKind::ExponentOutOfRange, "divide_by_p needs exponent >= 2");
  if (x.is_unit())
    throw Error(ErrorKind::NotDivisibleByP,
                x.value().get_str() + " not divisible by " + std::to_string(ring.p()));
  BigInt q;
  mpz_divexact_ui(q.get_mpz_t(), x.value().get_mpz_t(), ring.p());
  return Residue(q, ring.with_exponent(ring.k() - 1));
}

inline Residue reduce(const Residue& x, int j) {
  if (j < 1 || j > x.k())
    throw Error(ErrorKind::ExponentOutOfRange,
                "cannot reduce mod p^" + std::to_string(x.k()) + " to p^" + std::to_string(j));
  if (j == x.k()) return x;
  return Residue(x.value(), x.ring().with_exponent(j));
}

// Valuation of the representative, capped at the exponent (zero has valuation k).
inline Valuation valuation(const Residue& x) {
  if (x.is_zero()) return x.k();
  Valuation v = p_adic_valuation(x.value(), x.p());
  return v < x.k() ? v : x.k();
}

// Euler's criterion.
inline int legendre(std::int64_t a, std::uint32_t p) {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  if (r == 0) return 0;
  return detail::powmod64(static_cast<std::uint64_t>(r), (p - 1) / 2, p) == 1 ? 1 : -1;
}

inline std::string to_string(const Residue& x) { return x.to_string(); }

}  // namespace congrlab
