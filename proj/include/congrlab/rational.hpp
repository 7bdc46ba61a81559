#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>

#include "congrlab/error.hpp"

namespace congrlab {

using BigInt = mpz_class;

// p-adic valuations; the valuation of zero is "infinite".
using Valuation = std::int64_t;
inline constexpr Valuation kInfiniteValuation = std::numeric_limits<std::int64_t>::max();

inline BigInt make_bigint(std::int64_t n) { return BigInt(static_cast<long>(n)); }

// Strips every factor p out of n (n != 0) and returns how many were removed.
inline Valuation remove_factor(BigInt& n, std::uint32_t p) {
  if (n == 0) return kInfiniteValuation;
  BigInt pp(static_cast<unsigned long>(p));
  return static_cast<Valuation>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
}

inline Valuation p_adic_valuation(const BigInt& n, std::uint32_t p) {
  BigInt m = n;
  return remove_factor(m, p);
}

class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

  Rational(const BigInt& n) : q_(n) {}  // NOLINT(google-explicit-constructor)

  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  static Rational from_mpq(mpq_class q) {
    q.canonicalize();
    Rational r;
    r.q_ = std::move(q);
    return r;
  }

  // Accepts "a" or "a/b" with optional leading minus sign on a.
  static Rational parse(std::string_view text) {
    auto digits = [](std::string_view s, bool allow_sign) {
      if (s.empty()) return false;
      std::size_t i = 0;
      if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
      if (i == s.size()) return false;
      for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
      return true;
    };
    auto slash = text.find('/');
    std::string_view a = text.substr(0, slash);
    std::string_view b = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!digits(a, true) || !digits(b, false))
      throw Error(ErrorKind::InvalidArgument, "not a rational: '" + std::string(text) + "'");
    std::string as(a[0] == '+' ? a.substr(1) : a);
    return Rational(BigInt(as), BigInt(std::string(b)));
  }

  const mpq_class& mpq() const { return q_; }
  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpz_class& num_ref() const { return q_.get_num(); }
  const mpz_class& den_ref() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return from_mpq(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division of a rational by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  Rational inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return from_mpq(mpq_class(q_.get_den(), q_.get_num()));
  }

  // Integer power; negative exponents invert.
  Rational pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    Rational r;
    r.q_ = mpq_class(n, d);  // already reduced
    return r;
  }

  std::string to_string() const { return q_.get_str(); }

  // Always "a/b", also for integers.
  std::string to_fraction_string() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

 private:
  mpq_class q_{0};
};

inline Valuation p_adic_valuation(const Rational& q, std::uint32_t p) {
  if (q.is_zero()) return kInfiniteValuation;
  return p_adic_valuation(q.num_ref(), p) - p_adic_valuation(q.den_ref(), p);
}

inline std::string to_string(const Rational& q) { return q.to_string(); }

}  // namespace congrlab
