#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "congrlab/error.hpp"
#include "congrlab/rational.hpp"

namespace congrlab {

// a + b*sqrt(d) with d square-free and different from 0 and 1.
class QuadExt {
 public:
  QuadExt(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (!square_free(d)) throw Error(ErrorKind::InvalidArgument, std::to_string(d) + " is not a square-free d != 0, 1");
  }

  static QuadExt embed(const Rational& a, std::int64_t d) { return QuadExt(a, Rational(), d); }
  static QuadExt sqrt(std::int64_t d) { return QuadExt(Rational(), Rational(1), d); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::int64_t d() const { return d_; }

  QuadExt conjugate() const { return QuadExt(a_, -b_, d_, Trusted{}); }
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_, Trusted{}); }
  QuadExt& operator+=(const QuadExt& o) {
    check_same(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadExt& operator-=(const QuadExt& o) {
    check_same(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadExt& operator*=(const QuadExt& o) {
    check_same(o);
    Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d_);
    Rational b = a_ * o.b_ + o.a_ * b_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  QuadExt scalar_mul(const Rational& s) const { return QuadExt(a_ * s, b_ * s, d_, Trusted{}); }

  std::string to_string() const {
    return a_.to_string() + " + " + b_.to_string() + "*sqrt(" + std::to_string(d_) + ")";
  }

 private:
  struct Trusted {};
  QuadExt(Rational a, Rational b, std::int64_t d, Trusted) : a_(std::move(a)), b_(std::move(b)), d_(d) {}

  static bool square_free(std::int64_t d) {
    if (d == 0 || d == 1) return false;
    std::uint64_t m = d < 0 ? static_cast<std::uint64_t>(-d) : static_cast<std::uint64_t>(d);
    for (std::uint64_t f = 2; f * f <= m; ++f)
      if (m % (f * f) == 0) return false;
    return true;
  }

  void check_same(const QuadExt& o) const {
    if (d_ != o.d_)
      throw Error(ErrorKind::MixedExtension, "sqrt(" + std::to_string(d_) + ") vs sqrt(" + std::to_string(o.d_) + ")");
  }

  Rational a_, b_;
  std::int64_t d_;
};

inline std::string to_string(const QuadExt& x) { return x.to_string(); }

}  // namespace congrlab
