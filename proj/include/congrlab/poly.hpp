#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "congrlab/rational.hpp"

namespace congrlab {

// Dense polynomial over Q, ascending coefficients, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit Poly(const Rational& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
  }

  static Poly x() { return monomial(Rational(1), 1); }
  static Poly monomial(const Rational& coeff, std::size_t degree) {
    if (coeff.is_zero()) return Poly();
    std::vector<Rational> c(degree + 1);
    c[degree] = coeff;
    return Poly(std::move(c));
  }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly scale(const Rational& s) const {
    if (s.is_zero()) return Poly();
    Poly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
  }

  Rational evaluate(const Rational& at) const {
    Rational acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
  }

  // this(inner(x)) by Horner's rule.
  Poly compose(const Poly& inner) const {
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + Poly(c_[i]);
    return acc;
  }

  // Definite integral from 0 as a polynomial in the upper limit.
  Poly integrate_from_zero() const {
    if (is_zero()) return Poly();
    std::vector<Rational> c(c_.size() + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
    return Poly(std::move(c));
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      Rational c = c_[i];
      bool negative = c.sign() < 0;
      if (negative) c = -c;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      bool unit = c == Rational(1);
      if (i == 0 || !unit) out += c.to_string();
      if (i > 0) {
        if (!unit) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

inline std::string to_string(const Poly& p) { return p.to_string(); }

}  // namespace congrlab
