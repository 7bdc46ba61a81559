#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "congrlab/error.hpp"
#include "congrlab/modring.hpp"
#include "congrlab/poly.hpp"
#include "congrlab/quadext.hpp"
#include "congrlab/rational.hpp"

namespace congrlab {

// Minimal ring interface used by the generic recurrences and sums. Every
// function takes a "like" element that carries the ring context (modulus,
// extension field, ...).
template <class T>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational zero(const Rational&) { return Rational(); }
  static Rational one(const Rational&) { return Rational(1); }
  static Rational from_integer(std::int64_t n, const Rational&) { return Rational(n); }
  static Rational from_rational(const Rational& q, const Rational&) { return q; }
  static std::vector<Rational> reciprocals(std::span<const std::int64_t> ints, const Rational&) {
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (auto n : ints) {
      if (n == 0) throw Error(ErrorKind::DivisionByZero, "reciprocal of 0");
      out.push_back(Rational(n).inverse());
    }
    return out;
  }
};

template <>
struct RingTraits<Residue> {
  static Residue zero(const Residue& like) { return residue(0, like.ring()); }
  static Residue one(const Residue& like) { return residue(1, like.ring()); }
  static Residue from_integer(std::int64_t n, const Residue& like) { return residue(n, like.ring()); }
  static Residue from_rational(const Rational& q, const Residue& like) { return rational_residue(q, like.ring()); }

  // Batch inversion: one modular inverse for the whole list.
  static std::vector<Residue> reciprocals(std::span<const std::int64_t> ints, const Residue& like) {
    const PrimePower& ring = like.ring();
    std::vector<Residue> prefix;
    prefix.reserve(ints.size());
    Residue acc = one(like);
    for (auto n : ints) {
      if (n % static_cast<std::int64_t>(ring.p()) == 0)
        throw Error(ErrorKind::NonUnitDenominator,
                    std::to_string(n) + " is not a unit mod " + std::to_string(ring.p()));
      acc *= residue(n, ring);
      prefix.push_back(acc);
    }
    std::vector<Residue> out(ints.size(), acc);
    if (ints.empty()) return out;
    Residue inv_acc = acc.inv();
    for (std::size_t i = ints.size(); i-- > 0;) {
      out[i] = i == 0 ? inv_acc : inv_acc * prefix[i - 1];
      inv_acc *= residue(ints[i], ring);
    }
    return out;
  }
};

template <>
struct RingTraits<Poly> {
  static Poly zero(const Poly&) { return Poly(); }
  static Poly one(const Poly&) { return Poly(Rational(1)); }
  static Poly from_integer(std::int64_t n, const Poly&) { return Poly(Rational(n)); }
  static Poly from_rational(const Rational& q, const Poly&) { return Poly(q); }
  static std::vector<Poly> reciprocals(std::span<const std::int64_t> ints, const Poly& like) {
    std::vector<Poly> out;
    out.reserve(ints.size());
    for (auto& r : RingTraits<Rational>::reciprocals(ints, Rational())) out.push_back(from_rational(r, like));
    return out;
  }
};

template <>
struct RingTraits<QuadExt> {
  static QuadExt zero(const QuadExt& like) { return QuadExt::embed(Rational(), like.d()); }
  static QuadExt one(const QuadExt& like) { return QuadExt::embed(Rational(1), like.d()); }
  static QuadExt from_integer(std::int64_t n, const QuadExt& like) { return QuadExt::embed(Rational(n), like.d()); }
  static QuadExt from_rational(const Rational& q, const QuadExt& like) { return QuadExt::embed(q, like.d()); }
  static std::vector<QuadExt> reciprocals(std::span<const std::int64_t> ints, const QuadExt& like) {
    std::vector<QuadExt> out;
    out.reserve(ints.size());
    for (auto& r : RingTraits<Rational>::reciprocals(ints, Rational())) out.push_back(from_rational(r, like));
    return out;
  }
};

template <class T>
T zero_like(const T& like) { return RingTraits<T>::zero(like); }
template <class T>
T one_like(const T& like) { return RingTraits<T>::one(like); }
template <class T>
T integer_like(std::int64_t n, const T& like) { return RingTraits<T>::from_integer(n, like); }
template <class T>
T rational_like(const Rational& q, const T& like) { return RingTraits<T>::from_rational(q, like); }

// Repeated squaring with a non-negative exponent.
template <class T>
T power(const T& base, std::uint64_t e) {
  T result = one_like(base);
  T b = base;
  while (e) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

}  // namespace congrlab
