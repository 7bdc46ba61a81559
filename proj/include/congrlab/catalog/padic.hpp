#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "congrlab/error.hpp"
#include "congrlab/modring.hpp"

namespace congrlab {

// A residue mod p^e whose exponent e is read as the number of correct p-adic
// digits. Arithmetic propagates precision; exact division by p costs a digit.
class PAdic {
 public:
  explicit PAdic(Residue r) : r_(std::move(r)) {}

  const Residue& residue() const { return r_; }
  int precision() const { return r_.k(); }
  std::uint32_t p() const { return r_.p(); }
  // Capped at the precision: an all-zero value reports v = precision.
  Valuation valuation() const { return congrlab::valuation(r_); }

  PAdic operator-() const { return PAdic(-r_); }

  friend PAdic operator+(const PAdic& a, const PAdic& b) {
    int prec = std::min(a.precision(), b.precision());
    return PAdic(Residue(a.r_.value() + b.r_.value(), a.ring_at(prec, b)));
  }
  friend PAdic operator-(const PAdic& a, const PAdic& b) {
    int prec = std::min(a.precision(), b.precision());
    return PAdic(Residue(a.r_.value() - b.r_.value(), a.ring_at(prec, b)));
  }
  friend PAdic operator*(const PAdic& a, const PAdic& b) {
    Valuation va = a.valuation(), vb = b.valuation();
    Valuation prec = std::min<Valuation>({a.precision() + vb, b.precision() + va, kMaxExponent});
    return PAdic(Residue(a.r_.value() * b.r_.value(), a.ring_at(static_cast<int>(prec), b)));
  }
  PAdic& operator+=(const PAdic& o) { return *this = *this + o; }
  PAdic& operator-=(const PAdic& o) { return *this = *this - o; }
  PAdic& operator*=(const PAdic& o) { return *this = *this * o; }

  PAdic times_p_pow(int j) const {
    int prec = std::min(precision() + j, kMaxExponent);
    PrimePower ring = r_.ring().with_exponent(prec);
    return PAdic(Residue(r_.value() * ring.power(j), ring));
  }

  PAdic div_p_pow(int j) const {
    if (j == 0) return *this;
    if (valuation() < j)
      throw Error(ErrorKind::NotDivisibleByP, r_.value().get_str() + " mod " + r_.ring().to_string() +
                                                  " is not divisible by p^" + std::to_string(j));
    if (precision() - j < 1)
      throw Error(ErrorKind::PrecisionExhausted,
                  "dividing a value known mod p^" + std::to_string(precision()) + " by p^" + std::to_string(j));
    PrimePower ring = r_.ring().with_exponent(precision() - j);
    BigInt q;
    mpz_divexact(q.get_mpz_t(), r_.value().get_mpz_t(), r_.ring().power(j).get_mpz_t());
    return PAdic(Residue(q, ring));
  }

  PAdic inv() const {
    if (!r_.is_unit()) throw Error(ErrorKind::NotAUnit, "inverse of a non-unit p-adic value");
    return PAdic(r_.inv());
  }

  PAdic pow(std::uint64_t e) const {
    if (r_.is_unit()) return PAdic(r_.pow(e));
    PAdic result(residue_one(kMaxExponent));
    PAdic b = *this;
    while (e) {
      if (e & 1) result = result * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return result;
  }

  PAdic reduced(int j) const { return PAdic(reduce(r_, j)); }

  std::string to_string() const { return r_.value().get_str(); }

 private:
  PrimePower ring_at(int prec, const PAdic& other) const {
    if (other.p() != p()) throw Error(ErrorKind::MixedModuli, "p-adic values for different primes");
    return r_.ring().with_exponent(prec);
  }
  Residue residue_one(int prec) const { return Residue(BigInt(1), r_.ring().with_exponent(prec)); }

  Residue r_;
};

}  // namespace congrlab
