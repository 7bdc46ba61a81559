#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "congrlab/binomsums.hpp"
#include "congrlab/catalog/padic.hpp"
#include "congrlab/error.hpp"
#include "congrlab/harmonic.hpp"
#include "congrlab/modring.hpp"
#include "congrlab/rational.hpp"
#include "congrlab/sequences.hpp"
#include "congrlab/specialnum.hpp"

namespace congrlab {

// Evaluation backends for congruence checks. Each check is written once as a
// template over the backend: ModularEnv computes in Z/p^W with p-adic precision
// tracking, ExactEnv computes the same expressions over Q (small p only).

class ModularEnv {
 public:
  using Scalar = PAdic;

  ModularEnv(std::uint32_t p, int working_exponent)
      : p_(p), ring_w_(make_ring(p, working_exponent)), ring_exact_(ring_w_.with_exponent(kMaxExponent)) {}

  std::uint32_t p() const { return p_; }
  std::uint64_t half() const { return (p_ - 1) / 2; }
  // (-1)^{(p-1)/2} and (-1)^{(p+1)/2}
  int eps() const { return half() % 2 ? -1 : 1; }
  int eps_plus() const { return -eps(); }
  int legendre(std::int64_t a) const { return congrlab::legendre(a, p_); }

  // An exact rational constant with v_p >= 0.
  Scalar num(const Rational& q) const {
    if (q.is_zero()) return PAdic(residue(0, ring_exact_));
    BigInt numer = q.numerator();
    Valuation v = remove_factor(numer, p_);
    if (mpz_divisible_ui_p(q.den_ref().get_mpz_t(), p_))
      throw Error(ErrorKind::DenominatorDivisibleByP, "constant " + q.to_string() + " is not p-integral");
    return PAdic(rational_residue(numer, q.den_ref(), ring_exact_)).times_p_pow(static_cast<int>(v));
  }
  Scalar num(std::int64_t a, std::int64_t b = 1) const { return num(Rational(make_bigint(a), make_bigint(b))); }
  Scalar ppow(int j) const { return PAdic(residue(1, ring_exact_)).times_p_pow(j); }
  Scalar div_p(const Scalar& x, int j = 1) const { return x.div_p_pow(j); }
  Scalar pow(const Scalar& x, std::uint64_t e) const { return x.pow(e); }

  Scalar H(std::uint64_t n, const Composition& c) { return harmonic(n, c, false); }
  Scalar Hbar(std::uint64_t n, const Composition& c) { return harmonic(n, c, true); }
  // Hbar_k(c) for 0 <= k <= n.
  std::vector<Scalar> Hbar_prefix(std::uint64_t n, const Composition& c) {
    return wrap(detail::nested_prefix(odd_recips(n), c, residue(0, ring_w_)));
  }

  Scalar bernoulli(int m) const { return PAdic(bernoulli_mod_p(m, p_)); }
  Scalar bernoulli_poly(int m, const Rational& x) {
    if (!bern_table_) bern_table_ = bernoulli_table(p_);
    return PAdic(bernoulli_poly_value(m, x, p_, *bern_table_));
  }
  Scalar euler(int m) const { return PAdic(euler_numbers(m, p_).at(static_cast<std::size_t>(m))); }
  Scalar fermat_q(std::int64_t a) const { return PAdic(fermat_quotient(a, p_, ring_w_.k())); }
  Scalar lucas_q() const { return PAdic(lucas_quotient(p_, ring_w_.k())); }

  // F_n, L_n by fast doubling.
  Scalar fibonacci(std::uint64_t n) const { return PAdic(lucas_pair_fast(n, fib_params()).u); }
  Scalar lucas_number(std::uint64_t n) const { return PAdic(lucas_pair_fast(n, fib_params()).v); }
  // v_n(x) = v_n(x, 1)
  Scalar lucas_v(std::uint64_t n, const Rational& x) const {
    return PAdic(lucas_pair_fast(n, {rational_residue(x, ring_w_), residue(1, ring_w_)}).v);
  }
  // (u_0..u_n, v_0..v_n) at x, y = 1
  std::pair<std::vector<Scalar>, std::vector<Scalar>> lucas_terms(std::uint64_t n, const Rational& x) const {
    auto seq = lucas_sequences<Residue>(n, {rational_residue(x, ring_w_), residue(1, ring_w_)});
    return {wrap(seq.u), wrap(seq.v)};
  }
  Scalar w(std::uint64_t n, const Rational& x) const { return PAdic(w_seq(n, rational_residue(x, ring_w_))); }

  Scalar central_binom(std::uint64_t k) { return PAdic(binoms()[k]); }
  Scalar binomial(std::uint64_t n, std::uint64_t k) const {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return num(Rational(b));
  }

  Scalar s1(const Rational& t, int d) { return PAdic(congrlab::s1(t, d, ring_w_, binoms())); }
  Scalar s2(const Rational& t, int d) { return PAdic(congrlab::s2(t, d, ring_w_, binoms())); }
  std::pair<Scalar, Scalar> weighted(const Rational& t) {
    auto [a, b] = weighted_sums(t, ring_w_, binoms());
    return {PAdic(a), PAdic(b)};
  }
  Scalar fib_lucas(FibLucas kind) { return PAdic(fib_lucas_sum(kind, ring_w_, binoms())); }
  // Only known mod p.
  Scalar rhs_lucas(LucasSeq seq, const Rational& c, int d) const { return PAdic(rhs_lucas_sums(seq, c, d, ring_w_)); }
  Scalar alt_sum(std::uint64_t n, int d, bool odd) {
    auto& r = recips();
    Residue sum = residue(0, ring_w_);
    for (std::uint64_t i = 0; i < n; ++i) {
      std::uint64_t den = odd ? 2 * i + 1 : i + 1;
      Residue term = r[den - 1].pow(static_cast<std::uint64_t>(d));
      std::uint64_t k = odd ? i : i + 1;
      if (k % 2) sum -= term;
      else sum += term;
    }
    return PAdic(sum);
  }

 private:
  static std::vector<Scalar> wrap(const std::vector<Residue>& xs) {
    std::vector<Scalar> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.emplace_back(x);
    return out;
  }

  LucasParams<Residue> fib_params() const { return {residue(1, ring_w_), residue(-1, ring_w_)}; }

  // 1/k for 1 <= k <= p-1.
  const std::vector<Residue>& recips() {
    if (!recips_) recips_ = detail::reciprocal_range(p_ - 1, false, residue(0, ring_w_));
    return *recips_;
  }
  std::vector<Residue> odd_recips(std::uint64_t n) {
    if (2 * n > p_) throw Error(ErrorKind::NonUnitDenominator, "odd denominators reach p");
    auto& r = recips();
    std::vector<Residue> out;
    out.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) out.push_back(r[2 * k]);
    return out;
  }
  Scalar harmonic(std::uint64_t n, const Composition& c, bool odd) {
    auto key = std::make_tuple(n, odd, c.parts());
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    std::vector<Residue> rs;
    if (odd) {
      rs = odd_recips(n);
    } else {
      if (n >= p_) throw Error(ErrorKind::NonUnitDenominator, "H_n with n >= p");
      rs.assign(recips().begin(), recips().begin() + static_cast<std::ptrdiff_t>(n));
    }
    PAdic v(detail::nested_prefix(rs, c, residue(0, ring_w_)).back());
    cache_.emplace(key, v);
    return v;
  }
  const BinomTable<Residue>& binoms() {
    if (!binoms_) binoms_ = central_binomials(ring_w_);
    return *binoms_;
  }

  std::uint32_t p_;
  PrimePower ring_w_;
  PrimePower ring_exact_;
  std::optional<std::vector<Residue>> recips_;
  std::optional<BinomTable<Residue>> binoms_;
  std::optional<BernoulliTable> bern_table_;
  std::map<std::tuple<std::uint64_t, bool, std::vector<int>>, PAdic> cache_;
};

class ExactEnv {
 public:
  using Scalar = Rational;

  explicit ExactEnv(std::uint32_t p) : p_(p) {
    if (p < 3 || !is_prime(p)) throw Error(ErrorKind::CompositeModulus, std::to_string(p) + " is not an odd prime");
  }

  std::uint32_t p() const { return p_; }
  std::uint64_t half() const { return (p_ - 1) / 2; }
  int eps() const { return half() % 2 ? -1 : 1; }
  int eps_plus() const { return -eps(); }
  int legendre(std::int64_t a) const { return congrlab::legendre(a, p_); }

  Scalar num(const Rational& q) const { return q; }
  Scalar num(std::int64_t a, std::int64_t b = 1) const { return Rational(make_bigint(a), make_bigint(b)); }
  Scalar ppow(int j) const { return Rational(static_cast<std::int64_t>(p_)).pow(j); }
  Scalar div_p(const Scalar& x, int j = 1) const { return x / ppow(j); }
  Scalar pow(const Scalar& x, std::uint64_t e) const { return x.pow(static_cast<std::int64_t>(e)); }

  Scalar H(std::uint64_t n, const Composition& c) const { return mhs(n, c, Rational()); }
  Scalar Hbar(std::uint64_t n, const Composition& c) const { return odd_mhs(n, c, Rational()); }
  std::vector<Scalar> Hbar_prefix(std::uint64_t n, const Composition& c) const {
    return odd_mhs_prefix(n, c, Rational());
  }

  Scalar bernoulli(int m) {
    if (m < 0 || m > static_cast<int>(p_) - 2) throw Error(ErrorKind::IndexOutOfRange, "B_" + std::to_string(m));
    if (bern_.size() <= static_cast<std::size_t>(m)) bern_ = bernoulli_numbers_exact(static_cast<int>(p_));
    return bern_[static_cast<std::size_t>(m)];
  }
  Scalar bernoulli_poly(int m, const Rational& x) {
    Rational acc;
    for (int k = 0; k <= m; ++k) {
      BigInt c;
      mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
      acc += Rational(c) * bernoulli(k) * x.pow(m - k);
    }
    return acc;
  }
  Scalar euler(int m) const { return Rational(euler_numbers_exact(m).at(static_cast<std::size_t>(m))); }
  Scalar fermat_q(std::int64_t a) const {
    if (a % static_cast<std::int64_t>(p_) == 0) throw Error(ErrorKind::BaseDivisibleByP, "q_p(a) with p | a");
    return (Rational(a).pow(p_ - 1) - Rational(1)) / Rational(static_cast<std::int64_t>(p_));
  }
  Scalar lucas_q() const { return (lucas_number(p_) - Rational(1)) / Rational(static_cast<std::int64_t>(p_)); }

  Scalar fibonacci(std::uint64_t n) const { return lucas_pair<Rational>(n, {Rational(1), Rational(-1)}).u; }
  Scalar lucas_number(std::uint64_t n) const { return lucas_pair<Rational>(n, {Rational(1), Rational(-1)}).v; }
  Scalar lucas_v(std::uint64_t n, const Rational& x) const { return lucas_pair<Rational>(n, {x, Rational(1)}).v; }
  std::pair<std::vector<Scalar>, std::vector<Scalar>> lucas_terms(std::uint64_t n, const Rational& x) const {
    auto seq = lucas_sequences<Rational>(n, {x, Rational(1)});
    return {std::move(seq.u), std::move(seq.v)};
  }
  Scalar w(std::uint64_t n, const Rational& x) const { return w_seq(n, x); }

  Scalar central_binom(std::uint64_t k) const { return binomial(2 * k, k); }
  Scalar binomial(std::uint64_t n, std::uint64_t k) const {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
  }

  Scalar s1(const Rational& t, int d) const { return congrlab::s1(t, d, central_binomials_exact(p_)); }
  Scalar s2(const Rational& t, int d) const { return congrlab::s2(t, d, central_binomials_exact(p_)); }
  std::pair<Scalar, Scalar> weighted(const Rational& t) const { return weighted_sums(t, central_binomials_exact(p_)); }
  Scalar fib_lucas(FibLucas kind) const {
    auto table = central_binomials_exact(p_);
    return fib_lucas_sum(kind, table);
  }
  Scalar rhs_lucas(LucasSeq seq, const Rational& c, int d) const { return rhs_lucas_sum(seq, c, d, p_ - 1); }
  Scalar alt_sum(std::uint64_t n, int d, bool odd) const { return alternating_half_sum(n, d, odd, Rational()); }

 private:
  std::uint32_t p_;
  std::vector<Rational> bern_;
};

}  // namespace congrlab
