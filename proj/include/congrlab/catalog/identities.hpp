#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "congrlab/catalog/check.hpp"
#include "congrlab/catalog/congruences.hpp"
#include "congrlab/harmonic.hpp"
#include "congrlab/modring.hpp"
#include "congrlab/poly.hpp"
#include "congrlab/quadext.hpp"
#include "congrlab/sequences.hpp"

namespace congrlab {

namespace detail {

inline Rational binom_q(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return Rational();
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

inline Rational sgn_q(std::int64_t e) { return Rational(e % 2 ? -1 : 1); }

inline std::vector<std::vector<std::int64_t>> grid(std::int64_t lo, std::int64_t hi) {
  std::vector<std::vector<std::int64_t>> out;
  for (std::int64_t n = lo; n <= hi; ++n) out.push_back({n});
  return out;
}

inline std::vector<std::vector<std::int64_t>> grid(std::int64_t lo, std::int64_t hi, const std::vector<std::int64_t>& second) {
  std::vector<std::vector<std::int64_t>> out;
  for (std::int64_t n = lo; n <= hi; ++n)
    for (auto r : second) out.push_back({n, r});
  return out;
}

inline std::vector<std::vector<std::int64_t>> prime_grid(std::int64_t lo, std::int64_t hi, std::int64_t cases) {
  std::vector<std::vector<std::int64_t>> out;
  for (std::int64_t p = lo; p <= hi; ++p) {
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) continue;
    for (std::int64_t c = 0; c < cases; ++c) out.push_back({p, c});
  }
  return out;
}

// Hbar_k({2}^j) for 0 <= k <= n, 0 <= j <= max_depth (outer index j).
inline std::vector<std::vector<Rational>> hbar_twos(std::int64_t n, std::int64_t max_depth) {
  std::vector<std::vector<Rational>> out;
  for (std::int64_t j = 0; j <= max_depth; ++j)
    out.push_back(odd_mhs_prefix(static_cast<std::uint64_t>(n), repeated(2, static_cast<int>(j)), Rational()));
  return out;
}

// sum_j (-1)^j P^{2j} Hbar_k({2}^j)
inline Rational ccc_sum(std::int64_t n, std::int64_t k, const std::vector<std::vector<Rational>>& hb) {
  Rational P2 = Rational(2 * n + 1) * Rational(2 * n + 1);
  Rational acc, pw(1);
  for (std::int64_t j = 0; j <= k; ++j) {
    acc += sgn_q(j) * pw * hb[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    pw *= P2;
  }
  return acc;
}

inline Poly t_poly() { return Poly::x(); }
inline Poly const_poly(const Rational& q) { return Poly(q); }

// v_m(t) as polynomials, 0 <= m <= count.
inline std::vector<Poly> v_polys(std::uint64_t count) {
  return lucas_sequences<Poly>(count, {Poly::x(), Poly(Rational(1))}).v;
}

inline Poly divide_by_t(const Poly& f) {
  if (!f.coefficient(0).is_zero()) throw Error(ErrorKind::DivisionFailure, "polynomial has a constant term");
  auto c = f.coefficients();
  if (c.empty()) return Poly();
  c.erase(c.begin());
  return Poly(std::move(c));
}

inline std::pair<ExactValue, ExactValue> l25_exact(std::span<const std::int64_t> a) {
  auto n = static_cast<std::uint64_t>(a[0]);
  int r = static_cast<int>(a[1]);
  Rational lhs = odd_mhs(n, {r}, Rational());
  Rational rhs = mhs(2 * n, {r}, Rational()) - mhs(n, {r}, Rational()) / Rational(2).pow(r);
  return {lhs, rhs};
}

inline std::pair<ExactValue, ExactValue> wz(std::span<const std::int64_t> a, int square) {
  std::int64_t n = a[0];
  Rational lhs;
  for (std::int64_t k = 0; k <= n; ++k) {
    Rational den = Rational(2 * k + 1).pow(square) * binom_q(2 * k, k);
    lhs += Rational(-16).pow(k) * binom_q(n + k, 2 * k) / den;
  }
  Rational rhs;
  if (square == 1) {
    Rational alt;
    for (std::int64_t k = 0; k < n; ++k) alt += sgn_q(k) / Rational(2 * k + 1);
    rhs = Rational(2) * sgn_q(n) * alt + Rational(1) / Rational(2 * n + 1);
  } else {
    rhs = Rational(1) / (Rational(2 * n + 1) * Rational(2 * n + 1));
  }
  return {lhs, rhs};
}

inline std::pair<ExactValue, ExactValue> ccc(std::span<const std::int64_t> a) {
  std::int64_t n = a[0], k = a[1], form = a[2];
  Rational P2 = Rational(2 * n + 1) * Rational(2 * n + 1);
  Rational prod(1);
  for (std::int64_t j = 0; j < k; ++j) prod *= Rational(1) - P2 / (Rational(2 * j + 1) * Rational(2 * j + 1));
  if (form == 0) return {Rational(-16).pow(k) * binom_q(n + k, 2 * k) / binom_q(2 * k, k), prod};
  return {prod, ccc_sum(n, k, hbar_twos(k, k))};
}

inline std::pair<ExactValue, ExactValue> a_exact(std::span<const std::int64_t> a) {
  std::int64_t n = a[0];
  Rational P(2 * n + 1);
  Poly t = t_poly();
  Poly lhs = (w_seq(static_cast<std::uint64_t>(n), const_poly(Rational(1)) - t.scale(Rational(8))) -
              Poly::monomial(Rational(-16).pow(n), static_cast<std::size_t>(n)))
                 .scale(P.inverse());
  auto hb = hbar_twos(n, n);
  Poly rhs;
  for (std::int64_t k = 0; k < n; ++k)
    rhs += Poly::monomial(binom_q(2 * k, k) / Rational(2 * k + 1) * ccc_sum(n, k, hb), static_cast<std::size_t>(k));
  return {lhs, rhs};
}

inline std::pair<ExactValue, ExactValue> eq15_exact(std::span<const std::int64_t> a) {
  std::int64_t n = a[0];
  Rational P2 = Rational(2 * n + 1) * Rational(2 * n + 1);
  Poly t = t_poly();
  Poly lhs = w_seq(static_cast<std::uint64_t>(n), t.scale(Rational(8)) - const_poly(Rational(1))).scale(sgn_q(n));
  Poly rhs;
  Rational prod(1);
  for (std::int64_t k = 0; k <= n; ++k) {
    if (k > 0) prod *= Rational(1) - P2 / (Rational(2 * k - 1) * Rational(2 * k - 1));
    rhs += Poly::monomial(binom_q(2 * k, k) * prod, static_cast<std::size_t>(k));
  }
  return {lhs, rhs};
}

inline std::pair<ExactValue, ExactValue> intu(std::span<const std::int64_t> a) {
  std::int64_t n = a[0];
  Poly t = t_poly();
  Poly arg = const_poly(Rational(1)) - (t * t).scale(Rational(1, 2));
  Poly lhs = w_seq(static_cast<std::uint64_t>(n), arg).integrate_from_zero();
  auto v = v_polys(static_cast<std::uint64_t>(2 * n + 1));
  Poly rhs;
  for (std::int64_t k = 0; k < n; ++k)
    rhs += v[static_cast<std::size_t>(2 * k + 1)].scale(Rational(2) * sgn_q(k) / Rational(2 * k + 1));
  rhs += v[static_cast<std::size_t>(2 * n + 1)].scale(sgn_q(n) / Rational(2 * n + 1));
  return {lhs, rhs};
}

inline std::pair<ExactValue, ExactValue> intu1(std::span<const std::int64_t> a) {
  std::int64_t n = a[0];
  Poly t = t_poly();
  Poly arg = (t * t).scale(Rational(1, 2)) - const_poly(Rational(1));
  Poly integrand = divide_by_t(w_seq(static_cast<std::uint64_t>(n), arg).scale(sgn_q(n)) - const_poly(Rational(1)));
  Poly lhs = integrand.integrate_from_zero();
  auto v = v_polys(static_cast<std::uint64_t>(2 * n));
  Poly rhs = const_poly(-mhs(static_cast<std::uint64_t>(n), {1}, Rational()));
  for (std::int64_t k = 1; k <= n; ++k) rhs += v[static_cast<std::size_t>(2 * k)].scale(sgn_q(k) / Rational(2 * k));
  return {lhs, rhs};
}

inline std::pair<ExactValue, ExactValue> eq08b(std::span<const std::int64_t> a) {
  auto n = static_cast<std::uint64_t>(a[0]);
  Poly x = t_poly();
  auto u = lucas_sequences<Poly>(n + 1, {x.scale(Rational(2)), Poly(Rational(1))}).u;
  return {w_seq(n, x), u[n + 1] + u[n]};
}

// Finite versions of the odd-weight (odd r) and even-weight (even r) identities.
inline std::pair<ExactValue, ExactValue> s5(std::span<const std::int64_t> a, bool odd) {
  std::int64_t n = a[0], r = a[1];
  std::int64_t h = odd ? (r - 1) / 2 : r / 2 - 1;
  auto hb = hbar_twos(n, h);
  Rational quarter = sgn_q(h) / Rational(4);
  Rational base = odd ? Rational(16) : Rational(-16);
  Rational lhs, rhs;
  for (std::int64_t k = 0; k < n; ++k) {
    Rational odd_k(2 * k + 1);
    Rational weight = binom_q(2 * k, k) / base.pow(k);
    Rational inner;
    for (std::int64_t j = 0; j <= h; ++j)
      inner += sgn_q(j) * hb[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] / odd_k.pow(r - 2 * j);
    const Rational& hh = hb[static_cast<std::size_t>(h)][static_cast<std::size_t>(k)];
    Rational tail_den = odd ? odd_k : odd_k * odd_k;
    if (odd) inner -= quarter * hh / tail_den;
    else inner += quarter * hh / tail_den;
    lhs += weight * inner;
    rhs += (odd ? sgn_q(k) : Rational(1)) / odd_k.pow(r);
    Rational corr = weight / binom_q(n + k, 2 * k + 1) * hh / tail_den;
    if (odd) corr *= sgn_q(n - k);
    rhs += quarter * corr;
  }
  return {lhs, rhs};
}

inline std::pair<ExactValue, ExactValue> w1w2(std::span<const std::int64_t> a) {
  auto p = static_cast<std::uint32_t>(a[0]);
  bool sum_form = a[1] == 1;
  const std::uint64_t n = (p - 1) / 2;
  QuadExt phi_plus(Rational(1, 2), Rational(1, 2), 5), phi_minus(Rational(1, 2), Rational(-1, 2), 5);
  QuadExt A = phi_plus * w_seq(n, phi_minus.scalar_mul(Rational(1, 2)));
  QuadExt B = phi_minus * w_seq(n, phi_plus.scalar_mul(Rational(1, 2)));
  Rational eps = sgn_q(static_cast<std::int64_t>(n));
  if (sum_form) return {A + B, QuadExt::embed(eps, 5)};
  return {A - B, QuadExt(Rational(), eps * Rational(legendre(static_cast<std::int64_t>(p), 5)), 5)};
}

inline const Rational& special_point(std::int64_t c) {
  static const Rational points[] = {Rational(0), Rational(-1, 2), Rational(1, 2), Rational(5, 4)};
  return points[c];
}

inline std::pair<ExactValue, ExactValue> special_values(std::span<const std::int64_t> a) {
  auto p = static_cast<std::uint32_t>(a[0]);
  std::int64_t c = a[1];
  const std::uint64_t n = (p - 1) / 2;
  Rational eps = sgn_q(static_cast<std::int64_t>(n));
  Rational lhs = w_seq(n, special_point(c));
  Rational rhs;
  switch (c) {
    case 0: rhs = eps * Rational(legendre(2, p)); break;
    case 1: rhs = eps * Rational(legendre(3, p)); break;
    case 2: rhs = eps; break;
    default: rhs = Rational(2).pow((p + 1) / 2) - Rational(2).pow(-static_cast<std::int64_t>(n)); break;
  }
  return {lhs, rhs};
}

inline IdentityCheck make_identity(std::string id, std::string description, std::string anchor,
                                   std::vector<std::string> names, std::vector<std::vector<std::int64_t>> sets,
                                   std::function<std::pair<ExactValue, ExactValue>(std::span<const std::int64_t>)> f) {
  IdentityCheck c;
  c.id = std::move(id);
  c.description = std::move(description);
  c.anchor = std::move(anchor);
  c.param_names = std::move(names);
  c.param_sets = std::move(sets);
  c.evaluator = std::move(f);
  return c;
}

}  // namespace detail

inline void add_builtin_identities(Registry& reg) {
  using detail::grid;
  using detail::make_identity;
  reg.identities.push_back(make_identity("L25.exact", "Hbar_n(r) = H_{2n}(r) - H_n(r)/2^r", "odd-denominator sums",
                                         {"n", "r"}, grid(1, 40, {1, 2, 3, 4, 5}), detail::l25_exact));
  reg.identities.push_back(make_identity(
      "L26.wz1", "sum_k (-16)^k C(n+k,2k)/((2k+1)C(2k,k)) = 2(-1)^n sum_{k<n} (-1)^k/(2k+1) + 1/(2n+1)",
      "WZ pair", {"n"}, grid(0, 20), [](auto a) { return detail::wz(a, 1); }));
  reg.identities.push_back(make_identity("L26.wz2", "sum_k (-16)^k C(n+k,2k)/((2k+1)^2 C(2k,k)) = 1/(2n+1)^2",
                                         "WZ pair", {"n"}, grid(0, 20), [](auto a) { return detail::wz(a, 2); }));
  {
    std::vector<std::vector<std::int64_t>> sets;
    for (std::int64_t n = 0; n <= 12; ++n)
      for (std::int64_t k = 0; k <= n; ++k)
        for (std::int64_t form : {0, 1}) sets.push_back({n, k, form});
    auto c = make_identity("CCC",
                           "(-16)^k C(n+k,2k)/C(2k,k) = prod_{j<k} (1 - (2n+1)^2/(2j+1)^2) = sum_j (-1)^j (2n+1)^{2j} "
                           "Hbar_k({2}^j)",
                           "binomial ratio as a product", {"n", "k", "form"}, std::move(sets), detail::ccc);
    c.label = [](std::span<const std::int64_t> a) {
      return "n=" + std::to_string(a[0]) + ",k=" + std::to_string(a[1]) + (a[2] == 0 ? ",product" : ",hbar");
    };
    reg.identities.push_back(std::move(c));
  }
  reg.identities.push_back(make_identity(
      "A.exact", "(w_n(1-8t) - (-16t)^n)/(2n+1) = sum_{k<n} C(2k,k) t^k/(2k+1) sum_j (-1)^j (2n+1)^{2j} Hbar_k({2}^j)",
      "S1 expansion with P = 2n+1", {"n"}, grid(0, 12), detail::a_exact));
  reg.identities.push_back(make_identity("eq15.exact",
                                         "(-1)^n w_n(8t-1) = sum_k C(2k,k) prod_{j=1}^{k} (1 - (2n+1)^2/(2j-1)^2) t^k",
                                         "w_n as a binomial sum", {"n"}, grid(0, 12), detail::eq15_exact));
  reg.identities.push_back(make_identity(
      "P33.intu", "int_0^t w_n(1 - x^2/2) dx = 2 sum_{k<n} (-1)^k v_{2k+1}(t)/(2k+1) + (-1)^n v_{2n+1}(t)/(2n+1)",
      "integrated w_n", {"n"}, grid(0, 15), detail::intu));
  reg.identities.push_back(make_identity(
      "P33.intu1", "int_0^t ((-1)^n w_n(x^2/2 - 1) - 1)/x dx = sum_{k=1}^{n} (-1)^k v_{2k}(t)/(2k) - H_n(1)",
      "integrated w_n", {"n"}, grid(0, 15), detail::intu1));
  reg.identities.push_back(make_identity("eq08b.exact", "w_n(x) = u_{n+1}(2x) + u_n(2x)", "w_n via Lucas sequences",
                                         {"n"}, grid(0, 30), detail::eq08b));
  reg.identities.push_back(make_identity("S5.idodd", "finite odd-weight identity with Hbar_k({2}^j)",
                                         "finite versions of series identities", {"n", "r"}, grid(1, 12, {1, 3, 5}),
                                         [](auto a) { return detail::s5(a, true); }));
  reg.identities.push_back(make_identity("S5.ideven", "finite even-weight identity with Hbar_k({2}^j)",
                                         "finite versions of series identities", {"n", "r"}, grid(1, 12, {2, 4, 6}),
                                         [](auto a) { return detail::s5(a, false); }));
  {
    auto c = make_identity("T43.w1w2",
                           "phi+ w_n(phi-/2) -+ phi- w_n(phi+/2) = (-1)^n (p/5) sqrt5 resp. (-1)^n in Q(sqrt5)",
                           "golden-ratio values of w_n", {"p", "form"}, detail::prime_grid(7, 100, 2), detail::w1w2);
    c.label = [](std::span<const std::int64_t> a) {
      return "p=" + std::to_string(a[0]) + (a[1] == 0 ? ",difference" : ",sum");
    };
    reg.identities.push_back(std::move(c));
  }
  {
    auto c = make_identity("eq12.eq13", "w_n(0), w_n(-1/2), w_n(1/2), w_n(5/4) in closed form, n = (p-1)/2",
                           "special values of w_n", {"p", "x"}, detail::prime_grid(5, 500, 4), detail::special_values);
    c.label = [](std::span<const std::int64_t> a) {
      return "p=" + std::to_string(a[0]) + ",x=" + detail::special_point(a[1]).to_string();
    };
    reg.identities.push_back(std::move(c));
  }
}

inline Registry builtin_checks() {
  Registry reg;
  add_builtin_congruences(reg);
  add_builtin_identities(reg);
  return reg;
}

}  // namespace congrlab
