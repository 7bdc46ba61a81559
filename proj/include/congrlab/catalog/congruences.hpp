#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "congrlab/binomsums.hpp"
#include "congrlab/catalog/check.hpp"
#include "congrlab/harmonic.hpp"

namespace congrlab {

namespace detail {

struct CheckMeta {
  std::string id;
  std::string description;
  std::string anchor;
  int target;
  int working;
  std::uint32_t min_prime;
  std::set<std::uint32_t> excluded = {};
  bool panel = false;
  std::optional<std::uint32_t> cap = std::nullopt;
};

// Instantiates one generic evaluator for both backends.
template <class F>
void add_congruence(Registry& reg, CheckMeta meta, F f) {
  CongruenceCheck c;
  c.id = std::move(meta.id);
  c.description = std::move(meta.description);
  c.anchor = std::move(meta.anchor);
  c.target_exponent = meta.target;
  c.working_exponent = meta.working;
  c.min_prime = meta.min_prime;
  c.excluded_primes = std::move(meta.excluded);
  if (meta.panel) c.t_panel = standard_t_panel();
  c.default_max_prime = meta.cap;
  c.modular = [f](ModularEnv& env, const OptionalT& t) { return f(env, t); };
  c.exact = [f](ExactEnv& env, const OptionalT& t) { return f(env, t); };
  reg.congruences.push_back(std::move(c));
}

inline std::int64_t binom_i(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::int64_t sign_pow(int e) { return e % 2 ? -1 : 1; }

inline const Rational& need_t(const OptionalT& t) {
  if (!t) throw Error(ErrorKind::PreconditionViolated, "check needs a parameter t");
  return *t;
}

inline std::string num_id(const std::string& base, std::initializer_list<std::pair<const char*, int>> parts) {
  std::string s = base + ".";
  for (const auto& [name, value] : parts) s += name + std::to_string(value);
  return s;
}

// Harmonic-sum facts of weight at most 7 and their refinements.
inline void add_harmonic_checks(Registry& reg) {
  for (int r : {1, 3, 5}) {
    add_congruence(reg,
                   {num_id("i.odd", {{"r", r}}), "H_{p-1}(r) = -r(r+1)/(2(r+2)) p^2 B_{p-r-2} mod p^3, odd r",
                    "Bernoulli form of H_{p-1}(r)", 3, 3, static_cast<std::uint32_t>(r + 3)},
                   [r](auto& env, const OptionalT&) {
                     const std::uint32_t p = env.p();
                     auto lhs = env.H(p - 1, {r});
                     auto rhs = env.num(-r * (r + 1), 2 * (r + 2)) * env.ppow(2) * env.bernoulli(static_cast<int>(p) - r - 2);
                     return std::pair{lhs, rhs};
                   });
  }
  for (int r : {2, 4, 6}) {
    add_congruence(reg,
                   {num_id("i.even", {{"r", r}}), "H_{p-1}(r) = r/(r+1) p B_{p-r-1} mod p^2, even r", "Bernoulli form of H_{p-1}(r)", 2, 2,
                    static_cast<std::uint32_t>(r + 3)},
                   [r](auto& env, const OptionalT&) {
                     const std::uint32_t p = env.p();
                     auto lhs = env.H(p - 1, {r});
                     auto rhs = env.num(r, r + 1) * env.ppow(1) * env.bernoulli(static_cast<int>(p) - r - 1);
                     return std::pair{lhs, rhs};
                   });
  }
  for (int r = 1; r <= 5; ++r) {
    for (int s = 1; r + s <= 6; ++s) {
      add_congruence(reg,
                     {num_id("ii", {{"r", r}, {"s", s}}), "H_{p-1}(r,s) = (-1)^s/(r+s) C(r+s,s) B_{p-r-s} mod p",
                      "depth-two H_{p-1}", 1, 1, static_cast<std::uint32_t>(r + s + 1)},
                     [r, s](auto& env, const OptionalT&) {
                       const std::uint32_t p = env.p();
                       auto lhs = env.H(p - 1, {r, s});
                       auto rhs = env.num(sign_pow(s) * binom_i(r + s, s), r + s) * env.bernoulli(static_cast<int>(p) - r - s);
                       return std::pair{lhs, rhs};
                     });
    }
  }
  for (int w : {3, 5, 7}) {
    for (int r = 1; r < w; ++r) {
      for (int s = 1; r + s < w; ++s) {
        int t3 = w - r - s;
        add_congruence(reg,
                       {num_id("iii", {{"r", r}, {"s", s}, {"t", t3}}),
                        "H_{p-1}(r,s,t) = ((-1)^r C(w,r) - (-1)^t C(w,t)) B_{p-w}/(2w) mod p, odd weight w",
                        "depth-three H_{p-1}", 1, 1, static_cast<std::uint32_t>(w + 1)},
                       [r, s, t3, w](auto& env, const OptionalT&) {
                         const std::uint32_t p = env.p();
                         auto lhs = env.H(p - 1, {r, s, t3});
                         auto rhs = env.num(sign_pow(r) * binom_i(w, r) - sign_pow(t3) * binom_i(w, t3), 2 * w) *
                                    env.bernoulli(static_cast<int>(p) - w);
                         return std::pair{lhs, rhs};
                       });
      }
    }
  }
  add_congruence(reg, {"iv", "H_{p-1}(1) = -p H_{p-1}(2)/2 - p^2 H_{p-1}(3)/6 mod p^5", "H_{p-1}(1) to p^5", 5, 5, 7},
                 [](auto& env, const OptionalT&) {
                   const std::uint32_t p = env.p();
                   auto lhs = env.H(p - 1, {1});
                   auto rhs = env.num(-1, 2) * env.ppow(1) * env.H(p - 1, {2}) -
                              env.num(1, 6) * env.ppow(2) * env.H(p - 1, {3});
                   return std::pair{lhs, rhs};
                 });
  add_congruence(reg, {"v", "H_{p-1}(1,2) = -3 H_{p-1}(1)/p^2 + p^2 B_{p-5}/2 mod p^3", "H_{p-1}(1,2)", 3, 5, 7},
                 [](auto& env, const OptionalT&) {
                   const std::uint32_t p = env.p();
                   auto lhs = env.H(p - 1, {1, 2});
                   auto rhs = env.num(-3) * env.div_p(env.H(p - 1, {1}), 2) +
                              env.num(1, 2) * env.ppow(2) * env.bernoulli(static_cast<int>(p) - 5);
                   return std::pair{lhs, rhs};
                 });
  add_congruence(reg,
                 {"vi.1", "H_n(1) = -2q + p q^2 - p^2 (2q^3/3 + 7 B_{p-3}/12) mod p^3, q = q_p(2)", "half-range H_n(r)", 3, 3, 7},
                 [](auto& env, const OptionalT&) {
                   const std::uint32_t p = env.p();
                   auto q = env.fermat_q(2);
                   auto lhs = env.H(env.half(), {1});
                   auto rhs = env.num(-2) * q + env.ppow(1) * q * q -
                              env.ppow(2) * (env.num(2, 3) * q * q * q +
                                             env.num(7, 12) * env.bernoulli(static_cast<int>(p) - 3));
                   return std::pair{lhs, rhs};
                 });
  for (int r : {2, 4}) {
    add_congruence(reg,
                   {num_id("vi.even", {{"r", r}}), "H_n(r) = r(2^{r+1}-1)/(2(r+1)) p B_{p-r-1} mod p^2", "half-range H_n(r)", 2,
                    2, static_cast<std::uint32_t>(r + 5)},
                   [r](auto& env, const OptionalT&) {
                     const std::uint32_t p = env.p();
                     auto lhs = env.H(env.half(), {r});
                     auto rhs = env.num(r * ((std::int64_t{1} << (r + 1)) - 1), 2 * (r + 1)) * env.ppow(1) *
                                env.bernoulli(static_cast<int>(p) - r - 1);
                     return std::pair{lhs, rhs};
                   });
  }
  for (int r : {3, 5}) {
    add_congruence(reg,
                   {num_id("vi.odd", {{"r", r}}), "H_n(r) = -(2^r - 2)/r B_{p-r} mod p", "half-range H_n(r)", 1, 1,
                    static_cast<std::uint32_t>(r + 5)},
                   [r](auto& env, const OptionalT&) {
                     const std::uint32_t p = env.p();
                     auto lhs = env.H(env.half(), {r});
                     auto rhs = env.num(-((std::int64_t{1} << r) - 2), r) * env.bernoulli(static_cast<int>(p) - r);
                     return std::pair{lhs, rhs};
                   });
  }
}

// Half-range sums: the two-step relation, the p^4 relation and their consequences.
inline void add_half_range_checks(Registry& reg) {
  for (int r : {1, 2, 3}) {
    for (int a : {1, 2, 3}) {
      add_congruence(reg,
                     {num_id("L21.C1", {{"r", r}, {"a", a}}),
                      "H_{p-1}(r) = H_n(r) + (-1)^r sum_{k<=a} C(r-1+k,k) H_n(r+k) p^k mod p^{a+1}", "full range vs half range",
                      a + 1, a + 1, static_cast<std::uint32_t>(r + 3)},
                     [r, a](auto& env, const OptionalT&) {
                       const std::uint32_t p = env.p();
                       const auto n = env.half();
                       auto lhs = env.H(p - 1, {r});
                       auto sum = env.num(0);
                       for (int k = 0; k <= a; ++k)
                         sum = sum + env.num(binom_i(r - 1 + k, k)) * env.H(n, {r + k}) * env.ppow(k);
                       auto rhs = env.H(n, {r}) + env.num(sign_pow(r)) * sum;
                       return std::pair{lhs, rhs};
                     });
    }
  }
  for (int r = 1; r <= 6; ++r) {
    for (int s = 1; r + s <= 7; ++s) {
      if ((r + s) % 2 == 0) continue;
      add_congruence(reg,
                     {num_id("L21.C2", {{"r", r}, {"s", s}}),
                      "H_n(r,s) = B_{p-r-s}/(2(r+s)) ((-1)^s C(r+s,s) + 2^{r+s} - 2) mod p, r+s odd", "half-range depth two",
                      1, 1, static_cast<std::uint32_t>(r + s + 1)},
                     [r, s](auto& env, const OptionalT&) {
                       const std::uint32_t p = env.p();
                       auto lhs = env.H(env.half(), {r, s});
                       auto rhs = env.bernoulli(static_cast<int>(p) - r - s) *
                                  env.num(sign_pow(s) * binom_i(r + s, s) + (std::int64_t{1} << (r + s)) - 2, 2 * (r + s));
                       return std::pair{lhs, rhs};
                     });
    }
  }
  add_congruence(reg, {"T22", "H_n(2) + 7p/6 H_n(3) + 5p^2/8 H_n(4) = 0 mod p^4", "H_n(2) relation mod p^4", 4, 4, 3},
                 [](auto& env, const OptionalT&) {
                   const auto n = env.half();
                   const std::int64_t p = env.p();
                   auto lhs = env.H(n, {2}) + env.num(7 * p, 6) * env.H(n, {3}) + env.num(5 * p * p, 8) * env.H(n, {4});
                   return std::pair{lhs, env.num(0)};
                 });
  auto b5 = [](auto& env) { return env.bernoulli(static_cast<int>(env.p()) - 5); };
  add_congruence(reg, {"C23.a", "H_{p-1}(2) = -2 H_{p-1}(1)/p + 2/5 p^3 B_{p-5} mod p^4", "weight-two and weight-three sums via H_{p-1}(1)", 4, 5, 7},
                 [b5](auto& env, const OptionalT&) {
                   const std::uint32_t p = env.p();
                   auto lhs = env.H(p - 1, {2});
                   auto rhs = env.num(-2) * env.div_p(env.H(p - 1, {1})) + env.num(2, 5) * env.ppow(3) * b5(env);
                   return std::pair{lhs, rhs};
                 });
  add_congruence(reg, {"C23.b", "H_n(2) = -7 H_{p-1}(1)/p + 17/10 p^3 B_{p-5} mod p^4", "weight-two and weight-three sums via H_{p-1}(1)", 4, 5, 7},
                 [b5](auto& env, const OptionalT&) {
                   const std::uint32_t p = env.p();
                   auto lhs = env.H(env.half(), {2});
                   auto rhs = env.num(-7) * env.div_p(env.H(p - 1, {1})) + env.num(17, 10) * env.ppow(3) * b5(env);
                   return std::pair{lhs, rhs};
                 });
  add_congruence(reg, {"C23.c", "H_n(3) = 6 H_{p-1}(1)/p^2 - 81/10 p^2 B_{p-5} mod p^3", "weight-two and weight-three sums via H_{p-1}(1)", 3, 5, 7},
                 [b5](auto& env, const OptionalT&) {
                   const std::uint32_t p = env.p();
                   auto lhs = env.H(env.half(), {3});
                   auto rhs = env.num(6) * env.div_p(env.H(p - 1, {1}), 2) - env.num(81, 10) * env.ppow(2) * b5(env);
                   return std::pair{lhs, rhs};
                 });
  add_congruence(reg,
                 {"C23.d", "H_n(1,2) + p H_n(1,3) = -9/2 H_{p-1}(1)/p^2 - 49/20 p^2 B_{p-5} mod p^3", "weight-two and weight-three sums via H_{p-1}(1)", 3,
                  5, 7},
                 [b5](auto& env, const OptionalT&) {
                   const std::uint32_t p = env.p();
                   const auto n = env.half();
                   auto lhs = env.H(n, {1, 2}) + env.ppow(1) * env.H(n, {1, 3});
                   auto rhs = env.num(-9, 2) * env.div_p(env.H(p - 1, {1}), 2) - env.num(49, 20) * env.ppow(2) * b5(env);
                   return std::pair{lhs, rhs};
                 });
}

// Odd-denominator sums, the alternating sum and the Morley-type congruence.
inline void add_odd_sum_checks(Registry& reg) {
  for (int r = 1; r <= 3; ++r) {
    for (int s = 1; s <= 3; ++s) {
      add_congruence(
          reg,
          {num_id("L25", {{"r", r}, {"s", s}}), "Hbar_n(r,s) in terms of H_n mod p^3", "odd-denominator sums", 3, 3, 3},
          [r, s](auto& env, const OptionalT&) {
            const auto n = env.half();
            auto lhs = env.Hbar(n, {r, s});
            auto first = env.num(r) * env.H(n, {s, r + 1}) + env.num(s) * env.H(n, {s + 1, r});
            auto second = env.num(binom_i(r + 1, 2)) * env.H(n, {s, r + 2}) + env.num(r * s) * env.H(n, {s + 1, r + 1}) +
                          env.num(binom_i(s + 1, 2)) * env.H(n, {s + 2, r});
            auto bracket = env.H(n, {s, r}) + env.num(1, 2) * env.ppow(1) * first + env.num(1, 4) * env.ppow(2) * second;
            auto rhs = env.num(Rational(1) / Rational(-2).pow(r + s)) * bracket;
            return std::pair{lhs, rhs};
          });
    }
  }
  add_congruence(reg,
                 {"L26.alts",
                  "2(-1)^n sum_{k<n} (-1)^k/(2k+1) = Hbar(1) - p Hbar(2) - p^2 Hbar(2,1) + p^3 Hbar(2,2) + p^4 "
                  "Hbar(2,2,1) mod p^5",
                  "alternating odd sum", 5, 5, 7},
                 [](auto& env, const OptionalT&) {
                   const auto n = env.half();
                   auto lhs = env.num(2 * env.eps()) * env.alt_sum(n, 1, true);
                   auto rhs = env.Hbar(n, {1}) - env.ppow(1) * env.Hbar(n, {2}) - env.ppow(2) * env.Hbar(n, {2, 1}) +
                              env.ppow(3) * env.Hbar(n, {2, 2}) + env.ppow(4) * env.Hbar(n, {2, 2, 1});
                   return std::pair{lhs, rhs};
                 });
  add_congruence(reg,
                 {"C27.morley", "(-1)^n C(p-1,n)/4^{p-1} = 1 - p H_{p-1}(1)/4 - p^5 B_{p-5}/80 mod p^6",
                  "Morley-type congruence", 6, 6, 7},
                 [](auto& env, const OptionalT&) {
                   const std::uint32_t p = env.p();
                   BigInt c, four;
                   mpz_bin_uiui(c.get_mpz_t(), p - 1, env.half());
                   mpz_ui_pow_ui(four.get_mpz_t(), 4, p - 1);
                   auto lhs = env.num(Rational(c * env.eps(), four));
                   auto rhs = env.num(1) - env.num(1, 4) * env.ppow(1) * env.H(p - 1, {1}) -
                              env.num(1, 80) * env.ppow(5) * env.bernoulli(static_cast<int>(p) - 5);
                   return std::pair{lhs, rhs};
                 });
}

// Sums with a free parameter t and the Lucas-sequence right-hand sides.
inline void add_t_checks(Registry& reg) {
  add_congruence(reg,
                 {"L31.A2", "sum_{k<n} C(2k,k) t^k Hbar_k(2)/(2k+1) = (-1/t)^{(p+1)/2}/64 sum v_k(2-16t)/k^3 mod p",
                  "Hbar_k(2)-weighted sums", 1, 1, 5, {}, true},
                 [](auto& env, const OptionalT& topt) {
                   const Rational& t = need_t(topt);
                   const std::uint32_t p = env.p();
                   auto lhs = env.weighted(t).first;
                   auto rhs = env.num(1, 64) * env.pow(env.num(Rational(-1) / t), (p + 1) / 2) *
                              env.rhs_lucas(LucasSeq::V, Rational(2) - Rational(16) * t, 3);
                   return std::pair{lhs, rhs};
                 });
  add_congruence(reg,
                 {"L31.A3", "sum_{k<=n} C(2k,k) t^k Hbar_k(2) = (-1/t)^n/2 sum u_k(2-16t)/k^2 mod p", "Hbar_k(2)-weighted sums", 1, 1,
                  5, {}, true},
                 [](auto& env, const OptionalT& topt) {
                   const Rational& t = need_t(topt);
                   auto lhs = env.weighted(t).second;
                   auto rhs = env.num(1, 2) * env.pow(env.num(Rational(-1) / t), env.half()) *
                              env.rhs_lucas(LucasSeq::U, Rational(2) - Rational(16) * t, 2);
                   return std::pair{lhs, rhs};
                 });
  add_congruence(reg,
                 {"T32.first",
                  "S1(t,0) = (w_n(1-8t) - (-16t)^n)/p + p^2/64 (-1/t)^{(p+1)/2} sum v_k(2-16t)/k^3 mod p^3",
                  "S1/S2 via w_n", 3, 4, 5, {}, true},
                 [](auto& env, const OptionalT& topt) {
                   const Rational& t = need_t(topt);
                   const std::uint32_t p = env.p();
                   const auto n = env.half();
                   auto lhs = env.s1(t, 0);
                   auto head = env.div_p(env.w(n, Rational(1) - Rational(8) * t) - env.pow(env.num(Rational(-16) * t), n));
                   auto tail = env.num(1, 64) * env.ppow(2) * env.pow(env.num(Rational(-1) / t), (p + 1) / 2) *
                               env.rhs_lucas(LucasSeq::V, Rational(2) - Rational(16) * t, 3);
                   return std::pair{lhs, head + tail};
                 });
  add_congruence(reg,
                 {"T32.second", "(-1)^n (1 + S2(t,0)) = w_n(8t-1) + p^2/(2t^n) sum u_k(2-16t)/k^2 mod p^3",
                  "S1/S2 via w_n", 3, 3, 5, {}, true},
                 [](auto& env, const OptionalT& topt) {
                   const Rational& t = need_t(topt);
                   const auto n = env.half();
                   auto lhs = env.num(env.eps()) * (env.num(1) + env.s2(t, 0));
                   auto rhs = env.w(n, Rational(8) * t - Rational(1)) +
                              env.num(1, 2) * env.ppow(2) * env.pow(env.num(t.inverse()), n) *
                                  env.rhs_lucas(LucasSeq::U, Rational(2) - Rational(16) * t, 2);
                   return std::pair{lhs, rhs};
                 });
  add_congruence(reg,
                 {"T34.first",
                  "S1(t^2/16,1) = ((-1)^n (v_p(t) - t^p) + 2p sum_{k<n} (-1)^k v_{2k+1}(t)/(2k+1)) / (t p^2) mod p^2",
                  "polynomial congruences at t^2/16", 2, 4, 3, {}, true},
                 [](auto& env, const OptionalT& topt) {
                   const Rational& t = need_t(topt);
                   const std::uint32_t p = env.p();
                   const auto n = env.half();
                   auto lhs = env.s1(t * t / Rational(16), 1);
                   auto v = env.lucas_terms(2 * n, t).second;
                   auto sum = env.num(0);
                   for (std::uint64_t k = 0; k < n; ++k)
                     sum = sum + env.num(Rational(sign_pow(static_cast<int>(k % 2)), static_cast<std::int64_t>(2 * k + 1))) * v[2 * k + 1];
                   auto numer = env.num(env.eps()) * (env.lucas_v(p, t) - env.pow(env.num(t), p)) +
                                env.num(2) * env.ppow(1) * sum;
                   auto rhs = env.div_p(numer, 2) * env.num(t.inverse());
                   return std::pair{lhs, rhs};
                 });
  add_congruence(reg,
                 {"T34.second", "S2(t^2/16,1) = 4q - 2p q^2 + sum_{k=1}^{n} (-1)^k v_{2k}(t)/k mod p^2, q = q_p(2)",
                  "polynomial congruences at t^2/16", 2, 2, 3, {}, true},
                 [](auto& env, const OptionalT& topt) {
                   const Rational& t = need_t(topt);
                   const auto n = env.half();
                   auto lhs = env.s2(t * t / Rational(16), 1);
                   auto q = env.fermat_q(2);
                   auto v = env.lucas_terms(2 * n, t).second;
                   auto sum = env.num(0);
                   for (std::uint64_t k = 1; k <= n; ++k)
                     sum = sum + env.num(Rational(sign_pow(static_cast<int>(k % 2)), static_cast<std::int64_t>(k))) * v[2 * k];
                   auto rhs = env.num(4) * q - env.num(2) * env.ppow(1) * q * q + sum;
                   return std::pair{lhs, rhs};
                 });
}

// Special values of t and the Fibonacci/Lucas sums.
inline void add_special_value_checks(Registry& reg) {
  auto b3 = [](auto& env) { return env.bernoulli(static_cast<int>(env.p()) - 3); };
  add_congruence(reg, {"C41.a", "S1(1/4,0) = (-1)^{(p+1)/2} (q - p^2 B_{p-3}/16) mod p^3", "S1 at special t", 3, 3, 5},
                 [b3](auto& env, const OptionalT&) {
                   auto q = env.fermat_q(2);
                   auto rhs = env.num(env.eps_plus()) * (q - env.num(1, 16) * env.ppow(2) * b3(env));
                   return std::pair{env.s1(Rational(1, 4), 0), rhs};
                 });
  add_congruence(reg, {"C41.b", "S1(1/16,0) = (-1)^{(p+1)/2} p^2 B_{p-3}/36 mod p^3", "S1 at special t", 3, 3, 5},
                 [b3](auto& env, const OptionalT&) {
                   auto rhs = env.num(env.eps_plus(), 36) * env.ppow(2) * b3(env);
                   return std::pair{env.s1(Rational(1, 16), 0), rhs};
                 });
  add_congruence(reg,
                 {"C41.c", "S1(1/8,0) = (-1)^{(p+1)/2} (2/p) (q/2 - p q^2/8 + p^2 (q^3 - B_{p-3}/8)/16) mod p^3",
                  "S1 at special t", 3, 3, 5},
                 [b3](auto& env, const OptionalT&) {
                   auto q = env.fermat_q(2);
                   auto inner = env.num(1, 2) * q - env.num(1, 8) * env.ppow(1) * q * q +
                                env.num(1, 16) * env.ppow(2) * (q * q * q - env.num(1, 8) * b3(env));
                   auto rhs = env.num(env.eps_plus() * env.legendre(2)) * inner;
                   return std::pair{env.s1(Rational(1, 8), 0), rhs};
                 });
  add_congruence(reg,
                 {"C41.d",
                  "S1(3/16,0) = (-1)^{(p+1)/2} (3/p) (r/2 - p r^2/8 + p^2 (r^3/16 - B_{p-3}/27)) mod p^3, r = q_p(3)",
                  "S1 at special t", 3, 3, 5},
                 [b3](auto& env, const OptionalT&) {
                   auto r = env.fermat_q(3);
                   auto inner = env.num(1, 2) * r - env.num(1, 8) * env.ppow(1) * r * r +
                                env.ppow(2) * (env.num(1, 16) * r * r * r - env.num(1, 27) * b3(env));
                   auto rhs = env.num(env.eps_plus() * env.legendre(3)) * inner;
                   return std::pair{env.s1(Rational(3, 16), 0), rhs};
                 });
  add_congruence(reg,
                 {"C41.e", "S1(-1/32,0) = (2/p) (2q - p q^2 + p^2 (2q^3 - 7 B_{p-3}/32)/3) mod p^3", "S1 at special t", 3,
                  3, 5},
                 [b3](auto& env, const OptionalT&) {
                   auto q = env.fermat_q(2);
                   auto inner = env.num(2) * q - env.ppow(1) * q * q +
                                env.num(1, 3) * env.ppow(2) * (env.num(2) * q * q * q - env.num(7, 32) * b3(env));
                   auto rhs = env.num(env.legendre(2)) * inner;
                   return std::pair{env.s1(Rational(-1, 32), 0), rhs};
                 });
  add_congruence(reg,
                 {"C41.f", "S1(-1/16,0) = q_L - p^2 (q_L^3/2 + B_{p-3})/15 mod p^3, q_L = (L_p - 1)/p",
                  "S1 at special t", 3, 3, 7},
                 [b3](auto& env, const OptionalT&) {
                   auto ql = env.lucas_q();
                   auto rhs = ql - env.num(1, 15) * env.ppow(2) * (env.num(1, 2) * ql * ql * ql + b3(env));
                   return std::pair{env.s1(Rational(-1, 16), 0), rhs};
                 });
  add_congruence(reg,
                 {"C42.a", "sum_{k<=n} C(2k,k)/16^k = (3/p) + (-1/p) p^2 B_{p-2}(1/3)/24 mod p^3", "B_{p-2}(1/3) sums", 3, 3,
                  5, {}, false, 600},
                 [](auto& env, const OptionalT&) {
                   const std::uint32_t p = env.p();
                   auto lhs = env.num(1) + env.s2(Rational(1, 16), 0);
                   auto rhs = env.num(env.legendre(3)) + env.num(env.legendre(-1), 24) * env.ppow(2) *
                                                             env.bernoulli_poly(static_cast<int>(p) - 2, Rational(1, 3));
                   return std::pair{lhs, rhs};
                 });
  add_congruence(reg,
                 {"C42.b", "sum_{k<=n} C(2k,k) (3/16)^k = 1 + (-3/p) p^2 B_{p-2}(1/3)/12 mod p^3", "B_{p-2}(1/3) sums", 3,
                  3, 5, {}, false, 600},
                 [](auto& env, const OptionalT&) {
                   const std::uint32_t p = env.p();
                   auto lhs = env.num(1) + env.s2(Rational(3, 16), 0);
                   auto rhs = env.num(1) + env.num(env.legendre(-3), 12) * env.ppow(2) *
                                               env.bernoulli_poly(static_cast<int>(p) - 2, Rational(1, 3));
                   return std::pair{lhs, rhs};
                 });
  add_congruence(reg,
                 {"T43.F", "sum_{k<n} C(2k,k) F_{2k+1}/((2k+1) 16^k) = (-1)^{(p+1)/2} (F_p - (p/5))/p mod p^2",
                  "Fibonacci/Lucas weighted sums", 2, 3, 3, {5}},
                 [](auto& env, const OptionalT&) {
                   const std::uint32_t p = env.p();
                   auto rhs = env.num(env.eps_plus()) *
                              env.div_p(env.fibonacci(p) - env.num(congrlab::legendre(static_cast<std::int64_t>(p), 5)));
                   return std::pair{env.fib_lucas(FibLucas::F), rhs};
                 });
  add_congruence(reg,
                 {"T43.L", "sum_{k<n} C(2k,k) L_{2k+1}/((2k+1) 16^k) = (-1)^{(p+1)/2} (L_p - 1)/p mod p^2",
                  "Fibonacci/Lucas weighted sums", 2, 3, 3, {5}},
                 [](auto& env, const OptionalT&) {
                   const std::uint32_t p = env.p();
                   auto rhs = env.num(env.eps_plus()) * env.div_p(env.lucas_number(p) - env.num(1));
                   return std::pair{env.fib_lucas(FibLucas::L), rhs};
                 });
  add_congruence(reg,
                 {"C45.a", "S1(1/4,1) = (-1)^{(p+1)/2} (q^2/2 - p q^3/3 - p B_{p-3}/16) mod p^2", "t = 1/4 with d = 1", 2, 2,
                  3},
                 [b3](auto& env, const OptionalT&) {
                   auto q = env.fermat_q(2);
                   auto rhs = env.num(env.eps_plus()) * (env.num(1, 2) * q * q - env.num(static_cast<std::int64_t>(env.p()), 3) * q * q * q -
                                                         env.num(1, 16) * env.ppow(1) * b3(env));
                   return std::pair{env.s1(Rational(1, 4), 1), rhs};
                 });
  add_congruence(reg,
                 {"C45.b", "S2(1/4,1) = 2q - p q^2 + (-1)^{(p+1)/2} 2p E_{p-3} mod p^2", "t = 1/4 with d = 1", 2, 2, 3},
                 [](auto& env, const OptionalT&) {
                   auto q = env.fermat_q(2);
                   auto rhs = env.num(2) * q - env.ppow(1) * q * q +
                              env.num(2 * env.eps_plus()) * env.ppow(1) * env.euler(static_cast<int>(env.p()) - 3);
                   return std::pair{env.s2(Rational(1, 4), 1), rhs};
                 });
}

// Deeper congruences for t = +-1/16, powers a^n and the Rodriguez-Villegas sum.
inline void add_deep_checks(Registry& reg) {
  add_congruence(reg,
                 {"TM.mc1", "S1(1/16,0) = (-1)^n (H_{p-1}(1)/12 + 3/160 p^4 B_{p-5}) mod p^5", "t = +-1/16 to high powers", 5, 5, 7},
                 [](auto& env, const OptionalT&) {
                   const std::uint32_t p = env.p();
                   auto rhs = env.num(env.eps()) * (env.num(1, 12) * env.H(p - 1, {1}) +
                                                    env.num(3, 160) * env.ppow(4) * env.bernoulli(static_cast<int>(p) - 5));
                   return std::pair{env.s1(Rational(1, 16), 0), rhs};
                 });
  add_congruence(reg,
                 {"TM.mc2", "S1(-1/16,1) = H_{p-1}(1)/(5p) + 7/200 p^3 B_{p-5} mod p^4", "t = +-1/16 to high powers", 4, 5, 7},
                 [](auto& env, const OptionalT&) {
                   const std::uint32_t p = env.p();
                   auto rhs = env.num(1, 5) * env.div_p(env.H(p - 1, {1})) +
                              env.num(7, 200) * env.ppow(3) * env.bernoulli(static_cast<int>(p) - 5);
                   return std::pair{env.s1(Rational(-1, 16), 1), rhs};
                 });
  add_congruence(reg,
                 {"C52", "sum_{k<n} C(2k,k) Hbar_k(2)/((2k+1) 16^k) = (-1)^n H_{p-1}(1)/(12 p^2) mod p^2",
                  "Hbar_k(2)-weighted sum at 1/16", 2, 4, 7},
                 [](auto& env, const OptionalT&) {
                   const std::uint32_t p = env.p();
                   auto rhs = env.num(env.eps(), 12) * env.div_p(env.H(p - 1, {1}), 2);
                   return std::pair{env.weighted(Rational(1, 16)).first, rhs};
                 });
  for (int a : {2, 3, 5}) {
    add_congruence(reg,
                   {num_id("eq11", {{"a", a}}), "a^n = (a/p) (1 + p q/2 - p^2 q^2/8 + p^3 q^3/16) mod p^4, q = q_p(a)",
                    "special values of w_n", 4, 4, 3, {static_cast<std::uint32_t>(a)}},
                   [a](auto& env, const OptionalT&) {
                     auto q = env.fermat_q(a);
                     auto lhs = env.pow(env.num(a), env.half());
                     auto inner = env.num(1) + env.num(1, 2) * env.ppow(1) * q - env.num(1, 8) * env.ppow(2) * q * q +
                                  env.num(1, 16) * env.ppow(3) * q * q * q;
                     return std::pair{lhs, env.num(env.legendre(a)) * inner};
                   });
  }
  add_congruence(reg, {"rv", "sum_{k<=n} C(2k,k)^2/16^k = (-1)^n mod p^2", "squared central binomial sum", 2, 2, 3},
                 [](auto& env, const OptionalT&) {
                   const auto n = env.half();
                   auto sum = env.num(0);
                   auto scale = env.num(1);
                   const auto inv16 = env.num(1, 16);
                   for (std::uint64_t k = 0; k <= n; ++k) {
                     auto c = env.central_binom(k);
                     sum = sum + c * c * scale;
                     scale = scale * inv16;
                   }
                   return std::pair{sum, env.num(env.eps())};
                 });
}

}  // namespace detail

inline void add_builtin_congruences(Registry& reg) {
  detail::add_harmonic_checks(reg);
  detail::add_half_range_checks(reg);
  detail::add_odd_sum_checks(reg);
  detail::add_t_checks(reg);
  detail::add_special_value_checks(reg);
  detail::add_deep_checks(reg);
}

}  // namespace congrlab
