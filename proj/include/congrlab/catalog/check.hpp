#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "congrlab/catalog/env.hpp"
#include "congrlab/catalog/padic.hpp"
#include "congrlab/poly.hpp"
#include "congrlab/quadext.hpp"
#include "congrlab/rational.hpp"

namespace congrlab {

using OptionalT = std::optional<Rational>;

struct CongruenceCheck {
  std::string id;
  std::string description;
  std::string anchor;
  std::uint32_t min_prime = 3;
  std::set<std::uint32_t> excluded_primes;
  int target_exponent = 1;
  int working_exponent = 1;
  std::optional<std::vector<Rational>> t_panel;
  // Sweeps stop here unless the cap is lifted.
  std::optional<std::uint32_t> default_max_prime;
  std::function<std::pair<PAdic, PAdic>(ModularEnv&, const OptionalT&)> modular;
  std::function<std::pair<Rational, Rational>(ExactEnv&, const OptionalT&)> exact;

  bool applies_to(std::uint32_t p) const { return p >= min_prime && !excluded_primes.contains(p); }
};

using ExactValue = std::variant<Rational, Poly, QuadExt>;

inline std::string to_string(const ExactValue& v) {
  return std::visit([](const auto& x) { return x.to_string(); }, v);
}

struct IdentityCheck {
  std::string id;
  std::string description;
  std::string anchor;
  std::vector<std::string> param_names;
  std::vector<std::vector<std::int64_t>> param_sets;
  std::function<std::pair<ExactValue, ExactValue>(std::span<const std::int64_t>)> evaluator;
  // Optional pretty form of one parameter tuple; default "name=value,...".
  std::function<std::string(std::span<const std::int64_t>)> label;

  std::string params_label(std::span<const std::int64_t> params) const {
    if (label) return label(params);
    std::string s;
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) s += ",";
      s += (i < param_names.size() ? param_names[i] : "arg") + "=" + std::to_string(params[i]);
    }
    return s;
  }
  bool has_prime_param() const { return !param_names.empty() && param_names.front() == "p"; }
};

struct Registry {
  std::vector<CongruenceCheck> congruences;
  std::vector<IdentityCheck> identities;

  const CongruenceCheck* find_congruence(const std::string& id) const {
    for (const auto& c : congruences)
      if (c.id == id) return &c;
    return nullptr;
  }
  const IdentityCheck* find_identity(const std::string& id) const {
    for (const auto& c : identities)
      if (c.id == id) return &c;
    return nullptr;
  }
  const CongruenceCheck& lookup(const std::string& id) const {
    if (auto* c = find_congruence(id)) return *c;
    throw Error(ErrorKind::InvalidArgument, "no congruence check '" + id + "'");
  }
};

inline std::vector<Rational> standard_t_panel() {
  return {Rational(1, 4) , Rational(-1, 4), Rational(1, 8),  Rational(1, 16), Rational(-1, 16),
          Rational(3, 16), Rational(-1, 32), Rational(1, 2), Rational(1),     Rational(2),
          Rational(3),     Rational(-1),     Rational(5, 3)};
}

// Both numerator and denominator of t must be prime to p.
inline bool t_admissible(const Rational& t, std::uint32_t p) {
  return !mpz_divisible_ui_p(t.num_ref().get_mpz_t(), p) && !mpz_divisible_ui_p(t.den_ref().get_mpz_t(), p);
}

}  // namespace congrlab
