#pragma once

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "congrlab/catalog/check.hpp"
#include "congrlab/error.hpp"
#include "congrlab/modring.hpp"

namespace congrlab {

enum class Status { Pass, Fail, Error };
enum class EvalMode { Modular, Exact };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Error: return "ERROR";
  }
  return "?";
}

struct CheckResult {
  std::string check_id;
  std::vector<std::int64_t> params;
  std::string params_label;
  std::optional<std::uint32_t> prime;
  std::optional<Rational> t;
  std::optional<int> target;
  Valuation valuation = 0;
  // The difference vanished at the available precision; the true valuation is at least this.
  bool valuation_capped = false;
  Status status = Status::Error;
  std::string lhs;
  std::string rhs;
  std::string message;
  std::int64_t elapsed_us = 0;

  bool pass() const { return status == Status::Pass; }
  std::string name() const { return params_label.empty() ? check_id : check_id + "[" + params_label + "]"; }
};

namespace detail {

class Stopwatch {
 public:
  std::int64_t micros() const {
    return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace detail

inline CheckResult run_congruence(const CongruenceCheck& check, std::uint32_t p, const OptionalT& t = std::nullopt,
                                  EvalMode mode = EvalMode::Modular) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorKind::PreconditionViolated, std::to_string(p) + " is not an odd prime");
  if (!check.applies_to(p))
    throw Error(ErrorKind::PreconditionViolated, check.id + " does not apply to p = " + std::to_string(p));
  if (check.t_panel.has_value() != t.has_value())
    throw Error(ErrorKind::PreconditionViolated, check.id + (t ? " takes no parameter t" : " needs a parameter t"));
  if (t && !t_admissible(*t, p))
    throw Error(ErrorKind::PreconditionViolated, "t = " + t->to_string() + " is not prime to " + std::to_string(p));

  CheckResult res;
  res.check_id = check.id;
  res.prime = p;
  res.t = t;
  res.target = check.target_exponent;
  detail::Stopwatch clock;
  try {
    if (mode == EvalMode::Modular) {
      ModularEnv env(p, check.working_exponent);
      auto [lhs, rhs] = check.modular(env, t);
      int prec = std::min(lhs.precision(), rhs.precision());
      if (prec < check.target_exponent) {
        res.status = Status::Error;
        res.message = "PrecisionExhausted: sides known only mod p^" + std::to_string(prec);
      } else {
        PAdic diff = lhs - rhs;
        res.valuation = diff.valuation();
        res.valuation_capped = res.valuation >= diff.precision();
        res.status = res.valuation >= check.target_exponent ? Status::Pass : Status::Fail;
        res.lhs = lhs.reduced(check.target_exponent).to_string();
        res.rhs = rhs.reduced(check.target_exponent).to_string();
      }
    } else {
      ExactEnv env(p);
      auto [lhs, rhs] = check.exact(env, t);
      res.valuation = p_adic_valuation(lhs - rhs, p);
      res.status = res.valuation >= check.target_exponent ? Status::Pass : Status::Fail;
      res.lhs = lhs.to_string();
      res.rhs = rhs.to_string();
    }
  } catch (const std::exception& e) {
    res.status = Status::Error;
    res.message = e.what();
  }
  res.elapsed_us = clock.micros();
  return res;
}

inline CheckResult run_identity(const IdentityCheck& check, std::span<const std::int64_t> params) {
  CheckResult res;
  res.check_id = check.id;
  res.params.assign(params.begin(), params.end());
  res.params_label = check.params_label(params);
  if (check.has_prime_param()) res.prime = static_cast<std::uint32_t>(params[0]);
  detail::Stopwatch clock;
  try {
    auto [lhs, rhs] = check.evaluator(params);
    if (lhs.index() != rhs.index()) throw Error(ErrorKind::PreconditionViolated, "sides of different exact types");
    bool equal = lhs == rhs;
    res.valuation = equal ? kInfiniteValuation : 0;
    res.status = equal ? Status::Pass : Status::Fail;
    res.lhs = to_string(lhs);
    res.rhs = to_string(rhs);
  } catch (const std::exception& e) {
    res.status = Status::Error;
    res.message = e.what();
  }
  res.elapsed_us = clock.micros();
  return res;
}

// Odd primes in [lo, hi] by a sieve.
inline std::vector<std::uint32_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint32_t> out;
  if (hi < 3 || lo > hi) return out;
  if (hi >= (std::uint64_t{1} << 32)) throw Error(ErrorKind::InvalidArgument, "prime range must stay below 2^32");
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i * i <= hi; ++i)
    if (!composite[i])
      for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  for (std::uint64_t n = std::max<std::uint64_t>(lo, 3); n <= hi; ++n)
    if (!composite[n]) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

// "all", a glob, an exact id, or an id prefix followed by '.'.
inline bool matches_filter(const std::vector<std::string>& patterns, const std::string& id) {
  for (const auto& pat : patterns) {
    if (pat == "all" || pat == id) return true;
    if (fnmatch(pat.c_str(), id.c_str(), 0) == 0) return true;
    if (id.size() > pat.size() && id.compare(0, pat.size(), pat) == 0 && id[pat.size()] == '.') return true;
  }
  return false;
}

struct SuiteConfig {
  std::uint64_t prime_lo = 7;
  std::uint64_t prime_hi = 1000;
  std::vector<std::string> patterns{"all"};
  unsigned jobs = 1;
  bool fail_fast = false;
  bool no_cap = false;
  std::optional<std::vector<Rational>> t_panel_override;
  bool include_identities = true;
  EvalMode mode = EvalMode::Modular;
};

struct CheckSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t error = 0;
};

struct Report {
  std::vector<CheckResult> results;
  bool interrupted = false;

  std::map<std::string, CheckSummary> summary() const {
    std::map<std::string, CheckSummary> out;
    for (const auto& r : results) {
      auto& s = out[r.check_id];
      if (r.status == Status::Pass) ++s.pass;
      else if (r.status == Status::Fail) ++s.fail;
      else ++s.error;
    }
    return out;
  }
  Status worst() const {
    Status w = Status::Pass;
    for (const auto& r : results) {
      if (r.status == Status::Error) return Status::Error;
      if (r.status == Status::Fail) w = Status::Fail;
    }
    return w;
  }
};

// Canonical report order: check id, identity parameters, prime, t.
inline void sort_results(std::vector<CheckResult>& results) {
  std::stable_sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
    if (a.check_id != b.check_id) return a.check_id < b.check_id;
    if (a.params != b.params) return a.params < b.params;
    if (a.prime != b.prime) return a.prime < b.prime;
    if (a.t.has_value() != b.t.has_value()) return !a.t.has_value();
    return a.t && *a.t < *b.t;
  });
}

inline Report run_suite(const Registry& registry, const SuiteConfig& config) {
  if (config.prime_lo < 3) throw Error(ErrorKind::InvalidArgument, "prime range must start at 3 or above");
  struct Task {
    const CongruenceCheck* congruence = nullptr;
    const IdentityCheck* identity = nullptr;
    std::uint32_t p = 0;
    OptionalT t;
    std::size_t param_index = 0;
  };
  std::vector<Task> tasks;
  const auto primes = primes_in_range(config.prime_lo, config.prime_hi);
  for (const auto& check : registry.congruences) {
    if (!matches_filter(config.patterns, check.id)) continue;
    for (auto p : primes) {
      if (!check.applies_to(p)) continue;
      if (check.default_max_prime && !config.no_cap && p > *check.default_max_prime) continue;
      if (!check.t_panel) {
        tasks.push_back({&check, nullptr, p, std::nullopt, 0});
        continue;
      }
      const auto& panel = config.t_panel_override ? *config.t_panel_override : *check.t_panel;
      for (const auto& t : panel)
        if (t_admissible(t, p)) tasks.push_back({&check, nullptr, p, t, 0});
    }
  }
  if (config.include_identities) {
    for (const auto& check : registry.identities) {
      if (!matches_filter(config.patterns, check.id)) continue;
      for (std::size_t i = 0; i < check.param_sets.size(); ++i) tasks.push_back({nullptr, &check, 0, std::nullopt, i});
    }
  }

  std::vector<std::optional<CheckResult>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&]() {
    while (!stop.load(std::memory_order_relaxed)) {
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= tasks.size()) return;
      const Task& task = tasks[i];
      CheckResult r = task.congruence ? run_congruence(*task.congruence, task.p, task.t, config.mode)
                                      : run_identity(*task.identity, task.identity->param_sets[task.param_index]);
      if (!r.pass() && config.fail_fast) stop.store(true);
      slots[i] = std::move(r);
    }
  };
  unsigned jobs = std::max(1u, config.jobs);
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(tasks.size(), 1)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  Report report;
  report.results.reserve(tasks.size());
  for (auto& s : slots) {
    if (s) report.results.push_back(std::move(*s));
    else report.interrupted = true;
  }
  sort_results(report.results);
  return report;
}

}  // namespace congrlab
