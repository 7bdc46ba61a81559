#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "congrlab/congrlab.hpp"
#include "test_util.hpp"

using namespace congrlab;

namespace {

Rational q(long a, long b = 1) { return Rational(BigInt(a), BigInt(b)); }

const Registry& registry() {
  static const Registry reg = builtin_checks();
  return reg;
}

std::vector<std::int64_t> params(std::initializer_list<std::int64_t> xs) { return xs; }

// A one-check registry whose evaluator is supplied by the test.
template <class F>
CongruenceCheck ad_hoc(const std::string& id, int target, int working, std::uint32_t min_prime, F f) {
  Registry reg;
  detail::add_congruence(reg, {id, "test variant", "test", target, working, min_prime}, f);
  return reg.congruences.front();
}

}  // namespace

TEST(Registry, CountsAndUniqueIds) {
  const auto& reg = registry();
  EXPECT_GE(reg.congruences.size(), 40u);
  EXPECT_GE(reg.identities.size(), 12u);
  std::set<std::string> ids;
  for (const auto& c : reg.congruences) EXPECT_TRUE(ids.insert(c.id).second) << c.id;
  for (const auto& c : reg.identities) EXPECT_TRUE(ids.insert(c.id).second) << c.id;
}

TEST(Registry, EveryListedStatementIsPresent) {
  const auto& reg = registry();
  for (const char* id : {"iv", "v", "vi.1", "T22", "C23.a", "C23.d", "L26.alts", "C27.morley", "L31.A2", "L31.A3",
                         "T32.first", "T32.second", "T34.first", "T34.second", "C41.a", "C41.f", "C42.a", "C42.b",
                         "T43.F", "T43.L", "C45.a", "C45.b", "TM.mc1", "TM.mc2", "C52", "rv"})
    EXPECT_NE(reg.find_congruence(id), nullptr) << id;
  for (const char* id : {"L25.exact", "L26.wz1", "L26.wz2", "CCC", "A.exact", "eq15.exact", "P33.intu", "P33.intu1",
                         "eq08b.exact", "S5.idodd", "S5.ideven", "T43.w1w2", "eq12.eq13"})
    EXPECT_NE(reg.find_identity(id), nullptr) << id;
}

TEST(Registry, LookupTargets) {
  EXPECT_EQ(registry().lookup("TM.mc1").target_exponent, 5);
  EXPECT_EQ(registry().lookup("C27.morley").target_exponent, 6);
  EXPECT_EQ(registry().lookup("TM.mc2").target_exponent, 4);
  EXPECT_EQ(registry().lookup("TM.mc2").working_exponent, 5);
  EXPECT_EQ(registry().lookup("T32.first").working_exponent, 4);
  EXPECT_EQ(registry().lookup("T43.F").working_exponent, 3);
  EXPECT_TRUE(registry().lookup("T43.F").excluded_primes.contains(5));
  EXPECT_EQ(registry().lookup("C42.a").default_max_prime, 600u);
  EXPECT_EQ(error_kind([] { registry().lookup("nope"); }), ErrorKind::InvalidArgument);
}

TEST(Registry, WorkingExponentCoversTarget) {
  for (const auto& c : registry().congruences) EXPECT_GE(c.working_exponent, c.target_exponent) << c.id;
}

TEST(RunCongruence, WorkedValues) {
  auto mc1 = run_congruence(registry().lookup("TM.mc1"), 7);
  EXPECT_EQ(mc1.status, Status::Pass);
  EXPECT_GE(mc1.valuation, 5);

  auto morley = run_congruence(registry().lookup("C27.morley"), 7);
  EXPECT_EQ(morley.status, Status::Pass);
  EXPECT_GE(morley.valuation, 6);

  auto c41 = run_congruence(registry().lookup("C41.a"), 5);
  EXPECT_EQ(c41.status, Status::Pass);
  EXPECT_EQ(c41.lhs, "22");
  EXPECT_EQ(c41.rhs, "22");

  auto t34 = run_congruence(registry().lookup("T34.second"), 5, q(1));
  EXPECT_EQ(t34.status, Status::Pass);
  EXPECT_EQ(t34.lhs, "10");
  EXPECT_EQ(t34.rhs, "10");

  auto t43 = run_congruence(registry().lookup("T43.F"), 7);
  EXPECT_EQ(t43.status, Status::Pass);
  EXPECT_EQ(t43.lhs, "2");
  EXPECT_EQ(t43.rhs, "2");
}

TEST(RunCongruence, ExactBackendSharpness) {
  auto mc1 = run_congruence(registry().lookup("TM.mc1"), 7, std::nullopt, EvalMode::Exact);
  EXPECT_EQ(mc1.valuation, 5);
  EXPECT_EQ(mc1.lhs, "2009/1920");
  EXPECT_EQ(Rational::parse(mc1.rhs), -(q(49, 240) + q(2401, 320)));
  EXPECT_EQ(Rational::parse(mc1.lhs) - Rational::parse(mc1.rhs), q(16807, 1920));

  auto morley = run_congruence(registry().lookup("C27.morley"), 7, std::nullopt, EvalMode::Exact);
  EXPECT_EQ(morley.valuation, 6);
  auto diff = Rational::parse(morley.lhs) - Rational::parse(morley.rhs);
  EXPECT_TRUE(diff == q(117649, 3072) || diff == q(-117649, 3072)) << diff.to_string();
}

TEST(RunCongruence, ExactAndModularBackendsAgree) {
  for (const auto& check : registry().congruences) {
    for (std::uint32_t p : {7u, 11u, 13u}) {
      if (!check.applies_to(p)) continue;
      std::vector<OptionalT> ts{std::nullopt};
      if (check.t_panel) {
        ts.clear();
        for (const auto& t : *check.t_panel)
          if (t_admissible(t, p)) ts.push_back(t);
      }
      for (const auto& t : ts) {
        auto m = run_congruence(check, p, t, EvalMode::Modular);
        auto e = run_congruence(check, p, t, EvalMode::Exact);
        ASSERT_EQ(m.status, Status::Pass) << check.id << " p=" << p << " " << m.message;
        ASSERT_EQ(e.status, Status::Pass) << check.id << " p=" << p << " " << e.message;
        if (!m.valuation_capped) {
          ASSERT_EQ(m.valuation, e.valuation) << check.id << " p=" << p;
        }
      }
    }
  }
}

TEST(RunCongruence, Preconditions) {
  const auto& mc1 = registry().lookup("TM.mc1");
  EXPECT_EQ(error_kind([&] { run_congruence(mc1, 5); }), ErrorKind::PreconditionViolated);
  EXPECT_EQ(error_kind([&] { run_congruence(mc1, 9); }), ErrorKind::PreconditionViolated);
  EXPECT_EQ(error_kind([&] { run_congruence(mc1, 7, q(1)); }), ErrorKind::PreconditionViolated);
  const auto& t32 = registry().lookup("T32.first");
  EXPECT_EQ(error_kind([&] { run_congruence(t32, 7); }), ErrorKind::PreconditionViolated);
  EXPECT_EQ(error_kind([&] { run_congruence(t32, 7, q(1, 7)); }), ErrorKind::PreconditionViolated);
  EXPECT_EQ(error_kind([&] { run_congruence(registry().lookup("T43.F"), 5); }), ErrorKind::PreconditionViolated);
}

// Coefficient 7/20 in place of 7/200 misses by a full power of p.
TEST(Errata, MixedConstantCoefficient) {
  auto variant = [](Rational coeff) {
    return ad_hoc("mc2.variant", 4, 5, 7, [coeff](auto& env, const OptionalT&) {
      const std::uint32_t p = env.p();
      auto rhs = env.num(1, 5) * env.div_p(env.H(p - 1, {1})) +
                 env.num(coeff) * env.ppow(3) * env.bernoulli(static_cast<int>(p) - 5);
      return std::pair{env.s1(Rational(-1, 16), 1), rhs};
    });
  };
  auto wrong = run_congruence(variant(q(7, 20)), 11);
  EXPECT_EQ(wrong.status, Status::Fail);
  EXPECT_EQ(wrong.valuation, 3);
  EXPECT_EQ(run_congruence(variant(q(7, 200)), 11).status, Status::Pass);
}

// The character in front of B_{p-2}(1/3) must be (-1/p); (1/p) = 1 fails at p = 7.
TEST(Errata, BernoulliPolynomialCharacter) {
  auto variant = [](bool use_minus_one) {
    return ad_hoc("c42.variant", 3, 3, 5, [use_minus_one](auto& env, const OptionalT&) {
      const std::uint32_t p = env.p();
      auto chi = use_minus_one ? env.legendre(-1) : env.legendre(1);
      auto lhs = env.num(1) + env.s2(Rational(1, 16), 0);
      auto rhs = env.num(env.legendre(3)) +
                 env.num(chi, 24) * env.ppow(2) * env.bernoulli_poly(static_cast<int>(p) - 2, Rational(1, 3));
      return std::pair{lhs, rhs};
    });
  };
  EXPECT_EQ(run_congruence(variant(false), 7).status, Status::Fail);
  EXPECT_EQ(run_congruence(variant(true), 7).status, Status::Pass);
}

TEST(RunCongruence, NotDivisibleIsReportedAsError) {
  auto broken = ad_hoc("broken", 1, 2, 3, [](auto& env, const OptionalT&) {
    return std::pair{env.div_p(env.num(1)), env.num(0)};
  });
  auto r = run_congruence(broken, 7);
  EXPECT_EQ(r.status, Status::Error);
  EXPECT_NE(r.message.find("divisible"), std::string::npos) << r.message;
}

TEST(RunCongruence, PrecisionShortfallIsError) {
  auto starved = ad_hoc("starved", 3, 3, 3, [](auto& env, const OptionalT&) {
    // Bernoulli values are only known mod p.
    return std::pair{env.bernoulli(4), env.bernoulli(4)};
  });
  EXPECT_EQ(run_congruence(starved, 7).status, Status::Error);
}

TEST(RunIdentity, WorkedValues) {
  auto wz = run_identity(*registry().find_identity("L26.wz1"), params({1}));
  EXPECT_EQ(wz.status, Status::Pass);
  EXPECT_EQ(wz.lhs, "-5/3");
  EXPECT_EQ(wz.rhs, "-5/3");
  EXPECT_EQ(wz.valuation, kInfiniteValuation);

  auto s5 = run_identity(*registry().find_identity("S5.idodd"), params({2, 1}));
  EXPECT_EQ(s5.status, Status::Pass);
  EXPECT_EQ(s5.lhs, "25/32");

  auto intu = run_identity(*registry().find_identity("P33.intu"), params({1}));
  EXPECT_EQ(intu.status, Status::Pass);
  EXPECT_EQ(intu.lhs, intu.rhs);
  EXPECT_EQ(intu.lhs, (Poly(std::vector<Rational>{q(0), q(3), q(0), q(-1, 3)})).to_string());
}

TEST(Primes, Sieve) {
  EXPECT_EQ(primes_in_range(7, 30), (std::vector<std::uint32_t>{7, 11, 13, 17, 19, 23, 29}));
  EXPECT_TRUE(primes_in_range(24, 28).empty());
  EXPECT_TRUE(primes_in_range(10, 5).empty());
  EXPECT_EQ(primes_in_range(7, 1000).size(), 165u);
  EXPECT_EQ(primes_in_range(7, 100).size(), 22u);
}

TEST(Filter, Patterns) {
  EXPECT_TRUE(matches_filter({"all"}, "TM.mc1"));
  EXPECT_TRUE(matches_filter({"TM.*"}, "TM.mc2"));
  EXPECT_TRUE(matches_filter({"TM.mc1"}, "TM.mc1"));
  EXPECT_FALSE(matches_filter({"TM.mc1"}, "TM.mc2"));
  EXPECT_TRUE(matches_filter({"C41"}, "C41.a"));
  EXPECT_FALSE(matches_filter({"C4"}, "C41.a"));
  EXPECT_TRUE(matches_filter({"x", "T43.*"}, "T43.L"));
}

TEST(RunSuite, HighPowerPairSweep) {
  SuiteConfig cfg;
  cfg.prime_lo = 7;
  cfg.prime_hi = 100;
  cfg.patterns = {"TM.*"};
  cfg.jobs = 4;
  auto report = run_suite(registry(), cfg);
  // 22 primes in 7..100, all above 5.
  EXPECT_EQ(report.results.size(), 2u * 22u);
  EXPECT_EQ(report.worst(), Status::Pass);
  EXPECT_EQ(report.summary().size(), 2u);
}

TEST(RunSuite, EmptyRange) {
  SuiteConfig cfg;
  cfg.prime_lo = 24;
  cfg.prime_hi = 28;
  cfg.patterns = {"TM.*"};
  auto report = run_suite(registry(), cfg);
  EXPECT_TRUE(report.results.empty());
  EXPECT_EQ(report.worst(), Status::Pass);
  EXPECT_EQ(error_kind([&] {
              SuiteConfig bad;
              bad.prime_lo = 2;
              run_suite(registry(), bad);
            }),
            ErrorKind::InvalidArgument);
}

TEST(RunSuite, ExcludedPrimeNeverScheduled) {
  SuiteConfig cfg;
  cfg.prime_lo = 3;
  cfg.prime_hi = 50;
  cfg.patterns = {"T43.*"};
  cfg.include_identities = false;
  auto report = run_suite(registry(), cfg);
  EXPECT_FALSE(report.results.empty());
  for (const auto& r : report.results) {
    EXPECT_NE(r.prime, 5u);
    EXPECT_EQ(r.status, Status::Pass) << r.name() << " " << *r.prime;
  }
}

TEST(RunSuite, CapAndOverride) {
  SuiteConfig cfg;
  cfg.prime_lo = 590;
  cfg.prime_hi = 620;
  cfg.patterns = {"C42.a"};
  auto capped = run_suite(registry(), cfg);
  for (const auto& r : capped.results) EXPECT_LE(*r.prime, 600u);
  cfg.no_cap = true;
  auto full = run_suite(registry(), cfg);
  EXPECT_GT(full.results.size(), capped.results.size());
  EXPECT_EQ(full.worst(), Status::Pass);
}

TEST(RunSuite, PanelOverride) {
  SuiteConfig cfg;
  cfg.prime_lo = 7;
  cfg.prime_hi = 13;
  cfg.patterns = {"T32.first"};
  cfg.t_panel_override = std::vector<Rational>{q(2, 7), q(9, 5)};
  auto report = run_suite(registry(), cfg);
  // p = 7 rejects 2/7, so 1 + 2 + 2 runs.
  EXPECT_EQ(report.results.size(), 5u);
  EXPECT_EQ(report.worst(), Status::Pass);
}

TEST(RunSuite, FailFastStopsEarly) {
  Registry reg;
  detail::add_congruence(reg, {"always.fails", "1 = 2", "test", 1, 1, 3}, [](auto& env, const OptionalT&) {
    return std::pair{env.num(1), env.num(2)};
  });
  SuiteConfig cfg;
  cfg.prime_lo = 3;
  cfg.prime_hi = 1000;
  cfg.fail_fast = true;
  auto report = run_suite(reg, cfg);
  EXPECT_EQ(report.worst(), Status::Fail);
  EXPECT_TRUE(report.interrupted);
  EXPECT_LT(report.results.size(), primes_in_range(3, 1000).size());
  cfg.fail_fast = false;
  EXPECT_EQ(run_suite(reg, cfg).results.size(), primes_in_range(3, 1000).size());
}

TEST(RunSuite, DeterministicAcrossWorkerCounts) {
  SuiteConfig cfg;
  cfg.prime_lo = 7;
  cfg.prime_hi = 120;
  std::string reference;
  for (unsigned jobs : {1u, 3u, 8u}) {
    cfg.jobs = jobs;
    std::ostringstream out;
    emit_report(run_suite(registry(), cfg), ReportFormat::Json, out);
    if (reference.empty()) reference = out.str();
    else EXPECT_EQ(out.str(), reference) << "jobs=" << jobs;
  }
}

TEST(Sweep, AllCongruencesUpTo300) {
  SuiteConfig cfg;
  cfg.prime_lo = 3;
  cfg.prime_hi = 300;
  cfg.include_identities = false;
  cfg.jobs = 4;
  auto report = run_suite(registry(), cfg);
  for (const auto& r : report.results)
    EXPECT_EQ(r.status, Status::Pass) << r.name() << " p=" << *r.prime << (r.t ? " t=" + r.t->to_string() : "") << " "
                                      << r.message;
}
