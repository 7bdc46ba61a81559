#include <gtest/gtest.h>

#include <random>

#include "congrlab/harmonic.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace congrlab;

namespace {

Rational q(long a, long b = 1) { return Rational(BigInt(a), BigInt(b)); }
const Rational kQ;

Composition random_composition(std::mt19937_64& rng, int max_depth, int max_part) {
  std::vector<int> parts(rng() % (max_depth + 1));
  for (auto& a : parts) a = 1 + static_cast<int>(rng() % max_part);
  return Composition(std::move(parts));
}

}  // namespace

TEST(Mhs, Examples) {
  EXPECT_EQ(mhs(4, {1}, kQ), q(25, 12));
  EXPECT_EQ(mhs(0, {1, 2}, kQ), q(0));
  EXPECT_EQ(mhs(5, Composition{}, kQ), q(1));
  EXPECT_EQ(mhs(0, Composition{}, kQ), q(1));
}

TEST(Mhs, FirstExponentOnSmallestIndex) {
  EXPECT_EQ(mhs(3, {1, 2}, kQ), q(5, 12));
  EXPECT_NE(mhs(3, {1, 2}, kQ), q(7, 24));
  EXPECT_EQ(mhs(3, {2, 1}, kQ), q(11, 12));
}

TEST(OddMhs, Examples) {
  EXPECT_EQ(odd_mhs(2, {1}, kQ), q(4, 3));
  EXPECT_EQ(odd_mhs(2, {2}, kQ), q(10, 9));
  EXPECT_EQ(odd_mhs(7, Composition{}, kQ), q(1));
}

TEST(Composition, Repeated) {
  EXPECT_EQ(repeated(2, 3), Composition({2, 2, 2}));
  EXPECT_TRUE(repeated(2, 0).empty());
  EXPECT_EQ(repeated(4, 1), Composition({4}));
  EXPECT_EQ(repeated(3, 2).weight(), 6);
  EXPECT_EQ(error_kind([] { Composition({1, 0}); }), ErrorKind::InvalidArgument);
}

TEST(AlternatingHalfSum, Examples) {
  EXPECT_EQ(alternating_half_sum(2, 1, true, kQ), q(2, 3));
  EXPECT_EQ(alternating_half_sum(2, 1, false, kQ), q(-1, 2));
  EXPECT_EQ(alternating_half_sum(0, 3, true, kQ), q(0));
  EXPECT_EQ(alternating_half_sum(3, 2, true, kQ), q(1) - q(1, 9) + q(1, 25));
}

TEST(Mhs, NonUnitDenominatorInModularRing) {
  auto ring = make_ring(7, 2);
  EXPECT_EQ(error_kind([&] { mhs(7, {1}, ring); }), ErrorKind::NonUnitDenominator);
  EXPECT_EQ(error_kind([&] { odd_mhs(4, {1}, ring); }), ErrorKind::NonUnitDenominator);
  EXPECT_NO_THROW(mhs(6, {1}, ring));
  EXPECT_NO_THROW(odd_mhs(3, {1}, ring));
}

TEST(Mhs, DynamicProgrammingMatchesBruteForce) {
  for (std::uint64_t n = 0; n <= 12; ++n) {
    for (int depth = 0; depth <= 3; ++depth) {
      std::vector<int> parts(depth, 1);
      for (;;) {
        Composition c(parts);
        ASSERT_EQ(mhs(n, c, kQ), oracle::brute_mhs(n, parts)) << n << c.to_string();
        ASSERT_EQ(odd_mhs(n, c, kQ), oracle::brute_odd_mhs(n, parts)) << n << c.to_string();
        std::size_t i = 0;
        while (i < parts.size() && parts[i] == 3) parts[i++] = 1;
        if (i == parts.size()) break;
        ++parts[i];
      }
    }
  }
}

TEST(Mhs, PrefixesMatchPointValues) {
  auto pre = mhs_prefix(9, {2, 1}, kQ);
  auto opre = odd_mhs_prefix(9, {1, 3}, kQ);
  for (std::uint64_t m = 0; m <= 9; ++m) {
    ASSERT_EQ(pre[m], mhs(m, {2, 1}, kQ));
    ASSERT_EQ(opre[m], odd_mhs(m, {1, 3}, kQ));
  }
}

TEST(Mhs, ModularAgreesWithExactReduction) {
  std::mt19937_64 rng(31);
  for (std::uint32_t p : {5u, 7u, 11u, 13u, 29u, 31u}) {
    auto ring = make_ring(p, 6);
    for (int i = 0; i < 30; ++i) {
      auto c = random_composition(rng, 3, 4);
      std::uint64_t n = rng() % p;
      std::uint64_t n_odd = rng() % ((p + 1) / 2);
      ASSERT_EQ(mhs(n, c, ring), rational_residue(mhs(n, c, kQ), ring));
      ASSERT_EQ(odd_mhs(n_odd, c, ring), rational_residue(odd_mhs(n_odd, c, kQ), ring));
    }
  }
}

TEST(Mhs, ShuffleProduct) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 300; ++i) {
    std::uint64_t n = rng() % 51;
    int a = 1 + static_cast<int>(rng() % 4), b = 1 + static_cast<int>(rng() % 4);
    ASSERT_EQ(mhs(n, {a}, kQ) * mhs(n, {b}, kQ), mhs(n, {a, b}, kQ) + mhs(n, {b, a}, kQ) + mhs(n, {a + b}, kQ));
    ASSERT_EQ(odd_mhs(n, {a}, kQ) * odd_mhs(n, {b}, kQ),
              odd_mhs(n, {a, b}, kQ) + odd_mhs(n, {b, a}, kQ) + odd_mhs(n, {a + b}, kQ));
  }
  const std::vector<std::uint32_t> primes = {103, 211, 1009, 65537};
  for (int i = 0; i < 100; ++i) {
    auto ring = make_ring(primes[rng() % primes.size()], 1 + static_cast<int>(rng() % 8));
    std::uint64_t n = rng() % 51;
    int a = 1 + static_cast<int>(rng() % 4), b = 1 + static_cast<int>(rng() % 4);
    ASSERT_EQ(mhs(n, {a}, ring) * mhs(n, {b}, ring), mhs(n, {a, b}, ring) + mhs(n, {b, a}, ring) + mhs(n, {a + b}, ring));
    ASSERT_EQ(odd_mhs(n, {a}, ring) * odd_mhs(n, {b}, ring),
              odd_mhs(n, {a, b}, ring) + odd_mhs(n, {b, a}, ring) + odd_mhs(n, {a + b}, ring));
  }
}

TEST(Mhs, OddSumsViaFullSums) {
  for (std::uint64_t n = 1; n <= 40; ++n)
    for (int r = 1; r <= 5; ++r)
      ASSERT_EQ(odd_mhs(n, {r}, kQ), mhs(2 * n, {r}, kQ) - mhs(n, {r}, kQ) / q(2).pow(r)) << n << " " << r;
}

TEST(Mhs, Wolstenholme) {
  for (std::uint32_t p = 5; p <= 200; ++p) {
    if (!is_prime(p)) continue;
    if (p <= 60) {
      EXPECT_GE(p_adic_valuation(mhs(p - 1, {1}, kQ), p), 2) << p;
    } else {
      EXPECT_GE(valuation(mhs(p - 1, {1}, make_ring(p, 3))), 2) << p;
    }
  }
}
