#include "bsk/facts.hpp"
#include "bsk/laurent_poly.hpp"
#include "bsk/zk_rational.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace bsk;

namespace {

oracle::Poly to_oracle(const LaurentPoly& p) {
  oracle::Poly out;
  for (auto& [d, c] : p.terms()) out[d] = c;
  return out;
}

LaurentPoly lp(std::string_view s) { return LaurentPoly::parse(s); }

}  // namespace

TEST(ZkRational, NormalizeExamples) {
  auto a = ZkRational::normalize(2, 4, 2);
  EXPECT_EQ(a.num(), 1);
  EXPECT_EQ(a.e(), 0);
  auto b = ZkRational::normalize(6, 3, 1);
  EXPECT_EQ(b.num(), 3);
  EXPECT_EQ(b.e(), 1);
  auto c = ZkRational::normalize(2, 3, -2);
  EXPECT_EQ(c.num(), 12);
  EXPECT_EQ(c.e(), 0);
}

TEST(ZkRational, ArithmeticExamples) {
  EXPECT_EQ(ZkRational(2, 3, 1) + ZkRational(2, 1, 2), ZkRational(2, 7, 2));
  EXPECT_EQ((ZkRational(2, 7, 2)).str(), "7*2^-2");
  EXPECT_EQ(ZkRational(6, 3, 1) * ZkRational(6, 2), ZkRational(6, 1));
  for (long n = -20; n <= 20; ++n)
    for (long e = 0; e <= 3; ++e) EXPECT_EQ(ZkRational(2, n, e) + ZkRational(2), ZkRational(2, n, e));
}

TEST(ZkRational, DividesExamples) {
  auto q = zk_divides(ZkRational(2, 7), ZkRational(2, 63));
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, ZkRational(2, 9));
  EXPECT_FALSE(zk_divides(ZkRational(2, 3), ZkRational(2, 1)));
  EXPECT_FALSE(zk_divides(ZkRational(3, 2), ZkRational(3, 1)));
  auto h = zk_divides(ZkRational(6, 2), ZkRational(6, 1));
  ASSERT_TRUE(h);
  EXPECT_EQ(*h, ZkRational(6, 3, 1));
  EXPECT_THROW(zk_divides(ZkRational(2), ZkRational(2, 1)), std::exception);
}

TEST(ZkRational, UnitExamples) {
  EXPECT_TRUE(is_unit(ZkRational(6, 4)));
  EXPECT_FALSE(is_unit(ZkRational(6, 5)));
  EXPECT_TRUE(is_unit(ZkRational(2, 1)));
  EXPECT_TRUE(is_unit(ZkRational(2, -1)));
  EXPECT_FALSE(is_unit(ZkRational(2)));
  EXPECT_EQ(zk_inverse(ZkRational(6, 4)) * ZkRational(6, 4), ZkRational(6, 1));
  EXPECT_THROW(zk_inverse(ZkRational(6, 5)), std::exception);
}

TEST(ZkRational, RenderParseRoundTrip) {
  for (long k : {2L, 3L, 6L, 10L})
    for (long n = -30; n <= 30; ++n)
      for (long e = 0; e <= 3; ++e) {
        ZkRational a(k, n, e);
        EXPECT_EQ(ZkRational::parse(k, a.str()), a) << a.str();
      }
  EXPECT_EQ(ZkRational(2, 3, 1).str(), "3*2^-1");
}

// exact rational arithmetic is the oracle for every ring operation
TEST(ZkRational, MatchesRationalArithmetic) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000, 1000), ex(-3, 6);
  for (long k : {2L, 3L, 6L, 10L}) {
    for (int s = 0; s < 1000; ++s) {
      auto a = ZkRational::normalize(k, num(rng), ex(rng));
      auto b = ZkRational::normalize(k, num(rng), ex(rng));
      auto qa = oracle::value(a), qb = oracle::value(b);
      EXPECT_EQ(oracle::value(a + b), qa + qb);
      EXPECT_EQ(oracle::value(a - b), qa - qb);
      EXPECT_EQ(oracle::value(a * b), qa * qb);
      EXPECT_EQ(oracle::value(-a), -qa);
      EXPECT_EQ(a < b, qa < qb);
      EXPECT_EQ(a == b, qa == qb);
      if (!b.is_zero()) {
        auto q = zk_divides(b, a);
        bool want = oracle::in_zk(qa / qb, k);
        ASSERT_EQ(q.has_value(), want) << a.str() << " / " << b.str();
        if (q) EXPECT_EQ(oracle::value(*q), qa / qb);
      }
    }
  }
}

TEST(ZkRational, NormalizeIdempotentAndCanonical) {
  for (long k : {2L, 6L, 12L})
    for (long n = -40; n <= 40; ++n)
      for (long e = -2; e <= 4; ++e) {
        auto a = ZkRational::normalize(k, n, e);
        EXPECT_EQ(ZkRational::normalize(k, a.num(), a.e()), a);
        EXPECT_EQ(oracle::value(a), mpq_class(n) / oracle::kpow(k, e));
        EXPECT_GE(a.e(), 0);
        // minimal e: one less would leave Z
        if (a.e() > 0) EXPECT_NE(mpq_class(oracle::value(a) * oracle::kpow(k, a.e() - 1)).get_den(), 1);
      }
}

TEST(ZkRational, UnitMatchesPrimeCriterion) {
  for (long k : {2L, 6L, 12L, 10L})
    for (long n = -60; n <= 60; ++n) {
      // trial division by the primes of k
      mpz_class r = n < 0 ? -n : n;
      if (n != 0)
        for (long p = 2; p <= k; ++p)
          if (k % p == 0)
            while (r % p == 0) r /= p;
      EXPECT_EQ(is_unit(ZkRational(k, n)), n != 0 && r == 1) << k << " " << n;
    }
}

TEST(LaurentPoly, MulAddExamples) {
  EXPECT_EQ(lp("1*x^1 + -1*x^0") * lp("1*x^1 + 1*x^0"), lp("1*x^2 + -1*x^0"));
  EXPECT_EQ(lp("1*x^-1") * lp("1*x^1"), lp("1*x^0"));
  EXPECT_TRUE((lp("1*x^2 + -1*x^0") * LaurentPoly()).is_zero());
  EXPECT_EQ(lp("1*x^1") + lp("-1*x^1"), LaurentPoly());
}

TEST(LaurentPoly, DividesExamples) {
  auto q = laurent_divides(LaurentPoly::x_pow_minus_one(2), LaurentPoly::x_pow_minus_one(6));
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, lp("1*x^4 + 1*x^2 + 1*x^0"));
  EXPECT_FALSE(laurent_divides(LaurentPoly::x_pow_minus_one(4), LaurentPoly::x_pow_minus_one(6)));
  auto r = laurent_divides(LaurentPoly::x_pow_minus_one(-3), LaurentPoly::x_pow_minus_one(6));
  ASSERT_TRUE(r);
  EXPECT_EQ(LaurentPoly::x_pow_minus_one(-3) * *r, LaurentPoly::x_pow_minus_one(6));
  EXPECT_THROW(laurent_divides(LaurentPoly(), LaurentPoly::x_pow_minus_one(6)), std::exception);
}

TEST(LaurentPoly, RenderParseRoundTrip) {
  for (auto s : {"0", "3*x^-2", "1*x^4 + -7*x^0 + 2*x^-5"}) EXPECT_EQ(LaurentPoly::parse(LaurentPoly::parse(s).str()), LaurentPoly::parse(s));
  EXPECT_EQ(lp("2*x^-1 + 1*x^3").str(), "1*x^3 + 2*x^-1");
}

TEST(LaurentPoly, ProductMatchesConvolution) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> c(-5, 5), d(-4, 4), len(0, 4);
  for (int s = 0; s < 500; ++s) {
    LaurentPoly f, g;
    for (long j = len(rng); j > 0; --j) f = f + LaurentPoly::monomial(c(rng), d(rng));
    for (long j = len(rng); j > 0; --j) g = g + LaurentPoly::monomial(c(rng), d(rng));
    EXPECT_EQ(to_oracle(f * g), oracle::mul(to_oracle(f), to_oracle(g)));
    if (!g.is_zero()) {
      auto q = laurent_divides(g, f * g);
      ASSERT_TRUE(q);
      EXPECT_EQ(*q * g, f * g);
    }
  }
}

TEST(Facts, Cor1WitnessExamples) {
  EXPECT_EQ(cor1_witness(1, 2), LaurentPoly(1));
  EXPECT_TRUE(cor1_witness(1, 0).is_zero());
  auto g = cor1_witness(2, -1);
  auto d = LaurentPoly::x_pow_minus_one(2);
  EXPECT_EQ(d * (LaurentPoly(-1) + d * g), LaurentPoly::x_pow_minus_one(-2));
}

TEST(Facts, Cor2ResidueExamples) {
  auto a = cor2_residue(2, 3, 2);
  EXPECT_EQ(a.residue, ZkRational(2, 21));
  EXPECT_EQ(a.quotient, ZkRational(2, 6));
  EXPECT_TRUE(cor2_residue(2, 0, 1).residue.is_zero());
  auto c = cor2_residue(3, 2, -1);
  EXPECT_EQ(c.residue, ZkRational(3, 4, 1));
  EXPECT_EQ(oracle::value(c.residue), mpq_class(4, 3));
  EXPECT_THROW(cor2_residue(2, 3, 0), std::exception);
}

TEST(Facts, Fact1WitnessExamples) {
  EXPECT_EQ(fact1_witness(ZkRational(2, 1), 10), 2);
  EXPECT_FALSE(fact1_witness(ZkRational(2), 10));
  EXPECT_EQ(fact1_witness(ZkRational(2, 6), 10), 3);
}

TEST(Facts, SnWitnessExamples) {
  EXPECT_EQ(sn_witness(ZkRational(2, 1), 2, ZkRational(2, 2), 1), ZkRational(2, 1));
  for (long n = -4; n <= 4; ++n)
    if (n != 0) EXPECT_EQ(sn_witness(ZkRational(2, 1), 1, ZkRational(2, 1), n), ZkRational(2));
  EXPECT_FALSE(sn_witness(ZkRational(2, 1), 2, ZkRational(2, 3), 2));
  EXPECT_THROW(sn_witness(ZkRational(2, 1), 2, ZkRational(2, 3), 0), std::exception);
}

TEST(Facts, DivisibilityOfPowersMinusOne) {
  for (long n = -8; n <= 8; ++n) {
    if (n == 0) continue;
    for (long m = -8; m <= 8; ++m) {
      bool want = m % n == 0;
      EXPECT_EQ(laurent_divides(LaurentPoly::x_pow_minus_one(n), LaurentPoly::x_pow_minus_one(m)).has_value(), want);
      for (long k : {2L, 3L, 6L, 10L}) {
        mpq_class q = oracle::kpow(k, m) - 1;
        mpq_class d = oracle::kpow(k, n) - 1;
        ASSERT_EQ(oracle::in_zk(q / d, k), want) << k << " " << n << " " << m;
        EXPECT_EQ(zk_divides(k_pow_minus_one(k, n), k_pow_minus_one(k, m)).has_value(), want);
      }
    }
  }
}

TEST(Facts, SnWitnessMatchesRationalFormula) {
  for (long k : {2L, 3L})
    for (long z = -4; z <= 4; ++z)
      for (long tn = -6; tn <= 6; ++tn)
        for (long n = -3; n <= 3; ++n) {
          if (n == 0) continue;
          ZkRational l(k, 1), t(k, tn);
          mpq_class d = oracle::kpow(k, n) - 1;
          mpq_class s = ((oracle::kpow(k, n * z) - 1) - tn * d) / (d * d);
          auto got = sn_witness(l, z, t, n);
          ASSERT_EQ(got.has_value(), oracle::in_zk(s, k));
          if (got) EXPECT_EQ(oracle::value(*got), s);
        }
}
