#include "bsk/bs_core.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace bsk;

namespace {

oracle::Mat as_mat(const BsElem& g) { return {oracle::kpow(bs_k(g), -g.m), oracle::value(g.y)}; }

BsElem el(long k, long num, long e, long m) { return bs_make(ZkRational::normalize(k, num, e), m); }

BsElem random_elem(std::mt19937_64& rng, long k) {
  std::uniform_int_distribution<long> num(-1000, 1000), e(0, 6), m(-6, 6);
  return el(k, num(rng), e(rng), m(rng));
}

}  // namespace

TEST(BsCore, MulExamples) {
  EXPECT_EQ(bs_mul(gen_a(2), gen_b(2)), el(2, 1, 0, 1));
  EXPECT_EQ(bs_mul(gen_b(2), gen_a(2)), el(2, 1, 1, 1));
  auto g = el(3, 5, 2, -1);
  EXPECT_EQ(bs_mul(g, bs_identity(3)), g);
}

TEST(BsCore, InvExamples) {
  EXPECT_EQ(bs_inv(el(2, 1, 0, 1)), el(2, -2, 0, -1));
  EXPECT_EQ(bs_mul(el(2, 1, 0, 1), el(2, -2, 0, -1)), bs_identity(2));
  EXPECT_EQ(bs_inv(bs_identity(2)), bs_identity(2));
  EXPECT_EQ(bs_inv(gen_a(3)), el(3, -1, 0, 0));
}

TEST(BsCore, ConjCommExamples) {
  EXPECT_EQ(bs_conj(gen_a(2), gen_b(2)), el(2, 2, 0, 0));
  EXPECT_EQ(bs_conj(bs_identity(2), el(2, 5, 3, 3)), bs_identity(2));
  EXPECT_EQ(bs_conj(gen_a(2), el(2, 5, 0, 3)), el(2, 8, 0, 0));
  auto g = el(2, 7, 1, 2);
  EXPECT_EQ(bs_comm(g, g), bs_identity(2));
  EXPECT_EQ(bs_comm(gen_a(2), gen_b(2)), el(2, 1, 0, 0));
  EXPECT_EQ(bs_comm(g, bs_identity(2)), bs_identity(2));
}

TEST(BsCore, PowExamples) {
  EXPECT_EQ(bs_pow(el(2, 1, 0, 1), 3), el(2, 7, 2, 3));
  EXPECT_EQ(bs_pow(el(2, 1, 0, 1), 0), bs_identity(2));
  EXPECT_EQ(bs_pow(gen_a(2), 5), el(2, 5, 0, 0));
}

TEST(BsCore, WordExamples) {
  EXPECT_EQ(eval_word(parse_word("b^-1 a b"), 2), el(2, 2, 0, 0));
  EXPECT_EQ(eval_word(parse_word("inv(b) a b"), 2), el(2, 2, 0, 0));
  EXPECT_EQ(eval_word(parse_word(""), 2), bs_identity(2));
  auto a2 = bs_pow(gen_a(2), 2);
  EXPECT_EQ(eval_word(parse_word("a^2 b^-1 a^-2 b"), 2), bs_comm(bs_inv(a2), gen_b(2)));
  EXPECT_EQ(eval_word(parse_word("a^2 b^-1 a^-2 b"), 2).m, 0);
  EXPECT_EQ(to_string(eval_word(parse_word("a^3 b^2"), 2)), "(3, 2)");
  EXPECT_THROW(eval_word(parse_word("c"), 2), std::exception);
  std::map<std::string, BsElem> env{{"g", el(3, 4, 1, 1)}, {"h", gen_a(3)}};
  EXPECT_EQ(eval_word(parse_word("g h^2 inv(g)"), env, 3),
            bs_mul(bs_mul(env.at("g"), bs_pow(gen_a(3), 2)), bs_inv(env.at("g"))));
}

TEST(BsCore, ClassifyExamples) {
  auto a = classify(gen_a(2));
  EXPECT_TRUE(a.in_A);
  EXPECT_TRUE(a.in_A1);
  EXPECT_FALSE(a.in_Ab);
  EXPECT_TRUE(classify(el(2, 3, 1, 1)).in_Ab);
  auto five = classify(el(6, 5, 0, 0));
  EXPECT_TRUE(five.in_A);
  EXPECT_FALSE(five.in_A1);
}

TEST(BsCore, LambdaExamples) {
  for (auto& g : group_box(2, 2, 0, 2, 2)) EXPECT_EQ(lambda_auto(gen_a(2), gen_b(2), g), g);
  auto a1 = el(2, 2, 0, 0), b1 = el(2, 1, 0, 1);
  EXPECT_EQ(lambda_auto(a1, b1, gen_a(2)), a1);
  auto la = lambda_auto(a1, b1, gen_a(2)), lb = lambda_auto(a1, b1, gen_b(2));
  EXPECT_EQ(bs_conj(la, lb), bs_pow(la, 2));
  EXPECT_THROW(lambda_auto(el(2, 3, 0, 0), b1, gen_a(2)), std::exception);
  EXPECT_THROW(lambda_auto(a1, gen_a(2), gen_a(2)), std::exception);
}

TEST(BsCore, RenderParseRoundTrip) {
  for (auto& g : group_box(6, 3, -2, 3, 3)) EXPECT_EQ(parse_element(6, to_string(g)), g);
  EXPECT_EQ(to_string(el(2, 3, 1, 1)), "(3*2^-1, 1)");
}

// the matrix representation is the oracle for all group operations
TEST(BsCore, MatchesMatrixGroup) {
  std::mt19937_64 rng(3);
  for (long k : {2L, 3L, 6L})
    for (int s = 0; s < 1000; ++s) {
      auto g = random_elem(rng, k), h = random_elem(rng, k), f = random_elem(rng, k);
      EXPECT_EQ(as_mat(bs_mul(g, h)), as_mat(g) * as_mat(h));
      EXPECT_EQ(as_mat(bs_inv(g)), as_mat(g).inv());
      EXPECT_EQ(as_mat(bs_conj(g, h)), as_mat(h).inv() * as_mat(g) * as_mat(h));
      EXPECT_EQ(as_mat(bs_comm(g, h)), as_mat(g).inv() * as_mat(h).inv() * as_mat(g) * as_mat(h));
      EXPECT_EQ(bs_mul(bs_mul(g, h), f), bs_mul(g, bs_mul(h, f)));
      EXPECT_EQ(bs_mul(g, bs_inv(g)), bs_identity(k));
    }
}

TEST(BsCore, PowMatchesIteratedProduct) {
  std::mt19937_64 rng(5);
  for (long k : {2L, 3L, 6L})
    for (int s = 0; s < 40; ++s) {
      auto g = random_elem(rng, k);
      auto acc = oracle::Mat{1, 0};
      for (long n = 0; n <= 16; ++n) {
        EXPECT_EQ(as_mat(bs_pow(g, n)), acc);
        EXPECT_EQ(bs_pow(g, -n), bs_inv(bs_pow(g, n)));
        EXPECT_EQ(bs_pow(g, n), bs_pow_iter(g, n));
        acc = acc * as_mat(g);
      }
    }
}

TEST(BsCore, DefiningRelationAndLemma4) {
  for (long k : {2L, 3L, 6L, 10L}) {
    EXPECT_EQ(bs_conj(gen_a(k), gen_b(k)), bs_pow(gen_a(k), k));
    for (long yb : {-3L, 0L, 5L})
      for (long un : {-2L, 1L, 7L})
        for (long n = -6; n <= 6; ++n) {
          auto b1 = el(k, yb, 1, 1), u = el(k, un, 0, 0);
          auto want = bs_make(u.y * ZkRational::power_of_k(k, n), 0);
          EXPECT_EQ(bs_conj(u, bs_pow(b1, n)), want);
          EXPECT_EQ(bs_conj(u, bs_pow(gen_b(k), n)), want);
        }
  }
}

TEST(BsCore, CentralizerOfB1) {
  for (long k : {2L, 3L}) {
    auto b1 = el(k, 1, 0, 1);
    for (auto& x : group_box(k, 3, -3, 3, 3)) {
      bool power = x == bs_pow(b1, x.m);
      EXPECT_EQ(bs_comm(x, b1) == bs_identity(k), power) << to_string(x);
    }
  }
}

TEST(BsCore, LambdaIsHomomorphism) {
  auto a1 = el(6, 4, 0, 0), b1 = el(6, 5, 1, 1);
  auto box = group_box(6, 2, 0, 1, 2);
  for (auto& g : box)
    for (auto& h : box)
      EXPECT_EQ(lambda_auto(a1, b1, bs_mul(g, h)), bs_mul(lambda_auto(a1, b1, g), lambda_auto(a1, b1, h)));
}

TEST(BsCore, BoxHasNoRepeatsAndGeneratorsFirst) {
  auto box = group_box(2, 3, 0, 3, 3);
  EXPECT_EQ(box[0], bs_identity(2));
  EXPECT_EQ(box[1], gen_a(2));
  EXPECT_EQ(box[3], gen_b(2));
  std::set<std::string> seen;
  for (auto& g : box) EXPECT_TRUE(seen.insert(to_string(g)).second);
}
