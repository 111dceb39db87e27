#include "bsk/definable.hpp"
#include "bsk/interp.hpp"
#include "bsk/structures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace bsk;

namespace {

Triple tr(long z, long i, long m) { return {Int(z), Int(i), Int(m)}; }

void bind_tuple(Assignment<Int>& env, const std::vector<std::string>& names, const Triple& t) {
  for (size_t j = 0; j < names.size(); ++j) env.emplace_back(names[j], t[j]);
}

// Evaluates a code formula of Delta with its tuples bound to the given triples.
Truth holds(long k, const CodeFormula& cf, const std::vector<Triple>& ts) {
  Assignment<Int> env;
  for (size_t j = 0; j < ts.size(); ++j) bind_tuple(env, cf.tuples.at(j), ts[j]);
  return eval_in_ring(cf.body, cf.hints, k, env).truth;
}

// z k^i as an exact rational
mpq_class zk(long k, const Triple& t) { return mpq_class(t[0]) * oracle::kpow(k, t[1].get_si()); }

}  // namespace

TEST(Delta, Shape) {
  auto d = code_delta(2);
  EXPECT_EQ(d.dim, 3);
  EXPECT_EQ(d.dim_par, 0);
  EXPECT_EQ(d.source, Lang::Group);
  EXPECT_EQ(d.target, Lang::Ring);
  for (auto& s : source_symbols(Lang::Group)) EXPECT_EQ(d.graphs.count(s), 1u) << s;
  EXPECT_EQ(d.graphs.size(), source_symbols(Lang::Group).size());
  EXPECT_THROW(code_delta(1), std::exception);
}

TEST(Delta, EquivalenceExamples) {
  auto d = code_delta(2);
  EXPECT_TRUE(delta_equiv(2, tr(1, 1, 0), tr(2, 0, 0)));
  EXPECT_EQ(holds(2, d.E, {tr(1, 1, 0), tr(2, 0, 0)}), Truth::True);
  EXPECT_EQ(holds(2, d.E, {tr(1, 1, 0), tr(2, 0, 1)}), Truth::False);
  EXPECT_EQ(holds(2, d.E, {tr(3, -2, 1), tr(6, -3, 1)}), Truth::True);
  EXPECT_EQ(holds(2, d.E, {tr(3, -2, 1), tr(3, -3, 1)}), Truth::False);
}

TEST(Delta, GraphExamples) {
  auto d = code_delta(2);
  EXPECT_EQ(delta_mul(2, tr(1, 0, 0), tr(0, 0, 1)), tr(1, 0, 1));
  EXPECT_EQ(holds(2, d.graphs.at("mul"), {tr(1, 0, 0), tr(0, 0, 1), tr(1, 0, 1)}), Truth::True);
  EXPECT_EQ(holds(2, d.graphs.at("mul"), {tr(1, 0, 0), tr(0, 0, 1), tr(2, -1, 1)}), Truth::True);
  EXPECT_EQ(holds(2, d.graphs.at("mul"), {tr(1, 0, 0), tr(0, 0, 1), tr(2, 0, 1)}), Truth::False);
  EXPECT_EQ(delta_inv(tr(1, 0, 1)), tr(-1, 1, -1));
  EXPECT_EQ(holds(2, d.graphs.at("inv"), {tr(1, 0, 1), tr(-1, 1, -1)}), Truth::True);
  EXPECT_EQ(holds(2, d.graphs.at("inv"), {tr(1, 0, 1), tr(1, 1, -1)}), Truth::False);
  EXPECT_EQ(holds(2, d.graphs.at("e"), {tr(0, 5, 0)}), Truth::True);
  EXPECT_EQ(holds(2, d.graphs.at("e"), {tr(0, 0, 1)}), Truth::False);
}

TEST(Delta, CoordinateMapExamples) {
  EXPECT_EQ(mu_delta(2, tr(1, 0, 0)), gen_a(2));
  EXPECT_EQ(mu_delta(2, tr(3, -1, 2)), bs_make(ZkRational(2, 3, 1), 2));
  EXPECT_EQ(mu_delta_section(bs_mul(gen_a(2), gen_b(2))), tr(1, 0, 1));
  EXPECT_EQ(mu_delta_section(bs_make(ZkRational(6, 5, 2), -1)), tr(5, -2, -1));
}

// the matrix group is the oracle for the coordinate operations
TEST(Delta, HomomorphismOnTheBox) {
  for (long k : {2L, 3L, 6L}) {
    std::vector<Triple> box;
    for (long z = -2; z <= 2; ++z)
      for (long i = -2; i <= 2; ++i)
        for (long m = -2; m <= 2; ++m) box.push_back(tr(z, i, m));
    auto M = [&](const Triple& t) {
      return oracle::Mat{oracle::kpow(k, -t[2].get_si()), zk(k, t)};
    };
    for (auto& s : box) {
      EXPECT_EQ(M(delta_inv(s)), M(s).inv());
      EXPECT_EQ(mu_delta(k, mu_delta_section(mu_delta(k, s))), mu_delta(k, s));
      for (auto& t : box) {
        EXPECT_EQ(M(delta_mul(k, s, t)), M(s) * M(t));
        bool same = zk(k, s) == zk(k, t) && s[2] == t[2];
        EXPECT_EQ(delta_equiv(k, s, t), same);
        EXPECT_EQ(mu_delta(k, s) == mu_delta(k, t), same);
      }
    }
  }
}

TEST(Gamma, Shape) {
  auto g = code_gamma(2);
  EXPECT_EQ(g.dim, 1);
  EXPECT_EQ(g.dim_par, 2);
  EXPECT_EQ(g.source, Lang::Ring);
  EXPECT_EQ(g.target, Lang::Group);
  for (auto& s : source_symbols(Lang::Ring)) EXPECT_TRUE(g.graphs.count(s)) << s;
}

TEST(Gamma, CoordinateMapExamples) {
  EXPECT_EQ(mu_gamma(bs_pow(gen_b(2), 3), gen_b(2)), 3);
  auto b1 = bs_make(2, 1, 1);
  EXPECT_EQ(bs_pow(b1, 2), bs_make(ZkRational(2, 3, 1), 2));
  EXPECT_EQ(mu_gamma(bs_pow(b1, 2), b1), 2);
  try {
    mu_gamma(gen_a(2), gen_b(2));
    FAIL();
  } catch (const std::exception& e) {
    EXPECT_NE(std::string(e.what()).find("not in <b1>"), std::string::npos);
  }
}

TEST(Gamma, GraphsThroughTheGroup) {
  auto g = code_gamma(2);
  auto b = gen_b(2);
  GroupStructure box(2, 2, 2, 2);
  auto run = [&](const CodeFormula& cf, std::vector<long> ns) {
    Assignment<BsElem> env = {{"pa", gen_a(2)}, {"pb", b}};
    for (size_t j = 0; j < ns.size(); ++j) env.emplace_back(cf.tuples.at(j).at(0), bs_pow(b, ns[j]));
    return eval_in_group(cf.body, cf.hints, g, b, env, box).truth;
  };
  EXPECT_EQ(run(g.graphs.at("add"), {2, 3, 5}), Truth::True);
  EXPECT_EQ(run(g.graphs.at("add"), {2, 3, 6}), Truth::False);
  EXPECT_EQ(run(g.graphs.at("mul"), {2, 3, 6}), Truth::True);
  EXPECT_EQ(run(g.graphs.at("mul"), {2, 3, 5}), Truth::False);
  EXPECT_EQ(run(g.graphs.at("one"), {1}), Truth::True);
  EXPECT_EQ(run(g.graphs.at("zero"), {0}), Truth::True);
  // U picks out exactly the powers of b in the box
  for (auto& x : box.box()) {
    Assignment<BsElem> env = {{"pa", gen_a(2)}, {"pb", b}, {g.U.tuples.at(0).at(0), x}};
    bool want = x == bs_pow(b, x.m);
    EXPECT_EQ(eval_in_group(g.U.body, g.U.hints, g, b, env, box).truth, want ? Truth::True : Truth::False);
  }
}

TEST(Translate, EqualityToIdentityThroughDelta) {
  auto d = code_delta(2);
  auto t = translate(parse_formula("x = e"), d);
  auto x = tuple_of("x", d);
  for (auto& tt : {tr(0, 0, 0), tr(0, 3, 0), tr(1, 0, 0), tr(0, 0, 1)}) {
    Assignment<Int> env;
    bind_tuple(env, x, tt);
    bool want = mu_delta(2, tt) == bs_identity(2);
    EXPECT_EQ(eval_in_ring(t.formula, t.hints, 2, env).truth, want ? Truth::True : Truth::False);
  }
}

TEST(Translate, InversesExistThroughDelta) {
  auto d = code_delta(2);
  auto t = translate(parse_formula("E y . (x*y = e)"), d);
  auto x = tuple_of("x", d);
  for (long z = -2; z <= 2; ++z)
    for (long i = -1; i <= 1; ++i)
      for (long m = -1; m <= 1; ++m) {
        Assignment<Int> env;
        bind_tuple(env, x, tr(z, i, m));
        EXPECT_EQ(eval_in_ring(t.formula, t.hints, 2, env).truth, Truth::True) << z << " " << i << " " << m;
      }
}

TEST(Translate, ArithmeticThroughGamma) {
  auto g = code_gamma(2);
  auto t = translate(parse_formula("1+1 + (1+1+1) = 1+1+1+1+1", Lang::Ring), g);
  GroupStructure box(2, std::vector<BsElem>{bs_identity(2)});
  Assignment<BsElem> env = {{"pa", gen_a(2)}, {"pb", gen_b(2)}};
  EXPECT_EQ(eval_in_group(t.formula, t.hints, g, gen_b(2), env, box).truth, Truth::True);
  auto f = translate(parse_formula("1+1 + (1+1+1) = 1+1+1+1", Lang::Ring), g);
  EXPECT_EQ(eval_in_group(f.formula, f.hints, g, gen_b(2), env, box).truth, Truth::False);
}

TEST(Translate, OutputReparses) {
  auto d = code_delta(2);
  auto alpha = named_formula("alpha", 2).ast;
  auto ta = translate(alpha, d).formula;
  EXPECT_TRUE(equal(parse_formula(to_text(ta), Lang::Ring), ta));
  auto g = code_gamma(2);
  auto tg = translate(parse_formula("E y . (x*y = 1)", Lang::Ring), g).formula;
  EXPECT_TRUE(equal(parse_formula(to_text(tg), Lang::Group), tg));
  auto fv = free_vars(tg);
  EXPECT_TRUE(fv.count("pb"));
  EXPECT_THROW(translate(parse_formula("x = e"), g), std::exception);
}

TEST(Compose, Dimensions) {
  auto d = code_delta(2), g = code_gamma(2);
  auto gd = compose(g, d);
  EXPECT_EQ(gd.dim, 3);
  EXPECT_EQ(gd.dim_par, 6);
  auto dg = compose(d, g);
  EXPECT_EQ(dg.dim, 3);
  EXPECT_EQ(dg.dim_par, 2);
  EXPECT_THROW(compose(d, d), std::exception);
  auto id = compose(code_identity(Lang::Group), d);
  EXPECT_EQ(id.dim, 3);
  EXPECT_EQ(id.dim_par, 0);
}

TEST(Compose, IdentityIsANoOp) {
  auto d = code_delta(2);
  auto id = compose(code_identity(Lang::Group), d);
  // E of the identity code is equality, which Delta turns into its own E
  for (auto& [s, t] : std::vector<std::pair<Triple, Triple>>{{tr(1, 1, 0), tr(2, 0, 0)}, {tr(1, 1, 0), tr(1, 0, 0)}})
    EXPECT_EQ(holds(2, id.E, {s, t}), holds(2, d.E, {s, t}));
}

TEST(Code, JsonRoundTrip) {
  for (auto code : {code_delta(3), code_gamma(3), compose(code_gamma(2), code_delta(2))}) {
    auto j = code_to_json(code);
    auto back = code_from_json(j);
    EXPECT_EQ(back.dim, code.dim);
    EXPECT_EQ(back.dim_par, code.dim_par);
    EXPECT_TRUE(equal(back.U.body, code.U.body));
    EXPECT_TRUE(equal(back.E.body, code.E.body));
    for (auto& [s, cf] : code.graphs) EXPECT_TRUE(equal(back.graphs.at(s).body, cf.body)) << s;
    EXPECT_EQ(code_to_json(back), j);
  }
}

TEST(Theta, BsExamples) {
  auto a = gen_a(2), b = gen_b(2), e = bs_identity(2);
  EXPECT_EQ(theta_bs_check(b, e, e, a, a, b).truth, Truth::True);
  EXPECT_EQ(theta_bs_check(b, b, b, bs_make(2, 2, 1), a, b).truth, Truth::True);
  EXPECT_EQ(theta_bs_check(b, b, b, bs_make(2, 3, 1), a, b).truth, Truth::False);
  EXPECT_THROW(theta_bs_check(b, b, b, a, bs_make(2, 3, 0), b), std::exception);
}

TEST(Theta, ZExamples) {
  std::array<Int, 6> ab1 = {1, 0, 0, 1, 0, 1};
  EXPECT_TRUE(theta_z_check(2, tr(3, -1, 2), 2, ab1));
  EXPECT_FALSE(theta_z_check(2, tr(1, 0, 2), 1, ab1));
  std::array<Int, 6> ab = {1, 0, 0, 0, 0, 1};
  for (long i = -3; i <= 3; ++i)
    for (long m = -3; m <= 3; ++m) EXPECT_TRUE(theta_z_check(2, tr(0, i, m), m, ab));
  std::array<Int, 6> bad = {3, 0, 0, 1, 0, 1};
  EXPECT_THROW(theta_z_check(2, tr(0, 0, 0), 0, bad), std::exception);
}

TEST(Biinterp, PassesAndMutationFails) {
  EXPECT_TRUE(verify_biinterp(2).ok());
  EXPECT_TRUE(verify_biinterp(3).ok());
  BiinterpConfig cfg;
  cfg.mutate = true;
  EXPECT_FALSE(verify_biinterp(2, cfg).ok());
}

TEST(Corpora, TwelveQuantifierFreeFormulas) {
  for (auto& [lang, corpus] : {std::pair{Lang::Group, group_corpus()}, std::pair{Lang::Ring, ring_corpus()}}) {
    EXPECT_EQ(corpus.size(), 12u);
    for (auto& src : corpus) {
      auto f = parse_formula(src, lang);
      std::function<bool(const Formula&)> qf = [&](const Formula& g) -> bool {
        return !g || (!is_quantifier(g) && qf(g->a) && qf(g->b));
      };
      EXPECT_TRUE(qf(f)) << src;
    }
  }
}
