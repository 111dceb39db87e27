#include "bsk/definable.hpp"
#include "bsk/eval.hpp"
#include "bsk/fol.hpp"
#include "bsk/structures.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

using namespace bsk;

namespace {

Formula pg(std::string_view s) { return parse_formula(s, Lang::Group); }
Formula pr(std::string_view s) { return parse_formula(s, Lang::Ring); }

// Random closed group formulas, with atoms over the variables in scope.
struct Gen {
  std::mt19937_64 rng;
  long pick(long n) { return std::uniform_int_distribution<long>(0, n - 1)(rng); }

  Term term(const std::vector<std::string>& scope, int depth) {
    long c = pick(depth > 0 ? 4 : 2);
    if (c == 0 || scope.empty()) return scope.empty() || pick(3) == 0 ? t_unit() : t_var(scope[pick(scope.size())]);
    if (c == 1) return t_var(scope[pick(scope.size())]);
    if (c == 2) return t_inv(term(scope, depth - 1));
    return t_mul(term(scope, depth - 1), term(scope, depth - 1));
  }

  Formula formula(std::vector<std::string>& scope, int depth) {
    long c = depth > 0 ? pick(7) : 0;
    switch (c) {
      case 0:
        return f_eq(term(scope, 2), term(scope, 2));
      case 1:
        return f_not(formula(scope, depth - 1));
      case 2:
        return f_and(formula(scope, depth - 1), formula(scope, depth - 1));
      case 3:
        return f_or(formula(scope, depth - 1), formula(scope, depth - 1));
      case 4:
        return f_implies(formula(scope, depth - 1), formula(scope, depth - 1));
      default: {
        std::string v = "v" + std::to_string(pick(3));
        scope.push_back(v);
        auto body = formula(scope, depth - 1);
        scope.pop_back();
        return c == 5 ? f_exists(v, body) : f_forall(v, body);
      }
    }
  }
};

// exhaustive truth in Z/n
long cyc_term(const Term& t, long n, std::map<std::string, long>& env) {
  switch (t->kind) {
    case TermKind::Var:
      return env.at(t->name);
    case TermKind::Unit:
      return 0;
    case TermKind::Mul:
      return (cyc_term(t->a, n, env) + cyc_term(t->b, n, env)) % n;
    case TermKind::Inv:
      return (n - cyc_term(t->a, n, env)) % n;
    default:
      throw std::logic_error("not a group term");
  }
}

bool cyc_truth(const Formula& f, long n, std::map<std::string, long>& env) {
  switch (f->kind) {
    case FKind::True:
      return true;
    case FKind::False:
      return false;
    case FKind::Eq:
      return cyc_term(f->terms[0], n, env) == cyc_term(f->terms[1], n, env);
    case FKind::Not:
      return !cyc_truth(f->a, n, env);
    case FKind::And:
      return cyc_truth(f->a, n, env) && cyc_truth(f->b, n, env);
    case FKind::Or:
      return cyc_truth(f->a, n, env) || cyc_truth(f->b, n, env);
    case FKind::Implies:
      return !cyc_truth(f->a, n, env) || cyc_truth(f->b, n, env);
    case FKind::Exists:
    case FKind::Forall: {
      bool ex = f->kind == FKind::Exists;
      auto saved = env.count(f->name) ? std::optional<long>(env[f->name]) : std::nullopt;
      bool result = !ex;
      for (long v = 0; v < n && result == !ex; ++v) {
        env[f->name] = v;
        if (cyc_truth(f->a, n, env) == ex) result = ex;
      }
      if (saved) env[f->name] = *saved;
      else env.erase(f->name);
      return result;
    }
    default:
      throw std::logic_error("unexpected formula");
  }
}

}  // namespace

TEST(Fol, ParseExamples) {
  auto alpha = pg("A y . ([inv(y)*x*y, x] = e)");
  EXPECT_EQ(alpha->kind, FKind::Forall);
  EXPECT_EQ(free_vars(alpha), std::set<std::string>{"x"});
  // the commutator desugars to s^-1 t^-1 s t
  auto y = t_var("y"), x = t_var("x");
  auto conj = t_mul(t_mul(t_inv(y), x), y);
  EXPECT_TRUE(equal(alpha->a, f_eq(t_comm(conj, x), t_unit())));
  EXPECT_EQ(pg("x = x")->kind, FKind::Eq);
  auto f = pg("E u . (u = inv(u))");
  EXPECT_EQ(f->kind, FKind::Exists);
  EXPECT_TRUE(free_vars(f).empty());
}

TEST(Fol, ParseErrorsCarryPositions) {
  try {
    pg("x = = y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(pg("exp(x, y, x)"), ParseError);
  EXPECT_THROW(pr("inv(x) = 0"), std::invalid_argument);
  EXPECT_THROW(pg("(x = e"), ParseError);
}

TEST(Fol, PowerSugar) {
  EXPECT_TRUE(equal(pg("x^3 = e"), f_eq(t_pow(t_var("x"), 3), t_unit())));
  EXPECT_TRUE(equal(pg("x^0 = e"), f_eq(t_unit(), t_unit())));
}

TEST(Fol, SubstituteExamples) {
  EXPECT_TRUE(equal(substitute(pg("x = x"), {{"x", t_unit()}}), pg("e = e")));
  EXPECT_TRUE(equal(substitute(pg("E y . (x = y)"), {{"x", t_var("y")}}), pg("E y1 . (y = y1)")));
  auto alpha = named_formula("alpha", 2).ast;
  auto at = substitute(alpha, {{"x", t_inv(t_var("a"))}});
  EXPECT_EQ(free_vars(at), std::set<std::string>{"a"});
  // substituting for a bound name leaves the formula alone
  EXPECT_TRUE(equal(substitute(alpha, {{"y", t_unit()}}), alpha));
  EXPECT_THROW(substitute(pg("x*y = e"), {{"x", t_zero()}}), std::invalid_argument);
}

TEST(Fol, RoundTripNamedFormulas) {
  for (long k : {2L, 6L})
    for (auto& name : named_formula_names()) {
      auto nf = named_formula(name, k);
      EXPECT_TRUE(equal(parse_formula(to_text(nf.ast), nf.lang), nf.ast)) << name;
      EXPECT_TRUE(equal(parse_formula(nf.source, nf.lang), nf.ast)) << name;
      // theta_z only mentions the parameters its displayed conjuncts use
      std::set<std::string> params(nf.params.begin(), nf.params.end());
      for (auto& v : free_vars(nf.ast)) EXPECT_TRUE(params.count(v)) << name << " " << v;
      if (name != "theta_z") EXPECT_EQ(free_vars(nf.ast), params) << name;
    }
}

TEST(Fol, RoundTripRandomFormulas) {
  Gen g{std::mt19937_64(17)};
  for (int s = 0; s < 300; ++s) {
    std::vector<std::string> scope{"x"};
    auto f = g.formula(scope, 4);
    EXPECT_TRUE(equal(pg(to_text(f)), f)) << to_text(f);
  }
}

TEST(Fol, EvalExamples) {
  GroupStructure box(2, 2, 2, 2);
  auto alpha = named_formula("alpha", 2).ast;
  auto at_b = eval_bounded(alpha, box, {{"x", gen_b(2)}});
  EXPECT_EQ(at_b.truth, Truth::False);
  ASSERT_EQ(at_b.witness.size(), 1u);
  EXPECT_EQ(at_b.witness[0].first, "y");
  EXPECT_EQ(at_b.witness[0].second, gen_a(2));
  EXPECT_EQ(bs_comm(bs_conj(gen_b(2), gen_a(2)), gen_b(2)), bs_make(2, -1, 0));

  auto eu = eval_bounded(pg("E u . (u = e)"), box, {});
  EXPECT_EQ(eu.truth, Truth::True);
  ASSERT_EQ(eu.witness.size(), 1u);
  EXPECT_EQ(eu.witness[0].second, bs_identity(2));

  EXPECT_EQ(eval_bounded(alpha, box, {{"x", gen_a(2)}}).truth, Truth::Unknown);
  EXPECT_THROW(eval_bounded(alpha, box, {}), std::invalid_argument);
}

TEST(Fol, RingAtomExamples) {
  EXPECT_TRUE(eval_ring_atom(8, 2, 3));
  EXPECT_TRUE(eval_ring_atom(1, 5, 0));
  EXPECT_FALSE(eval_ring_atom(2, 2, -1));
  RingStructure Z(5);
  EXPECT_EQ(eval_bounded(pr("exp(x, 1+1, 1+1+1)"), Z, {{"x", Int(8)}}).truth, Truth::True);
  EXPECT_EQ(eval_bounded(pr("E y . (y + y = x)"), Z, {{"x", Int(7)}}).truth, Truth::Unknown);
  EXPECT_EQ(eval_bounded(pr("E y . (y + y = x)"), Z, {{"x", Int(8)}}).truth, Truth::True);
}

TEST(Fol, PinsConcludeLinearEquations) {
  RingStructure Z(3);
  auto hooks = ring_pin_hooks();
  // the solution lies outside the box but is forced
  auto r = eval_bounded(pr("E y . (y + 1 = x)"), Z, {{"x", Int(100)}}, hooks);
  EXPECT_EQ(r.truth, Truth::True);
  EXPECT_EQ(r.witness.at(0).second, 99);
  EXPECT_EQ(eval_bounded(pr("E y . (y + y = x)"), Z, {{"x", Int(7)}}, hooks).truth, Truth::False);
}

// Soundness: conclusive verdicts on a partial box agree with exhaustive truth.
TEST(Fol, SoundOnFiniteGroups) {
  Gen g{std::mt19937_64(23)};
  long conclusive = 0;
  for (int s = 0; s < 1000; ++s) {
    std::vector<std::string> scope;
    auto f = g.formula(scope, 4);
    for (long n : {4L, 5L}) {
      std::map<std::string, long> env;
      bool truth = cyc_truth(f, n, env);
      auto full = eval_bounded(f, CyclicGroup(n, n), {});
      ASSERT_TRUE(full.conclusive()) << to_text(f);
      EXPECT_EQ(full.truth == Truth::True, truth) << to_text(f);
      auto part = eval_bounded(f, CyclicGroup(n, 2), {});
      if (part.conclusive()) {
        ++conclusive;
        EXPECT_EQ(part.truth == Truth::True, truth) << to_text(f);
      }
    }
  }
  EXPECT_GT(conclusive, 0);
}

// Enlarging the box never flips or loses a conclusive verdict.
TEST(Fol, MonotoneInTheBox) {
  Gen g{std::mt19937_64(29)};
  for (int s = 0; s < 500; ++s) {
    std::vector<std::string> scope;
    auto f = g.formula(scope, 4);
    std::optional<Truth> seen;
    for (long size = 1; size <= 6; ++size) {
      auto v = eval_bounded(f, CyclicGroup(6, size), {});
      if (seen) EXPECT_EQ(v.truth, *seen) << to_text(f) << " at box " << size;
      if (v.conclusive()) seen = v.truth;
    }
  }
}

TEST(Fol, FreeVarsAndUnfold) {
  auto f = pg("(E y . (x*y = z) & A x . (x = w))");
  EXPECT_EQ(free_vars(f), (std::set<std::string>{"x", "z", "w"}));
  auto tau = named_formula("tau", 2).ast;
  auto flat = unfold(tau, group_macros(2));
  EXPECT_EQ(free_vars(flat), free_vars(tau));
  std::function<bool(const Formula&)> has_pred = [&](const Formula& g) -> bool {
    if (!g) return false;
    return g->kind == FKind::Pred || has_pred(g->a) || has_pred(g->b);
  };
  EXPECT_TRUE(has_pred(tau));
  EXPECT_FALSE(has_pred(flat));
}
