#pragma once

#include "bsk/fol.hpp"

#include <fmt/format.h>

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bsk {

enum class Truth { True, False, Unknown };

inline const char* truth_name(Truth t) {
  return t == Truth::True ? "true" : t == Truth::False ? "false" : "inconclusive";
}

inline Truth truth_not(Truth t) {
  return t == Truth::True ? Truth::False : t == Truth::False ? Truth::True : Truth::Unknown;
}

template <class V>
using Assignment = std::vector<std::pair<std::string, V>>;

template <class V>
struct Verdict {
  Truth truth = Truth::Unknown;
  // witnesses of the outermost existential block, or counterexample of the outermost universal block
  Assignment<V> witness;
  std::string note;

  bool conclusive() const { return truth != Truth::Unknown; }
  static Verdict yes(std::string note = {}, Assignment<V> w = {}) { return {Truth::True, std::move(w), std::move(note)}; }
  static Verdict no(std::string note = {}, Assignment<V> w = {}) { return {Truth::False, std::move(w), std::move(note)}; }
  static Verdict unknown(std::string note = {}) { return {Truth::Unknown, {}, std::move(note)}; }
};

template <class V>
struct Candidates {
  std::vector<V> values;
  // When set, no value outside the list can satisfy (for E) or refute (for A) the body.
  bool exhaustive = false;
};

template <class V>
struct EvalHooks {
  std::function<std::optional<Candidates<V>>(const std::string& var, bool existential, const Formula& body,
                                             const Assignment<V>& env)>
      candidates;
  std::function<std::optional<Verdict<V>>(const std::string& name, const std::vector<V>& args)> decide;
  const MacroTable* macros = nullptr;
};

template <class V>
const V* lookup(const Assignment<V>& env, const std::string& name) {
  for (auto it = env.rbegin(); it != env.rend(); ++it)
    if (it->first == name) return &it->second;
  return nullptr;
}

// Structure interface: Value, box(), box_is_domain(), equal(a, b), and the operations
// of its language (unit/mul/inv or zero/one/add/rmul, exp_atom for rings).
template <class S>
typename S::Value eval_term(const S& s, const Term& t, const Assignment<typename S::Value>& env) {
  switch (t->kind) {
    case TermKind::Var: {
      auto v = lookup(env, t->name);
      if (!v) throw std::invalid_argument(fmt::format("unassigned free variable '{}'", t->name));
      return *v;
    }
    case TermKind::Unit:
      if constexpr (requires { s.unit(); }) return s.unit();
      break;
    case TermKind::Mul:
      if constexpr (requires { s.mul(eval_term(s, t->a, env), eval_term(s, t->b, env)); })
        return s.mul(eval_term(s, t->a, env), eval_term(s, t->b, env));
      break;
    case TermKind::Inv:
      if constexpr (requires { s.inv(eval_term(s, t->a, env)); }) return s.inv(eval_term(s, t->a, env));
      break;
    case TermKind::Zero:
      if constexpr (requires { s.zero(); }) return s.zero();
      break;
    case TermKind::One:
      if constexpr (requires { s.one(); }) return s.one();
      break;
    case TermKind::Add:
      if constexpr (requires { s.add(eval_term(s, t->a, env), eval_term(s, t->b, env)); })
        return s.add(eval_term(s, t->a, env), eval_term(s, t->b, env));
      break;
    case TermKind::RMul:
      if constexpr (requires { s.rmul(eval_term(s, t->a, env), eval_term(s, t->b, env)); })
        return s.rmul(eval_term(s, t->a, env), eval_term(s, t->b, env));
      break;
  }
  throw std::invalid_argument(fmt::format("term '{}' is not interpreted in this structure", to_text(t)));
}

// Sound three-valued evaluation: quantifiers range over the structure's box (after any hook
// candidates); an existential with no witness or a universal with no counterexample stays
// inconclusive unless the candidates are exhaustive or the box is the whole domain.
template <class S>
class Evaluator {
 public:
  using V = typename S::Value;

  Evaluator(const S& s, EvalHooks<V> hooks = {}) : s_(s), hooks_(std::move(hooks)) {}

  Verdict<V> eval(const Formula& f, Assignment<V> env) const {
    for (auto& v : free_vars(f))
      if (!lookup(env, v)) throw std::invalid_argument(fmt::format("unassigned free variable '{}'", v));
    return go(f, env);
  }

 private:
  Verdict<V> go(const Formula& f, Assignment<V>& env) const {
    switch (f->kind) {
      case FKind::True:
        return Verdict<V>::yes();
      case FKind::False:
        return Verdict<V>::no();
      case FKind::Eq:
        return s_.equal(eval_term(s_, f->terms[0], env), eval_term(s_, f->terms[1], env)) ? Verdict<V>::yes()
                                                                                        : Verdict<V>::no();
      case FKind::Exp:
        if constexpr (requires(const V& x) { s_.exp_atom(x, x, x); }) {
          return s_.exp_atom(eval_term(s_, f->terms[0], env), eval_term(s_, f->terms[1], env),
                             eval_term(s_, f->terms[2], env))
                     ? Verdict<V>::yes()
                     : Verdict<V>::no();
        } else {
          throw std::invalid_argument("exp atom is not interpreted in this structure");
        }
      case FKind::Pred:
        return pred(f, env);
      case FKind::Not: {
        auto r = go(f->a, env);
        return {truth_not(r.truth), {}, r.note};
      }
      case FKind::And: {
        auto l = go(f->a, env);
        if (l.truth == Truth::False) return Verdict<V>::no(l.note);
        auto r = go(f->b, env);
        if (r.truth == Truth::False) return Verdict<V>::no(r.note);
        if (l.truth == Truth::True && r.truth == Truth::True) return Verdict<V>::yes();
        return Verdict<V>::unknown();
      }
      case FKind::Or: {
        auto l = go(f->a, env);
        if (l.truth == Truth::True) return Verdict<V>::yes(l.note);
        auto r = go(f->b, env);
        if (r.truth == Truth::True) return Verdict<V>::yes(r.note);
        if (l.truth == Truth::False && r.truth == Truth::False) return Verdict<V>::no();
        return Verdict<V>::unknown();
      }
      case FKind::Implies: {
        auto l = go(f->a, env);
        if (l.truth == Truth::False) return Verdict<V>::yes();
        auto r = go(f->b, env);
        if (r.truth == Truth::True) return Verdict<V>::yes(r.note);
        if (l.truth == Truth::True && r.truth == Truth::False) return Verdict<V>::no(r.note);
        return Verdict<V>::unknown();
      }
      case FKind::Exists:
      case FKind::Forall:
        return quantifier(f, env);
    }
    return Verdict<V>::unknown();
  }

  Verdict<V> pred(const Formula& f, Assignment<V>& env) const {
    std::vector<V> args;
    for (auto& t : f->terms) args.push_back(eval_term(s_, t, env));
    if (hooks_.decide)
      if (auto r = hooks_.decide(f->name, args)) return *r;
    if (!hooks_.macros) throw std::invalid_argument(fmt::format("no definition for predicate '{}'", f->name));
    auto it = hooks_.macros->find(f->name);
    if (it == hooks_.macros->end() || !it->second.body)
      throw std::invalid_argument(fmt::format("no definition for predicate '{}'", f->name));
    auto& def = it->second;
    if (def.params.size() != args.size())
      throw std::invalid_argument(fmt::format("predicate '{}' expects {} arguments", f->name, def.params.size()));
    Assignment<V> inner;
    for (size_t i = 0; i < args.size(); ++i) inner.emplace_back(def.params[i], args[i]);
    auto r = go(def.body, inner);
    r.witness.clear();
    return r;
  }

  Verdict<V> quantifier(const Formula& f, Assignment<V>& env) const {
    const bool ex = f->kind == FKind::Exists;
    const Truth goal = ex ? Truth::True : Truth::False;
    bool unknown = false;
    std::optional<Verdict<V>> found;

    auto attempt = [&](const V& c) {
      env.emplace_back(f->name, c);
      auto r = go(f->a, env);
      env.pop_back();
      if (r.truth == goal) {
        Assignment<V> w{{f->name, c}};
        if (f->a->kind == f->kind) w.insert(w.end(), r.witness.begin(), r.witness.end());
        found = Verdict<V>{goal, std::move(w), r.note};
        return true;
      }
      if (r.truth == Truth::Unknown) unknown = true;
      return false;
    };

    if (hooks_.candidates) {
      if (auto c = hooks_.candidates(f->name, ex, f->a, env)) {
        for (auto& v : c->values)
          if (attempt(v)) return *found;
        if (c->exhaustive) return unknown ? Verdict<V>::unknown() : Verdict<V>{truth_not(goal), {}, {}};
      }
    }
    for (auto& v : s_.box())
      if (attempt(v)) return *found;
    if (s_.box_is_domain() && !unknown) return Verdict<V>{truth_not(goal), {}, {}};
    return Verdict<V>::unknown();
  }

  const S& s_;
  EvalHooks<V> hooks_;
};

template <class S>
Verdict<typename S::Value> eval_bounded(const Formula& f, const S& s, const Assignment<typename S::Value>& env,
                                        EvalHooks<typename S::Value> hooks = {}) {
  return Evaluator<S>(s, std::move(hooks)).eval(f, env);
}

}  // namespace bsk
