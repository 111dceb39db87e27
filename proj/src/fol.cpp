#include "bsk/fol.hpp"

#include <fmt/format.h>

namespace bsk {

const char* lang_name(Lang l) { return l == Lang::Group ? "group" : "ring"; }

Lang lang_from_name(std::string_view s) {
  if (s == "group") return Lang::Group;
  if (s == "ring") return Lang::Ring;
  throw std::invalid_argument(fmt::format("unknown language '{}'", s));
}

static Term mk(TermKind k, std::string name = {}, Term a = nullptr, Term b = nullptr) {
  return std::make_shared<const TermNode>(TermNode{k, std::move(name), std::move(a), std::move(b)});
}

Term t_var(std::string name) { return mk(TermKind::Var, std::move(name)); }
Term t_unit() { return mk(TermKind::Unit); }
Term t_mul(Term a, Term b) { return mk(TermKind::Mul, {}, std::move(a), std::move(b)); }
Term t_inv(Term a) { return mk(TermKind::Inv, {}, std::move(a)); }
Term t_zero() { return mk(TermKind::Zero); }
Term t_one() { return mk(TermKind::One); }
Term t_add(Term a, Term b) { return mk(TermKind::Add, {}, std::move(a), std::move(b)); }
Term t_rmul(Term a, Term b) { return mk(TermKind::RMul, {}, std::move(a), std::move(b)); }

Term t_numeral(long n) {
  if (n < 0) throw std::invalid_argument("the ring language has no negative numerals");
  if (n == 0) return t_zero();
  Term t = t_one();
  for (long i = 1; i < n; ++i) t = t_add(t, t_one());
  return t;
}

Term t_pow(Term a, long n) {
  if (n == 0) return t_unit();
  Term base = n < 0 ? t_inv(a) : a;
  Term t = base;
  for (long i = 1; i < (n < 0 ? -n : n); ++i) t = t_mul(t, base);
  return t;
}

Term t_comm(Term s, Term t) { return t_mul(t_mul(t_mul(t_inv(s), t_inv(t)), s), t); }

std::optional<Lang> term_lang(const Term& t) {
  switch (t->kind) {
    case TermKind::Var:
      return std::nullopt;
    case TermKind::Unit:
    case TermKind::Inv:
      return Lang::Group;
    case TermKind::Zero:
    case TermKind::One:
    case TermKind::Add:
    case TermKind::RMul:
      return Lang::Ring;
    case TermKind::Mul: {
      auto l = term_lang(t->a);
      return l ? l : term_lang(t->b);
    }
  }
  return std::nullopt;
}

static Formula mkf(FKind k, std::vector<Term> terms = {}, std::string name = {}, Formula a = nullptr,
                   Formula b = nullptr) {
  return std::make_shared<const FormulaNode>(
      FormulaNode{k, std::move(terms), std::move(name), std::move(a), std::move(b)});
}

Formula f_true() { return mkf(FKind::True); }
Formula f_false() { return mkf(FKind::False); }
Formula f_eq(Term a, Term b) { return mkf(FKind::Eq, {std::move(a), std::move(b)}); }
Formula f_exp(Term x, Term y, Term z) { return mkf(FKind::Exp, {std::move(x), std::move(y), std::move(z)}); }
Formula f_pred(std::string name, std::vector<Term> args) { return mkf(FKind::Pred, std::move(args), std::move(name)); }
Formula f_not(Formula a) { return mkf(FKind::Not, {}, {}, std::move(a)); }
Formula f_and(Formula a, Formula b) { return mkf(FKind::And, {}, {}, std::move(a), std::move(b)); }
Formula f_or(Formula a, Formula b) { return mkf(FKind::Or, {}, {}, std::move(a), std::move(b)); }
Formula f_implies(Formula a, Formula b) { return mkf(FKind::Implies, {}, {}, std::move(a), std::move(b)); }
Formula f_iff(Formula a, Formula b) { return f_and(f_implies(a, b), f_implies(b, a)); }
Formula f_exists(std::string v, Formula body) { return mkf(FKind::Exists, {}, std::move(v), std::move(body)); }
Formula f_forall(std::string v, Formula body) { return mkf(FKind::Forall, {}, std::move(v), std::move(body)); }

Formula f_exists(const std::vector<std::string>& vs, Formula body) {
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) body = f_exists(*it, body);
  return body;
}

Formula f_forall(const std::vector<std::string>& vs, Formula body) {
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) body = f_forall(*it, body);
  return body;
}

Formula f_and_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return f_true();
  Formula r = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) r = f_and(r, fs[i]);
  return r;
}

Formula f_or_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return f_false();
  Formula r = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) r = f_or(r, fs[i]);
  return r;
}

bool is_atom(const Formula& f) {
  switch (f->kind) {
    case FKind::True:
    case FKind::False:
    case FKind::Eq:
    case FKind::Exp:
    case FKind::Pred:
      return true;
    default:
      return false;
  }
}

bool is_quantifier(const Formula& f) { return f->kind == FKind::Exists || f->kind == FKind::Forall; }

bool equal(const Term& x, const Term& y) {
  if (x == y) return true;
  if (!x || !y || x->kind != y->kind || x->name != y->name) return false;
  return (x->a ? (y->a && equal(x->a, y->a)) : !y->a) && (x->b ? (y->b && equal(x->b, y->b)) : !y->b);
}

bool equal(const Formula& x, const Formula& y) {
  if (x == y) return true;
  if (!x || !y || x->kind != y->kind || x->name != y->name || x->terms.size() != y->terms.size()) return false;
  for (size_t i = 0; i < x->terms.size(); ++i)
    if (!equal(x->terms[i], y->terms[i])) return false;
  return (x->a ? (y->a && equal(x->a, y->a)) : !y->a) && (x->b ? (y->b && equal(x->b, y->b)) : !y->b);
}

// ---- printing ----

std::string to_text(const Term& t) {
  switch (t->kind) {
    case TermKind::Var:
      return t->name;
    case TermKind::Unit:
      return "e";
    case TermKind::Zero:
      return "0";
    case TermKind::One:
      return "1";
    case TermKind::Inv:
      return "inv(" + to_text(t->a) + ")";
    case TermKind::Mul: {
      auto r = to_text(t->b);
      if (t->b->kind == TermKind::Mul) r = "(" + r + ")";
      return to_text(t->a) + "*" + r;
    }
    case TermKind::Add: {
      auto r = to_text(t->b);
      if (t->b->kind == TermKind::Add) r = "(" + r + ")";
      return to_text(t->a) + "+" + r;
    }
    case TermKind::RMul: {
      auto l = to_text(t->a), r = to_text(t->b);
      if (t->a->kind == TermKind::Add) l = "(" + l + ")";
      if (t->b->kind == TermKind::Add || t->b->kind == TermKind::RMul) r = "(" + r + ")";
      return l + "*" + r;
    }
  }
  return {};
}

static std::string print(const Formula& f, bool top);

static std::string print_body(const Formula& body) {
  if (is_atom(body) || body->kind == FKind::Not) return "(" + print(body, true) + ")";
  return print(body, true);
}

static std::string print(const Formula& f, bool top) {
  switch (f->kind) {
    case FKind::True:
      return "true";
    case FKind::False:
      return "false";
    case FKind::Eq:
      return to_text(f->terms[0]) + " = " + to_text(f->terms[1]);
    case FKind::Exp:
      return fmt::format("exp({}, {}, {})", to_text(f->terms[0]), to_text(f->terms[1]), to_text(f->terms[2]));
    case FKind::Pred: {
      std::string s = f->name + "(";
      for (size_t i = 0; i < f->terms.size(); ++i) s += (i ? ", " : "") + to_text(f->terms[i]);
      return s + ")";
    }
    case FKind::Not:
      return "~" + print(f->a, false);
    case FKind::And:
      return "(" + print(f->a, false) + " & " + print(f->b, false) + ")";
    case FKind::Or:
      return "(" + print(f->a, false) + " | " + print(f->b, false) + ")";
    case FKind::Implies:
      return "(" + print(f->a, false) + " -> " + print(f->b, false) + ")";
    case FKind::Exists:
    case FKind::Forall: {
      std::string s = std::string(f->kind == FKind::Exists ? "E " : "A ") + f->name + " . " + print_body(f->a);
      return top ? s : "(" + s + ")";
    }
  }
  return {};
}

std::string to_text(const Formula& f) { return print(f, true); }

// ---- variables ----

void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t->kind == TermKind::Var) out.insert(t->name);
  if (t->a) collect_vars(t->a, out);
  if (t->b) collect_vars(t->b, out);
}

static void free_into(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  for (auto& t : f->terms) {
    std::set<std::string> vs;
    collect_vars(t, vs);
    for (auto& v : vs)
      if (!bound.count(v)) out.insert(v);
  }
  if (is_quantifier(f)) {
    bool fresh = bound.insert(f->name).second;
    free_into(f->a, bound, out);
    if (fresh) bound.erase(f->name);
    return;
  }
  if (f->a) free_into(f->a, bound, out);
  if (f->b) free_into(f->b, bound, out);
}

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  free_into(f, bound, out);
  return out;
}

static void names_into(const Formula& f, std::set<std::string>& out) {
  for (auto& t : f->terms) collect_vars(t, out);
  if (is_quantifier(f)) out.insert(f->name);
  if (f->a) names_into(f->a, out);
  if (f->b) names_into(f->b, out);
}

std::set<std::string> all_names(const Formula& f) {
  std::set<std::string> out;
  names_into(f, out);
  return out;
}

size_t formula_size(const Formula& f) {
  size_t n = 1 + f->terms.size();
  if (f->a) n += formula_size(f->a);
  if (f->b) n += formula_size(f->b);
  return n;
}

// ---- language ----

static void check_term(const Term& t, Lang lang) {
  auto l = term_lang(t);
  if (l && *l != lang)
    throw std::invalid_argument(fmt::format("term '{}' is not in the {} language", to_text(t), lang_name(lang)));
  bool ring_only = t->kind == TermKind::Zero || t->kind == TermKind::One || t->kind == TermKind::Add ||
                   t->kind == TermKind::RMul;
  bool group_only = t->kind == TermKind::Unit || t->kind == TermKind::Inv;
  if ((ring_only && lang == Lang::Group) || (group_only && lang == Lang::Ring))
    throw std::invalid_argument(fmt::format("term '{}' is not in the {} language", to_text(t), lang_name(lang)));
  if (t->kind == TermKind::Mul && lang == Lang::Ring)
    throw std::invalid_argument(fmt::format("group product in ring term '{}'", to_text(t)));
  if (t->kind == TermKind::RMul && lang == Lang::Group)
    throw std::invalid_argument(fmt::format("ring product in group term '{}'", to_text(t)));
  if (t->a) check_term(t->a, lang);
  if (t->b) check_term(t->b, lang);
}

void check_language(const Formula& f, Lang lang) {
  if (f->kind == FKind::Exp && lang != Lang::Ring)
    throw std::invalid_argument("exp atom outside the ring language");
  for (auto& t : f->terms) check_term(t, lang);
  if (f->a) check_language(f->a, lang);
  if (f->b) check_language(f->b, lang);
}

// ---- substitution ----

static void term_langs(const Term& t, bool& group, bool& ring) {
  switch (t->kind) {
    case TermKind::Unit:
    case TermKind::Mul:
    case TermKind::Inv:
      group = true;
      break;
    case TermKind::Zero:
    case TermKind::One:
    case TermKind::Add:
    case TermKind::RMul:
      ring = true;
      break;
    case TermKind::Var:
      break;
  }
  if (t->a) term_langs(t->a, group, ring);
  if (t->b) term_langs(t->b, group, ring);
}

Term substitute(const Term& t, const std::map<std::string, Term>& binding) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = binding.find(t->name);
      return it == binding.end() ? t : it->second;
    }
    case TermKind::Unit:
    case TermKind::Zero:
    case TermKind::One:
      return t;
    default:
      break;
  }
  Term a = t->a ? substitute(t->a, binding) : nullptr;
  Term b = t->b ? substitute(t->b, binding) : nullptr;
  if (a == t->a && b == t->b) return t;
  return mk(t->kind, t->name, a, b);
}

Formula substitute(const Formula& f, const std::map<std::string, Term>& binding) {
  if (binding.empty()) return f;
  if (is_quantifier(f)) {
    auto inner = binding;
    inner.erase(f->name);
    auto fv = free_vars(f->a);
    std::set<std::string> term_vars;
    bool relevant = false;
    for (auto& [x, t] : inner)
      if (fv.count(x)) {
        relevant = true;
        collect_vars(t, term_vars);
      }
    if (!relevant) return f;
    std::string v = f->name;
    if (term_vars.count(v)) {
      auto avoid = all_names(f->a);
      avoid.insert(term_vars.begin(), term_vars.end());
      for (auto& [x, t] : inner) avoid.insert(x);
      for (long n = 1;; ++n) {
        auto cand = v + std::to_string(n);
        if (!avoid.count(cand)) {
          v = cand;
          break;
        }
      }
      inner[f->name] = t_var(v);
    }
    return mkf(f->kind, {}, v, substitute(f->a, inner));
  }
  std::vector<Term> terms;
  terms.reserve(f->terms.size());
  for (auto& t : f->terms) terms.push_back(substitute(t, binding));
  if (!terms.empty()) {
    bool group = false, ring = f->kind == FKind::Exp;
    for (auto& t : terms) term_langs(t, group, ring);
    if (group && ring) throw std::invalid_argument("substitution mixes the group and ring languages");
  }
  Formula a = f->a ? substitute(f->a, binding) : nullptr;
  Formula b = f->b ? substitute(f->b, binding) : nullptr;
  return mkf(f->kind, std::move(terms), f->name, a, b);
}

Formula unfold(const Formula& f, const MacroTable& macros) {
  if (f->kind == FKind::Pred) {
    auto it = macros.find(f->name);
    if (it == macros.end() || !it->second.body) return f;
    auto& def = it->second;
    if (def.params.size() != f->terms.size())
      throw std::invalid_argument(fmt::format("predicate '{}' expects {} arguments", f->name, def.params.size()));
    std::map<std::string, Term> b;
    for (size_t i = 0; i < def.params.size(); ++i) b[def.params[i]] = f->terms[i];
    return unfold(substitute(def.body, b), macros);
  }
  if (is_atom(f)) return f;
  Formula a = f->a ? unfold(f->a, macros) : nullptr;
  Formula b = f->b ? unfold(f->b, macros) : nullptr;
  if (a == f->a && b == f->b) return f;
  return mkf(f->kind, f->terms, f->name, a, b);
}

std::string NameSupply::fresh(const std::string& base) {
  long& n = counters_[base];
  for (;;) {
    auto cand = base + std::to_string(++n);
    if (used_.insert(cand).second) return cand;
  }
}

ParseError::ParseError(size_t pos, const std::string& msg)
    : std::invalid_argument(fmt::format("syntax error at position {}: {}", pos, msg)), pos_(pos) {}

}  // namespace bsk
