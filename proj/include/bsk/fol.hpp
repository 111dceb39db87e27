#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bsk {

enum class Lang { Group, Ring };
const char* lang_name(Lang l);
Lang lang_from_name(std::string_view s);

enum class TermKind { Var, Unit, Mul, Inv, Zero, One, Add, RMul };

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
  TermKind kind;
  std::string name;  // Var only
  Term a, b;
};

Term t_var(std::string name);
Term t_unit();
Term t_mul(Term a, Term b);
Term t_inv(Term a);
Term t_zero();
Term t_one();
Term t_add(Term a, Term b);
Term t_rmul(Term a, Term b);
// 1 + 1 + ... + 1, n >= 0
Term t_numeral(long n);
// group power by repeated products (e for n = 0)
Term t_pow(Term a, long n);
// s^-1 t^-1 s t
Term t_comm(Term s, Term t);

// Language of a term; nullopt for a bare variable.
std::optional<Lang> term_lang(const Term& t);

enum class FKind { True, False, Eq, Exp, Pred, Not, And, Or, Implies, Exists, Forall };

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
  FKind kind;
  std::vector<Term> terms;  // Eq: 2, Exp: 3, Pred: arity
  std::string name;         // Pred name or bound variable
  Formula a, b;
};

Formula f_true();
Formula f_false();
Formula f_eq(Term a, Term b);
// x = y^z in the ring language
Formula f_exp(Term x, Term y, Term z);
Formula f_pred(std::string name, std::vector<Term> args);
Formula f_not(Formula a);
Formula f_and(Formula a, Formula b);
Formula f_or(Formula a, Formula b);
Formula f_implies(Formula a, Formula b);
Formula f_iff(Formula a, Formula b);
Formula f_exists(std::string v, Formula body);
Formula f_forall(std::string v, Formula body);
Formula f_exists(const std::vector<std::string>& vs, Formula body);
Formula f_forall(const std::vector<std::string>& vs, Formula body);
// Left-nested conjunction/disjunction; empty list gives true/false.
Formula f_and_all(const std::vector<Formula>& fs);
Formula f_or_all(const std::vector<Formula>& fs);

bool is_atom(const Formula& f);
bool is_quantifier(const Formula& f);

bool equal(const Term& x, const Term& y);
bool equal(const Formula& x, const Formula& y);

std::string to_text(const Term& t);
std::string to_text(const Formula& f);

void collect_vars(const Term& t, std::set<std::string>& out);
std::set<std::string> free_vars(const Formula& f);
// Free and bound names together.
std::set<std::string> all_names(const Formula& f);
size_t formula_size(const Formula& f);

// A named predicate: either defined by a formula over its parameters or primitive (body null).
struct MacroDef {
  std::vector<std::string> params;
  Formula body;
  Lang lang = Lang::Group;
};
using MacroTable = std::map<std::string, MacroDef>;

// Throws std::invalid_argument when a term of the wrong language appears.
void check_language(const Formula& f, Lang lang);

// Capture-avoiding simultaneous substitution; clashing binders get a numeric suffix.
Formula substitute(const Formula& f, const std::map<std::string, Term>& binding);
Term substitute(const Term& t, const std::map<std::string, Term>& binding);

// Expands every defined predicate; primitive predicates are kept.
Formula unfold(const Formula& f, const MacroTable& macros);

// Fresh variable names avoiding a growing set.
class NameSupply {
 public:
  explicit NameSupply(std::set<std::string> used = {}) : used_(std::move(used)) {}
  std::string fresh(const std::string& base);
  void reserve(const std::string& name) { used_.insert(name); }
  void reserve(const std::set<std::string>& names) { used_.insert(names.begin(), names.end()); }

 private:
  std::set<std::string> used_;
  std::map<std::string, long> counters_;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(size_t pos, const std::string& msg);
  size_t position() const { return pos_; }

 private:
  size_t pos_;
};

Formula parse_formula(std::string_view src, Lang lang = Lang::Group);
Term parse_term(std::string_view src, Lang lang = Lang::Group);

}  // namespace bsk
