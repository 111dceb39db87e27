#pragma once

#include "bsk/bs_core.hpp"
#include "bsk/definable.hpp"
#include "bsk/eval.hpp"
#include "bsk/report.hpp"
#include "bsk/structures.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace bsk {

// A flattening step: `result` was introduced as the value of `symbol` applied to `args`.
struct FlatHint {
  std::string symbol;
  std::vector<std::vector<std::string>> args;
  std::vector<std::string> result;
};

// A target-language formula over named tuples of variables (plus the code's parameters).
struct CodeFormula {
  std::vector<std::vector<std::string>> tuples;
  Formula body;
  std::vector<FlatHint> hints;
};

// Source symbols: group "mul", "inv", "e"; ring "add", "mul", "zero", "one" and the relation "exp".
struct InterpCode {
  std::string name;
  Lang source = Lang::Group;
  Lang target = Lang::Ring;
  int dim = 1;
  int dim_par = 0;
  std::vector<std::string> params;      // dim_par target variables
  std::vector<std::string> components;  // dim suffixes naming the coordinates of a tuple
  CodeFormula U;                        // tuples {x}
  CodeFormula E;                        // tuples {x, x'}
  std::map<std::string, CodeFormula> graphs;
  MacroTable macros;  // target-language predicates the formulas refer to
};

std::vector<std::string> source_symbols(Lang l);
// Arity of a source symbol counted in tuples, result included for functions.
int symbol_tuples(Lang l, const std::string& symbol);

InterpCode code_delta(long k);
InterpCode code_gamma(long k);
InterpCode code_identity(Lang l);

// Tuple naming a source variable under a code.
std::vector<std::string> tuple_of(const std::string& var, const InterpCode& code);

struct Translation {
  Formula formula;
  std::vector<FlatHint> hints;
};

// Flattens terms into graph-constrained fresh tuples, replaces = by E, relativizes quantifiers to U.
// Defined source predicates are unfolded with `source_macros`; primitive ones are lifted to tuples.
Translation translate(const Formula& phi, const InterpCode& code, const MacroTable& source_macros = {});

InterpCode compose(const InterpCode& gamma, const InterpCode& delta);

nlohmann::ordered_json code_to_json(const InterpCode& c);
InterpCode code_from_json(const nlohmann::ordered_json& j);

// Coordinates for the interpretation of BS(1,k) in Z.
using Triple = std::array<Int, 3>;  // (z, i, m)
BsElem mu_delta(long k, const Triple& t);
Triple mu_delta_section(const BsElem& g);
// z1 k^i1 = z2 k^i2 and m1 = m2
bool delta_equiv(long k, const Triple& a, const Triple& b);
// The operations on triples the graph formulas of Delta describe.
Triple delta_mul(long k, const Triple& a, const Triple& b);
Triple delta_inv(const Triple& a);

// b1^m -> m; throws "not in <b1>" otherwise.
long mu_gamma(const BsElem& power, const BsElem& b1);

// Values a code's graph formulas accept, used to instantiate flattening hints exactly.
template <class V>
using SymbolModel = std::function<std::vector<V>(const std::string& symbol, const std::vector<std::vector<V>>& args)>;
SymbolModel<Int> delta_model(long k);
SymbolModel<BsElem> gamma_model(const BsElem& b1);

// Evaluation of translated formulas: hints first, then ring pins / predicate deciders.
Verdict<Int> eval_in_ring(const Formula& f, const std::vector<FlatHint>& hints, long k,
                          const Assignment<Int>& env, long ring_max = 20);
Verdict<BsElem> eval_in_group(const Formula& f, const std::vector<FlatHint>& hints, const InterpCode& gamma,
                              const BsElem& b1, const Assignment<BsElem>& env, const GroupStructure& box);

// The graph of (z,i,m) -> a1^(z k^i) b1^m, evaluated through the tau witness checker.
GroupVerdict theta_bs_check(const BsElem& zt, const BsElem& it, const BsElem& mt, const BsElem& x, const BsElem& a1,
                            const BsElem& b1, bool mutate = false, const WitnessConfig& cfg = {});
// (x = m) and z k^i = zb k^ib (k^-m - 1)/(k^-1 - 1), in exact arithmetic.
bool theta_z_check(long k, const Triple& zim, const Int& x, const std::array<Int, 6>& params, bool mutate = false);

struct BiinterpConfig {
  long box = 3;  // z, i, m in [-box, box]
  bool mutate = false;
  WitnessConfig witness;
};
SuiteReport verify_biinterp(long k, const BiinterpConfig& cfg = {});

// Closed-form checks of Delta on the box |z| <= zb, i in [-ib, ib], |m| <= mb.
SuiteReport verify_delta(long k, long zb = 3, long ib = 3, long mb = 3);

// The fixed quantifier-free corpora and the translation agreement sweep.
std::vector<std::string> group_corpus();
std::vector<std::string> ring_corpus();
SuiteReport verify_translation(long k);
SuiteReport verify_composition(long k);

}  // namespace bsk
