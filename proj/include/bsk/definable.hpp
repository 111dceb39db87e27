#pragma once

#include "bsk/bs_core.hpp"
#include "bsk/eval.hpp"
#include "bsk/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bsk {

// A defining formula by name, with its source text in the formula grammar.
struct NamedFormula {
  std::string name;
  std::vector<std::string> params;
  std::string source;
  Lang lang = Lang::Group;
  Formula ast;
};

// alpha, beta, delta, sq, gamma, tau, pi, theta_bs (group) and theta_z (ring).
// beta, tau, pi, theta_bs and theta_z mention k.
std::vector<std::string> named_formula_names();
NamedFormula named_formula(const std::string& name, long k);
// Group-language definitions of every named group formula, as predicates.
MacroTable group_macros(long k);

struct WitnessConfig {
  std::vector<long> n_range = {-4, -3, -2, -1, 1, 2, 3, 4};
  long z_search = 200;  // |z| bound in the unit search
  long i_search = 8;    // 0 <= i <= bound in the unit search
  bool mutate = false;  // deliberately wrong delta witness, to show the sweep can fail
};

using GroupVerdict = Verdict<BsElem>;

// The algebraic characterization; nullopt outside the lemma's hypotheses.
std::optional<bool> semantic(const std::string& name, const std::vector<BsElem>& args);

// The proof's witnesses (true) or explicit counterexample (false), checked exactly.
GroupVerdict witness_check(const std::string& name, const std::vector<BsElem>& args, const WitnessConfig& cfg = {});

struct DeltaWitness {
  bool holds = false;
  ZkRational t;  // u = c^t when holds
};
// delta on arbitrary elements: m(y) | m(x), with the proof's exponent t.
DeltaWitness delta_witness(const BsElem& x, const BsElem& y, bool mutate = false);

// Elements of <b1> as integers: b1^n -> n, nullopt when g is not a power of b1.
std::optional<long> power_of(const BsElem& g, const BsElem& b1);

// Standard parameter samples: at least three b1 in Ab and two a1 in A1.
std::vector<BsElem> ab_samples(long k);
std::vector<BsElem> a1_samples(long k);

// semantic vs conclusive witness verdict over the documented boxes.
SuiteReport agreement_sweep(const std::string& name, long k, const WitnessConfig& cfg = {});
// tau(a1, u, h, b1) conclusively true iff u = a1^z and h = b1^z for some z in the box.
SuiteReport cor5_sweep(long k, const WitnessConfig& cfg = {});

}  // namespace bsk
