#pragma once

#include "bsk/bs_group.hpp"
#include "bsk/zk_rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bsk {

struct ZkTraits {
  using Coeff = ZkRational;
  using Exp = long;
  long k;

  Coeff zero() const { return ZkRational(k); }
  Coeff one() const { return ZkRational(k, 1); }
  Exp exp_zero() const { return 0; }
  Coeff kpow(long n) const { return ZkRational::power_of_k(k, n); }
  Coeff from_exp(long n) const { return ZkRational(k, n); }
  Coeff divide(const Coeff& a, const Coeff& b) const;
};

using BsElem = BsElement<ZkTraits>;
using BsStd = BsGroup<ZkTraits>;

BsStd bs_group(long k);
BsElem bs_make(const ZkRational& y, long m);
BsElem bs_make(long k, const Int& y, long m);
BsElem bs_identity(long k);
BsElem gen_a(long k);
BsElem gen_b(long k);
inline long bs_k(const BsElem& g) { return g.y.k(); }

BsElem bs_mul(const BsElem& g1, const BsElem& g2);
BsElem bs_inv(const BsElem& g);
BsElem bs_conj(const BsElem& g1, const BsElem& g2);
BsElem bs_comm(const BsElem& g1, const BsElem& g2);
BsElem bs_pow(const BsElem& g, long n);
BsElem bs_pow_iter(const BsElem& g, long n);
bool operator<(const BsElem& a, const BsElem& b);

std::string to_string(const BsElem& g);
BsElem parse_element(long k, std::string_view text);

// A word in named symbols: (symbol, nonzero exponent), adjacent symbols distinct.
struct GroupWord {
  std::vector<std::pair<std::string, long>> letters;
  void append(const std::string& sym, long exp);
};

// Tokens `sym`, `sym^n` or `inv(sym)` separated by whitespace.
GroupWord parse_word(std::string_view text);
BsElem eval_word(const GroupWord& w, const std::map<std::string, BsElem>& bindings, long k);
// Binds a and b to the standard generators.
BsElem eval_word(const GroupWord& w, long k);

struct Membership {
  bool in_A = false;
  bool in_Ab = false;
  bool in_A1 = false;
};
Membership classify(const BsElem& g);

// a1^y for a1 = (y', 0): the module action (y' y, 0).
BsElem module_pow(const BsElem& a1, const ZkRational& y);

// g = (y, m) -> a1^y b1^m; requires a1 in A1 and b1 in Ab.
BsElem lambda_auto(const BsElem& a1, const BsElem& b1, const BsElem& g);

// Elements (z k^i, m) for |z| <= z_max, i in [i_lo, i_hi], |m| <= m_max, without repeats,
// identity, generators and their inverses first, the rest in lexicographic (z, i, m) order.
std::vector<BsElem> group_box(long k, long z_max, long i_lo, long i_hi, long m_max);

}  // namespace bsk
