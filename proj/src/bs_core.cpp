#include "bsk/bs_core.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bsk {

ZkRational ZkTraits::divide(const ZkRational& a, const ZkRational& b) const {
  auto q = zk_divides(b, a);
  if (!q) throw std::domain_error("quotient not in Z[1/k]");
  return *q;
}

BsStd bs_group(long k) {
  RingContext ctx(k);
  return BsStd(ZkTraits{ctx.k});
}

BsElem bs_make(const ZkRational& y, long m) { return {y, m}; }
BsElem bs_make(long k, const Int& y, long m) { return {ZkRational(k, y), m}; }
BsElem bs_identity(long k) { return {ZkRational(k), 0}; }
BsElem gen_a(long k) { return {ZkRational(k, 1), 0}; }
BsElem gen_b(long k) { return {ZkRational(k), 1}; }

static long common_k(const BsElem& g1, const BsElem& g2) {
  if (bs_k(g1) != bs_k(g2)) throw std::invalid_argument("mismatched group contexts");
  return bs_k(g1);
}

BsElem bs_mul(const BsElem& g1, const BsElem& g2) { return bs_group(common_k(g1, g2)).mul(g1, g2); }
BsElem bs_inv(const BsElem& g) { return bs_group(bs_k(g)).inv(g); }
BsElem bs_conj(const BsElem& g1, const BsElem& g2) { return bs_group(common_k(g1, g2)).conj(g1, g2); }
BsElem bs_comm(const BsElem& g1, const BsElem& g2) { return bs_group(common_k(g1, g2)).comm(g1, g2); }
BsElem bs_pow(const BsElem& g, long n) { return bs_group(bs_k(g)).pow(g, n); }
BsElem bs_pow_iter(const BsElem& g, long n) { return bs_group(bs_k(g)).pow_iter(g, n); }

bool operator<(const BsElem& a, const BsElem& b) {
  if (a.m != b.m) return a.m < b.m;
  return a.y < b.y;
}

std::string to_string(const BsElem& g) { return fmt::format("({}, {})", g.y.str(), g.m); }

BsElem parse_element(long k, std::string_view text) {
  std::string s(text);
  auto open = s.find('('), comma = s.rfind(','), close = s.rfind(')');
  if (open == std::string::npos || comma == std::string::npos || close == std::string::npos || comma < open ||
      close < comma)
    throw std::invalid_argument(fmt::format("bad element '{}'", text));
  auto y = ZkRational::parse(k, s.substr(open + 1, comma - open - 1));
  long m = std::stol(s.substr(comma + 1, close - comma - 1));
  return {y, m};
}

void GroupWord::append(const std::string& sym, long exp) {
  if (exp == 0) return;
  if (!letters.empty() && letters.back().first == sym) {
    letters.back().second += exp;
    if (letters.back().second == 0) letters.pop_back();
    return;
  }
  letters.emplace_back(sym, exp);
}

GroupWord parse_word(std::string_view text) {
  GroupWord w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::string sym;
    long exp = 1;
    if (tok.rfind("inv(", 0) == 0) {
      auto close = tok.find(')');
      if (close == std::string::npos) throw std::invalid_argument(fmt::format("bad token '{}'", tok));
      sym = tok.substr(4, close - 4);
      exp = -1;
      if (close + 1 < tok.size()) {
        if (tok[close + 1] != '^') throw std::invalid_argument(fmt::format("bad token '{}'", tok));
        exp = -std::stol(tok.substr(close + 2));
      }
    } else {
      auto caret = tok.find('^');
      sym = tok.substr(0, caret);
      if (caret != std::string::npos) exp = std::stol(tok.substr(caret + 1));
    }
    if (sym.empty() || !std::all_of(sym.begin(), sym.end(), [](char c) {
          return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        }))
      throw std::invalid_argument(fmt::format("bad symbol in '{}'", tok));
    w.append(sym, exp);
  }
  return w;
}

BsElem eval_word(const GroupWord& w, const std::map<std::string, BsElem>& bindings, long k) {
  auto G = bs_group(k);
  BsElem r = G.identity();
  for (auto& [sym, exp] : w.letters) {
    auto it = bindings.find(sym);
    if (it == bindings.end()) throw std::invalid_argument(fmt::format("unbound symbol '{}'", sym));
    r = G.mul(r, G.pow(it->second, exp));
  }
  return r;
}

BsElem eval_word(const GroupWord& w, long k) { return eval_word(w, {{"a", gen_a(k)}, {"b", gen_b(k)}}, k); }

Membership classify(const BsElem& g) {
  Membership r;
  r.in_A = g.m == 0;
  r.in_Ab = g.m == 1;
  r.in_A1 = g.m == 0 && is_unit(g.y);
  return r;
}

BsElem module_pow(const BsElem& a1, const ZkRational& y) {
  if (a1.m != 0) throw std::invalid_argument("module action needs an element of A");
  return {a1.y * y, 0};
}

BsElem lambda_auto(const BsElem& a1, const BsElem& b1, const BsElem& g) {
  if (!classify(a1).in_A1 || !classify(b1).in_Ab) throw std::invalid_argument("not a generating pair");
  return bs_mul(module_pow(a1, g.y), bs_pow(b1, g.m));
}

std::vector<BsElem> group_box(long k, long z_max, long i_lo, long i_hi, long m_max) {
  std::vector<BsElem> out;
  std::set<std::pair<long, std::string>> seen;
  auto push = [&](const BsElem& g) {
    if (seen.insert({g.m, g.y.str()}).second) out.push_back(g);
  };
  auto G = bs_group(k);
  push(G.identity());
  push(gen_a(k));
  push(G.inv(gen_a(k)));
  if (m_max >= 1) {
    push(gen_b(k));
    push(G.inv(gen_b(k)));
  }
  for (long z = -z_max; z <= z_max; ++z)
    for (long i = i_lo; i <= i_hi; ++i)
      for (long m = -m_max; m <= m_max; ++m) push({ZkRational(k, z, -i), m});
  return out;
}

}  // namespace bsk
