#include "bsk/definable.hpp"

#include "bsk/facts.hpp"

#include <fmt/format.h>

#include <cstdlib>
#include <stdexcept>

namespace bsk {

namespace {

struct Source {
  const char* name;
  std::vector<std::string> params;
  const char* text;  // {k} and {k1} stand for k and k - 1
  Lang lang;
};

const std::vector<Source>& sources() {
  static const std::vector<Source> s = {
      {"alpha", {"x"}, "A y . ([inv(y)*x*y, x] = e)", Lang::Group},
      {"beta", {"y"}, "A x . (alpha(x) -> inv(y)*x*y = x^{k})", Lang::Group},
      {"delta", {"x", "y"}, "A c . (alpha(c) -> E u . (alpha(u) & [x,c] = [y,u]))", Lang::Group},
      {"sq",
       {"n", "p", "b1"},
       "((n = e | n = inv(b1)) & p = e) | (~(n = e) & ~(n = inv(b1)) & delta(p*p*inv(n), n*n*b1) & "
       "A w . ([w,b1] = e -> (delta(w,p) <-> (delta(w,n) & delta(w,n*b1)))))",
       Lang::Group},
      {"gamma",
       {"x", "y", "z", "b1"},
       "(x = e & z = e) | (y = e & z = e) | (x = inv(b1) & z = inv(y)) | (y = inv(b1) & z = inv(x)) | "
       "E p . E q . E r . ([p,b1] = e & [q,b1] = e & [r,b1] = e & sq(x*y,p,b1) & sq(x,q,b1) & sq(y,r,b1) & "
       "p = q*r*z*z)",
       Lang::Group},
      {"tau",
       {"x", "y", "h", "b1"},
       "alpha(x) & alpha(y) & [h,b1] = e & beta(b1) & A v . A w . (([v,b1] = e & [w,b1] = e & gamma(h,v,w,b1)) -> "
       "E u . (alpha(u) & [v,y] = [w,x]*[v,[u,v]]))",
       Lang::Group},
      {"pi", {"x"}, "A c . A v . ((alpha(c) & beta(v)) -> E w . E h . ([w,v] = e & tau(x, inv(w)*c*w, h, v)))",
       Lang::Group},
      {"theta_bs",
       {"zt", "it", "mt", "x", "at", "bt"},
       "[it,bt] = e & [mt,bt] = e & tau(at, it*x*inv(mt)*inv(it), zt, bt)",
       Lang::Group},
      // zt k^it = zb k^ib (k^-mt - 1)/(k^-1 - 1), multiplied out and shifted to non-negative powers
      {"theta_z",
       {"zt", "it", "mt", "x", "za", "ia", "ma", "zb", "ib", "mb"},
       "x = mt & E s . ((s = it | s = ib + 1 | s + mt = ib + 1) & E d1 . E d2 . E d3 . "
       "(it = s + d1 & ib + 1 = s + d2 & ib + 1 = s + d3 + mt & E p1 . E p2 . E p3 . "
       "(exp(p1, {k}, d1) & exp(p2, {k}, d2) & exp(p3, {k}, d3) & zt*{k1}*p1 + zb*p3 = zb*p2)))",
       Lang::Ring},
  };
  return s;
}

const Source& source(const std::string& name) {
  for (auto& s : sources())
    if (s.name == name) return s;
  throw std::invalid_argument(fmt::format("unknown formula '{}'", name));
}

long group_k(const std::vector<BsElem>& args) {
  if (args.empty()) throw std::invalid_argument("no arguments");
  return bs_k(args[0]);
}

void expect_arity(const std::string& name, const std::vector<BsElem>& args) {
  size_t want = source(name).params.size();
  if (args.size() != want)
    throw std::invalid_argument(fmt::format("{} expects {} arguments, got {}", name, want, args.size()));
}

std::string show(const BsElem& g) { return to_string(g); }

ZkRational zk(long k, long v) { return ZkRational(k, v); }

BsElem a_pow(long k, const ZkRational& t) { return {t, 0}; }

// Small samples of A used to discharge universals over an abelian normal subgroup.
std::vector<BsElem> a_sample(long k) {
  return {gen_a(k), a_pow(k, zk(k, -2)), a_pow(k, ZkRational(k, 3, 1)), a_pow(k, zk(k, 5))};
}

bool in_ab(const BsElem& b1) { return b1.m == 1; }

GroupVerdict alpha_check(const BsElem& x) {
  long k = bs_k(x);
  auto G = bs_group(k);
  if (x.m == 0) {
    for (auto& y : group_box(k, 2, 0, 2, 2))
      if (!(G.comm(G.conj(x, y), x) == G.identity()))
        return GroupVerdict::unknown("matrix failed on a sample");
    return GroupVerdict::yes("x lies in the abelian normal subgroup A");
  }
  auto g = G.comm(G.conj(x, gen_a(k)), x);
  // -(k^m - 1)^2, negative m included
  auto km1 = k_pow_minus_one(k, x.m);
  if (!(g == BsElem{-(km1 * km1), 0})) return GroupVerdict::unknown("unexpected commutator value");
  return GroupVerdict::no(fmt::format("[inv(a)*x*a, x] = {} != e", show(g)), {{"y", gen_a(k)}});
}

GroupVerdict beta_check(const BsElem& y) {
  long k = bs_k(y);
  auto G = bs_group(k);
  if (y.m == 1) {
    for (auto& x : a_sample(k))
      if (!(G.conj(x, y) == G.pow(x, k))) return GroupVerdict::unknown("matrix failed on a sample");
    return GroupVerdict::yes("y acts on A as b does");
  }
  auto g = G.conj(gen_a(k), y);
  return GroupVerdict::no(fmt::format("inv(y)*a*y = {} != a^{}", show(g), k), {{"x", gen_a(k)}});
}

GroupVerdict delta_check(const BsElem& x, const BsElem& y, bool mutate) {
  long k = bs_k(x);
  auto G = bs_group(k);
  auto dw = delta_witness(x, y, mutate);
  if (dw.holds) {
    for (auto& c : a_sample(k)) {
      auto u = module_pow(c, dw.t);
      if (!(G.comm(x, c) == G.comm(y, u))) return GroupVerdict::unknown("u = c^t does not satisfy the matrix");
    }
    return GroupVerdict::yes(fmt::format("u = c^t with t = {}", dw.t.str()));
  }
  auto c = G.inv(gen_a(k));
  return GroupVerdict::no(fmt::format("[x,inv(a)] = {} is not [y,u] for any u in A: k^{} - 1 does not divide k^{} - 1",
                                      show(G.comm(x, c)), y.m, x.m),
                          {{"c", c}});
}

GroupVerdict sq_check(const BsElem& n, const BsElem& p, const BsElem& b1) {
  long k = bs_k(n);
  auto G = bs_group(k);
  if (!in_ab(b1)) return GroupVerdict::unknown("b1 outside Ab");
  auto N = power_of(n, b1), L = power_of(p, b1);
  if (!N || !L) return GroupVerdict::unknown("arguments outside <b1>");
  if (*N == 0 || *N == -1) {
    if (*L == 0) return GroupVerdict::yes("n in {e, inv(b1)} and p = e");
    return GroupVerdict::no("n in {e, inv(b1)} forces p = e");
  }
  auto first = delta_witness(G.mul(G.mul(p, p), G.inv(n)), G.mul(G.mul(n, n), b1));
  if (!first.holds) return GroupVerdict::no(fmt::format("2n+1 = {} does not divide 2l-n = {}", 2 * *N + 1, 2 * *L - *N));
  long W = std::max(std::labs(*L), std::labs(*N * (*N + 1))) + 2;
  for (long j = -W; j <= W; ++j) {
    auto w = G.pow(b1, j);
    bool lhs = delta_witness(w, p).holds;
    bool rhs = delta_witness(w, n).holds && delta_witness(w, G.mul(n, b1)).holds;
    if (lhs != rhs) return GroupVerdict::no(fmt::format("divisibility of {} separates l from n(n+1)", j), {{"w", w}});
  }
  return GroupVerdict::yes("l = n(n+1)");
}

GroupVerdict gamma_check(const BsElem& x, const BsElem& y, const BsElem& z, const BsElem& b1) {
  long k = bs_k(x);
  auto G = bs_group(k);
  if (!in_ab(b1)) return GroupVerdict::unknown("b1 outside Ab");
  auto n = power_of(x, b1), l = power_of(y, b1), m = power_of(z, b1);
  if (!n || !l || !m) return GroupVerdict::unknown("arguments outside <b1>");
  auto e = G.identity(), ib = G.inv(b1);
  if ((x == e && z == e) || (y == e && z == e)) return GroupVerdict::yes("zero case");
  if ((x == ib && z == G.inv(y)) || (y == ib && z == G.inv(x))) return GroupVerdict::yes("negation case");
  long s = *n + *l;
  auto p = G.pow(b1, s * (s + 1)), q = G.pow(b1, *n * (*n + 1)), r = G.pow(b1, *l * (*l + 1));
  for (auto [arg, val] : {std::pair{G.mul(x, y), p}, std::pair{x, q}, std::pair{y, r}})
    if (sq_check(arg, val, b1).truth != Truth::True) return GroupVerdict::unknown("sq witness rejected");
  if (p == G.mul(G.mul(G.mul(q, r), z), z)) return GroupVerdict::yes("p = q r z z", {{"p", p}, {"q", q}, {"r", r}});
  return GroupVerdict::no(fmt::format("sq forces p = b1^{}, q = b1^{}, r = b1^{} and p != q r z z", s * (s + 1),
                                      *n * (*n + 1), *l * (*l + 1)));
}

GroupVerdict tau_check(const BsElem& x, const BsElem& y, const BsElem& h, const BsElem& b1, const WitnessConfig& cfg) {
  long k = bs_k(x);
  auto G = bs_group(k);
  for (auto [label, g] : {std::pair{"x", x}, std::pair{"y", y}}) {
    auto r = alpha_check(g);
    if (r.truth == Truth::False) return GroupVerdict::no(fmt::format("alpha({}) fails: {}", label, r.note));
  }
  if (!(G.comm(h, b1) == G.identity()))
    return GroupVerdict::no(fmt::format("[h,b1] = {} != e", show(G.comm(h, b1))));
  auto rb = beta_check(b1);
  if (rb.truth == Truth::False) return GroupVerdict::no(fmt::format("beta(b1) fails: {}", rb.note));
  auto z = power_of(h, b1);
  if (!z) return GroupVerdict::unknown("h commutes with b1 but is not a power of it");
  const ZkRational& l = x.y;
  const ZkRational& t = y.y;
  std::string table;
  for (long n : cfg.n_range) {
    if (n == 0) continue;
    auto v = G.pow(b1, n), w = G.pow(b1, n * *z);
    auto s = sn_witness(l, *z, t, n);
    if (!s)
      return GroupVerdict::no(fmt::format("s_{} is not in Z[1/k], so no u exists", n), {{"v", v}, {"w", w}});
    auto u = a_pow(k, -*s);
    if (!(G.comm(v, y) == G.mul(G.comm(w, x), G.comm(v, G.comm(u, v)))))
      return GroupVerdict::unknown(fmt::format("u = a^-s_{} fails the matrix", n));
    table += fmt::format("{}s_{} = {}", table.empty() ? "" : ", ", n, s->str());
  }
  if (!(l * ZkRational(k, *z) == t)) return GroupVerdict::unknown("no failing n in the window");
  return GroupVerdict::yes(table);
}

GroupVerdict pi_check(const BsElem& x, const WitnessConfig& cfg) {
  long k = bs_k(x);
  auto G = bs_group(k);
  Assignment<BsElem> cex{{"c", gen_a(k)}, {"v", gen_b(k)}};
  if (x.m != 0) return GroupVerdict::no("alpha(x) fails, so tau(x, ...) never holds", cex);
  if (!is_unit(x.y))
    return GroupVerdict::no(fmt::format("{} is not a unit: y z = k^i has no solution", x.y.str()), cex);
  // c = a^t for t in {1, -2, 1/k}: small enough for the default search window
  for (auto& c : {gen_a(k), a_pow(k, zk(k, -2)), a_pow(k, ZkRational(k, 1, 1))}) {
    for (auto& v : ab_samples(k)) {
      std::optional<std::pair<long, long>> found;
      for (long i = 0; i <= cfg.i_search && !found; ++i) {
        auto q = zk_divides(x.y, c.y * ZkRational::power_of_k(k, i));
        if (q && q->is_integer() && abs(q->num()) <= cfg.z_search) found = {{q->num().get_si(), i}};
      }
      if (!found) return GroupVerdict::unknown("unit search bound exhausted");
      auto [z, i] = *found;
      auto w = G.pow(v, i), h = G.pow(v, z);
      if (!(G.comm(w, v) == G.identity())) return GroupVerdict::unknown("w does not commute with v");
      if (tau_check(x, G.conj(c, w), h, v, cfg).truth != Truth::True)
        return GroupVerdict::unknown("tau witness rejected");
    }
  }
  return GroupVerdict::yes("y z = t k^i solved for every sampled c = a^t and v");
}

}  // namespace

std::vector<std::string> named_formula_names() {
  std::vector<std::string> out;
  for (auto& s : sources()) out.push_back(s.name);
  return out;
}

NamedFormula named_formula(const std::string& name, long k) {
  RingContext ctx(k);
  auto& s = source(name);
  std::string text = fmt::format(fmt::runtime(s.text), fmt::arg("k", k), fmt::arg("k1", k - 1));
  return {s.name, s.params, text, s.lang, parse_formula(text, s.lang)};
}

MacroTable group_macros(long k) {
  MacroTable t;
  for (auto& s : sources()) {
    if (s.lang != Lang::Group) continue;
    auto f = named_formula(s.name, k);
    t[f.name] = MacroDef{f.params, f.ast, Lang::Group};
  }
  return t;
}

std::optional<long> power_of(const BsElem& g, const BsElem& b1) {
  if (b1.m == 0) return std::nullopt;
  if (g.m % b1.m != 0) return std::nullopt;
  long n = g.m / b1.m;
  if (!(bs_pow(b1, n) == g)) return std::nullopt;
  return n;
}

DeltaWitness delta_witness(const BsElem& x, const BsElem& y, bool mutate) {
  long k = bs_k(x);
  long mx = mutate ? y.m : x.m, my = mutate ? x.m : y.m;
  if (my == 0) return {mx == 0, ZkRational(k)};
  auto q = zk_divides(k_pow_minus_one(k, my), k_pow_minus_one(k, mx));
  if (!q) return {false, ZkRational(k)};
  return {true, *q};
}

std::optional<bool> semantic(const std::string& name, const std::vector<BsElem>& args) {
  expect_arity(name, args);
  if (name == "alpha") return args[0].m == 0;
  if (name == "beta") return args[0].m == 1;
  if (name == "delta") return args[1].m == 0 ? args[0].m == 0 : args[0].m % args[1].m == 0;
  if (name == "pi") return args[0].m == 0 && is_unit(args[0].y);
  if (name == "sq") {
    if (!in_ab(args[2])) return std::nullopt;
    auto n = power_of(args[0], args[2]), l = power_of(args[1], args[2]);
    if (!n || !l) return std::nullopt;
    return *l == *n * (*n + 1);
  }
  if (name == "gamma") {
    if (!in_ab(args[3])) return std::nullopt;
    auto n = power_of(args[0], args[3]), l = power_of(args[1], args[3]), m = power_of(args[2], args[3]);
    if (!n || !l || !m) return std::nullopt;
    return *n * *l == *m;
  }
  if (name == "tau") {
    auto &x = args[0], &y = args[1], &h = args[2], &b1 = args[3];
    if (!in_ab(b1) || x.m != 0 || y.m != 0) return false;
    auto z = power_of(h, b1);
    if (!z) return false;
    return x.y * ZkRational(bs_k(x), *z) == y.y;
  }
  throw std::invalid_argument(fmt::format("no semantic predicate for '{}'", name));
}

GroupVerdict witness_check(const std::string& name, const std::vector<BsElem>& args, const WitnessConfig& cfg) {
  expect_arity(name, args);
  group_k(args);
  if (name == "alpha") return alpha_check(args[0]);
  if (name == "beta") return beta_check(args[0]);
  if (name == "delta") return delta_check(args[0], args[1], cfg.mutate);
  if (name == "sq") return sq_check(args[0], args[1], args[2]);
  if (name == "gamma") return gamma_check(args[0], args[1], args[2], args[3]);
  if (name == "tau") return tau_check(args[0], args[1], args[2], args[3], cfg);
  if (name == "pi") return pi_check(args[0], cfg);
  throw std::invalid_argument(fmt::format("no witness checker for '{}'", name));
}

std::vector<BsElem> ab_samples(long k) {
  return {gen_b(k), bs_make(k, 1, 1), bs_make(ZkRational(k, 3, 1), 1), bs_make(k, -2, 1)};
}

std::vector<BsElem> a1_samples(long k) {
  return {gen_a(k), bs_make(k, k, 0), bs_make(ZkRational(k, -1, 1), 0)};
}

namespace {

std::string instance_text(const std::string& name, const std::vector<BsElem>& args) {
  std::string s = name + "(";
  for (size_t i = 0; i < args.size(); ++i) s += (i ? ", " : "") + show(args[i]);
  return s + ")";
}

std::vector<std::vector<BsElem>> instances(const std::string& name, long k) {
  auto G = bs_group(k);
  std::vector<std::vector<BsElem>> out;
  if (name == "alpha" || name == "beta") {
    for (auto& g : group_box(k, 3, 0, 3, 3)) out.push_back({g});
  } else if (name == "delta") {
    for (auto& b1 : ab_samples(k))
      for (long i = -6; i <= 6; ++i)
        for (long j = -6; j <= 6; ++j) out.push_back({G.pow(b1, i), G.pow(b1, j)});
    auto box = group_box(k, 1, 0, 1, 2);
    for (auto& x : box)
      for (auto& y : box) out.push_back({x, y});
  } else if (name == "sq") {
    for (auto& b1 : ab_samples(k))
      for (long n = -4; n <= 4; ++n)
        for (long l = -3; l <= 21; ++l) out.push_back({G.pow(b1, n), G.pow(b1, l), b1});
  } else if (name == "gamma") {
    for (auto& b1 : ab_samples(k))
      for (long n = -3; n <= 3; ++n)
        for (long l = -3; l <= 3; ++l)
          for (long m = -3; m <= 3; ++m) out.push_back({G.pow(b1, n), G.pow(b1, l), G.pow(b1, m), b1});
  } else if (name == "tau") {
    std::vector<ZkRational> ls = {ZkRational(k, 1), ZkRational(k, -2), ZkRational(k, 3, 1), ZkRational(k)};
    for (auto& b1 : ab_samples(k)) {
      for (auto& l : ls)
        for (long z = -3; z <= 3; ++z) {
          auto lz = l * ZkRational(k, z);
          for (auto& t : {lz, lz + ZkRational(k, 1), lz - ZkRational(k, 1, 1), lz + lz + ZkRational(k, 1)})
            out.push_back({a_pow(k, l), a_pow(k, t), G.pow(b1, z), b1});
        }
      out.push_back({b1, gen_a(k), b1, b1});
      out.push_back({gen_a(k), gen_a(k), gen_a(k), b1});
      out.push_back({gen_a(k), gen_a(k), b1, G.mul(b1, b1)});
    }
  } else if (name == "pi") {
    for (long e = 0; e <= 1; ++e)
      for (long num = -30; num <= 30; ++num) out.push_back({bs_make(ZkRational(k, num, e), 0)});
    out.push_back({gen_b(k)});
    out.push_back({bs_make(k, 1, 1)});
    out.push_back({bs_make(k, 2, -1)});
  } else {
    throw std::invalid_argument(fmt::format("no agreement sweep for '{}'", name));
  }
  return out;
}

}  // namespace

SuiteReport agreement_sweep(const std::string& name, long k, const WitnessConfig& cfg) {
  SuiteReport rep;
  rep.suite = "definable/" + name;
  rep.k = {k};
  for (auto& args : instances(name, k)) {
    auto sem = semantic(name, args);
    if (!sem) {
      ++rep.skipped;
      continue;
    }
    auto v = witness_check(name, args, cfg);
    bool pass = v.conclusive() && (v.truth == Truth::True) == *sem;
    if (v.truth == Truth::False && v.note.empty()) pass = false;
    rep.check(pass, instance_text(name, args), *sem ? "true" : "false", truth_name(v.truth));
  }
  return rep;
}

SuiteReport cor5_sweep(long k, const WitnessConfig& cfg) {
  SuiteReport rep;
  rep.suite = "definable/cor5";
  rep.k = {k};
  auto G = bs_group(k);
  std::vector<BsElem> as = {gen_a(k), bs_make(k, k, 0), bs_make(k, 3, 0), bs_make(ZkRational(k, -2, 1), 0)};
  for (auto& a1 : as)
    for (auto& b1 : ab_samples(k)) {
      std::vector<BsElem> us;
      for (long z = -3; z <= 3; ++z) us.push_back(module_pow(a1, ZkRational(k, z)));
      us.push_back(G.mul(a1, gen_a(k)));
      us.push_back(G.mul(G.mul(a1, a1), gen_a(k)));
      us.push_back(b1);
      for (long zh = -3; zh <= 3; ++zh) {
        auto h = G.pow(b1, zh);
        for (auto& u : us) {
          bool expected = false;
          for (long z = -3; z <= 3; ++z)
            if (u == module_pow(a1, ZkRational(k, z)) && h == G.pow(b1, z)) expected = true;
          auto v = witness_check("tau", {a1, u, h, b1}, cfg);
          rep.check(v.conclusive() && (v.truth == Truth::True) == expected, instance_text("tau", {a1, u, h, b1}),
                    expected ? "true" : "false", truth_name(v.truth));
        }
      }
    }
  return rep;
}

}  // namespace bsk
