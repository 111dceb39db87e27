#include "bsk/interp.hpp"

#include <fmt/format.h>

#include <stdexcept>

namespace bsk {

namespace {

CodeFormula code_formula(std::vector<std::vector<std::string>> tuples, const std::string& text, Lang lang) {
  return {std::move(tuples), parse_formula(text, lang), {}};
}

long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("coordinate does not fit a machine integer");
  return v.get_si();
}

// z1 k^i1 = z2 k^i2 with all powers shifted to be non-negative
std::string eqk_text(const std::string& z1, const std::string& i1, const std::string& z2, const std::string& i2,
                     long k) {
  return fmt::format(
      "E s . ((s = {i1} | s = {i2}) & E d1 . E d2 . ({i1} = s + d1 & {i2} = s + d2 & E p1 . E p2 . "
      "(exp(p1, {k}, d1) & exp(p2, {k}, d2) & {z1}*p1 = {z2}*p2)))",
      fmt::arg("z1", z1), fmt::arg("i1", i1), fmt::arg("z2", z2), fmt::arg("i2", i2), fmt::arg("k", k));
}

}  // namespace

std::vector<std::string> source_symbols(Lang l) {
  if (l == Lang::Group) return {"mul", "inv", "e"};
  return {"add", "mul", "zero", "one", "exp"};
}

int symbol_tuples(Lang l, const std::string& s) {
  if (l == Lang::Group) {
    if (s == "mul") return 3;
    if (s == "inv") return 2;
    if (s == "e") return 1;
  } else {
    if (s == "add" || s == "mul" || s == "exp") return 3;
    if (s == "zero" || s == "one") return 1;
  }
  throw std::invalid_argument(fmt::format("unknown symbol '{}'", s));
}

std::vector<std::string> tuple_of(const std::string& var, const InterpCode& code) {
  std::vector<std::string> out;
  for (auto& c : code.components) out.push_back(var + c);
  return out;
}

InterpCode code_delta(long k) {
  RingContext ctx(k);
  InterpCode c;
  c.name = "delta";
  c.source = Lang::Group;
  c.target = Lang::Ring;
  c.dim = 3;
  c.dim_par = 0;
  c.components = {"_z", "_i", "_m"};
  auto X = tuple_of("x", c), Y = tuple_of("y", c), W = tuple_of("w", c);
  c.U = code_formula({X}, "true", Lang::Ring);
  c.E = code_formula({X, Y}, "x_m = y_m & " + eqk_text("x_z", "x_i", "y_z", "y_i", k), Lang::Ring);
  // (x_z k^x_i, x_m)(y_z k^y_i, y_m) = (x_z k^x_i + y_z k^(y_i - x_m), x_m + y_m)
  c.graphs["mul"] = code_formula(
      {X, Y, W},
      fmt::format("w_m = x_m + y_m & E j . (j + x_m = y_i & E s . ((s = x_i | s = j | s = w_i) & "
                  "E d1 . E d2 . E d3 . (x_i = s + d1 & j = s + d2 & w_i = s + d3 & E p1 . E p2 . E p3 . "
                  "(exp(p1, {0}, d1) & exp(p2, {0}, d2) & exp(p3, {0}, d3) & x_z*p1 + y_z*p2 = w_z*p3))))",
                  k),
      Lang::Ring);
  c.graphs["inv"] = code_formula({X, W}, "w_z + x_z = 0 & w_i = x_i + x_m & w_m + x_m = 0", Lang::Ring);
  c.graphs["e"] = code_formula({W}, "w_z = 0 & w_m = 0", Lang::Ring);
  return c;
}

InterpCode code_gamma(long k) {
  InterpCode c;
  c.name = "gamma";
  c.source = Lang::Ring;
  c.target = Lang::Group;
  c.dim = 1;
  c.dim_par = 2;
  c.params = {"pa", "pb"};
  c.components = {""};
  c.U = code_formula({{"x"}}, "[x,pb] = e", Lang::Group);
  c.E = code_formula({{"x"}, {"y"}}, "x = y", Lang::Group);
  c.graphs["add"] = code_formula({{"x"}, {"y"}, {"w"}}, "x*y = w", Lang::Group);
  c.graphs["mul"] = code_formula({{"x"}, {"y"}, {"w"}}, "gamma(x, y, w, pb)", Lang::Group);
  c.graphs["zero"] = code_formula({{"w"}}, "w = e", Lang::Group);
  c.graphs["one"] = code_formula({{"w"}}, "w = pb", Lang::Group);
  c.graphs["exp"] = code_formula({{"x"}, {"y"}, {"z"}}, "pexp(x, y, z, pb)", Lang::Group);
  c.macros = group_macros(k);
  // exponentiation on <b1>, evaluated semantically
  c.macros["pexp"] = MacroDef{{"x", "y", "z", "b1"}, nullptr, Lang::Group};
  return c;
}

InterpCode code_identity(Lang l) {
  InterpCode c;
  c.name = fmt::format("identity_{}", lang_name(l));
  c.source = c.target = l;
  c.components = {""};
  c.U = code_formula({{"x"}}, "true", l);
  c.E = code_formula({{"x"}, {"y"}}, "x = y", l);
  if (l == Lang::Group) {
    c.graphs["mul"] = code_formula({{"x"}, {"y"}, {"w"}}, "x*y = w", l);
    c.graphs["inv"] = code_formula({{"x"}, {"w"}}, "inv(x) = w", l);
    c.graphs["e"] = code_formula({{"w"}}, "w = e", l);
  } else {
    c.graphs["add"] = code_formula({{"x"}, {"y"}, {"w"}}, "x + y = w", l);
    c.graphs["mul"] = code_formula({{"x"}, {"y"}, {"w"}}, "x*y = w", l);
    c.graphs["zero"] = code_formula({{"w"}}, "w = 0", l);
    c.graphs["one"] = code_formula({{"w"}}, "w = 1", l);
    c.graphs["exp"] = code_formula({{"x"}, {"y"}, {"z"}}, "exp(x, y, z)", l);
  }
  return c;
}

namespace {

class Translator {
 public:
  Translator(const InterpCode& code, const Formula& f) : code_(code) {
    ns_.reserve(all_names(f));
    for (auto& p : code.params) ns_.reserve(p);
    auto reserve_cf = [&](const CodeFormula& cf) {
      ns_.reserve(all_names(cf.body));
      for (auto& t : cf.tuples) ns_.reserve(std::set<std::string>(t.begin(), t.end()));
    };
    reserve_cf(code.U);
    reserve_cf(code.E);
    for (auto& [s, g] : code.graphs) reserve_cf(g);
    for (auto& v : free_vars(f)) {
      auto t = tuple_of(v, code);
      for (auto& n : t) {
        for (auto& p : code.params)
          if (n == p) throw std::invalid_argument(fmt::format("variable '{}' clashes with a parameter", v));
        ns_.reserve(n);
      }
      env_[v] = t;
    }
  }

  Formula run(const Formula& f) { return tr(f); }
  std::vector<FlatHint>& hints() { return hints_; }

 private:
  struct Step {
    std::vector<std::string> tuple;
    Formula graph;
  };

  Formula inst(const CodeFormula& cf, const std::vector<std::vector<std::string>>& tuples) {
    if (cf.tuples.size() != tuples.size()) throw std::logic_error("tuple count mismatch");
    std::map<std::string, Term> b;
    for (size_t i = 0; i < tuples.size(); ++i)
      for (size_t j = 0; j < tuples[i].size(); ++j)
        if (cf.tuples[i][j] != tuples[i][j]) b[cf.tuples[i][j]] = t_var(tuples[i][j]);
    return b.empty() ? cf.body : substitute(cf.body, b);
  }

  const CodeFormula& graph(const std::string& symbol) {
    auto it = code_.graphs.find(symbol);
    if (it == code_.graphs.end())
      throw std::invalid_argument(fmt::format("unknown symbol '{}' for code {}", symbol, code_.name));
    return it->second;
  }

  std::vector<std::string> fresh_tuple(const std::string& base) {
    std::vector<std::string> t;
    for (auto& c : code_.components) t.push_back(ns_.fresh(base + c));
    return t;
  }

  std::vector<std::string> flatten(const Term& t, std::vector<Step>& steps) {
    std::string symbol;
    std::vector<Term> args;
    switch (t->kind) {
      case TermKind::Var: {
        auto it = env_.find(t->name);
        if (it == env_.end()) throw std::invalid_argument(fmt::format("unbound variable '{}'", t->name));
        return it->second;
      }
      case TermKind::Unit: symbol = "e"; break;
      case TermKind::Zero: symbol = "zero"; break;
      case TermKind::One: symbol = "one"; break;
      case TermKind::Inv: symbol = "inv"; args = {t->a}; break;
      case TermKind::Mul:
      case TermKind::RMul: symbol = "mul"; args = {t->a, t->b}; break;
      case TermKind::Add: symbol = "add"; args = {t->a, t->b}; break;
    }
    std::vector<std::vector<std::string>> tuples;
    for (auto& a : args) tuples.push_back(flatten(a, steps));
    auto w = fresh_tuple("t");
    auto all = tuples;
    all.push_back(w);
    steps.push_back({w, inst(graph(symbol), all)});
    hints_.push_back({symbol, tuples, w});
    return w;
  }

  Formula wrap(const std::vector<Step>& steps, Formula core) {
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) core = f_exists(it->tuple, f_and(it->graph, core));
    return core;
  }

  Formula tr(const Formula& f) {
    switch (f->kind) {
      case FKind::True:
      case FKind::False:
        return f;
      case FKind::Eq:
      case FKind::Exp:
      case FKind::Pred: {
        std::vector<Step> steps;
        std::vector<std::vector<std::string>> tuples;
        for (auto& t : f->terms) tuples.push_back(flatten(t, steps));
        Formula core;
        if (f->kind == FKind::Eq) {
          core = inst(code_.E, tuples);
        } else if (f->kind == FKind::Exp) {
          core = inst(graph("exp"), tuples);
        } else {
          auto it = code_.graphs.find(f->name);
          if (it != code_.graphs.end()) {
            core = inst(it->second, tuples);
          } else {
            // a primitive predicate of the source, applied coordinatewise
            std::vector<Term> flat;
            for (auto& t : tuples)
              for (auto& n : t) flat.push_back(t_var(n));
            for (auto& p : code_.params) flat.push_back(t_var(p));
            core = f_pred(f->name, flat);
          }
        }
        return wrap(steps, core);
      }
      case FKind::Not:
        return f_not(tr(f->a));
      case FKind::And:
        return f_and(tr(f->a), tr(f->b));
      case FKind::Or:
        return f_or(tr(f->a), tr(f->b));
      case FKind::Implies:
        return f_implies(tr(f->a), tr(f->b));
      case FKind::Exists:
      case FKind::Forall: {
        auto saved = env_.find(f->name) != env_.end() ? std::optional(env_[f->name]) : std::nullopt;
        auto t = fresh_tuple(f->name);
        env_[f->name] = t;
        auto body = tr(f->a);
        if (saved) env_[f->name] = *saved;
        else env_.erase(f->name);
        bool trivial = code_.U.body->kind == FKind::True;
        if (f->kind == FKind::Exists)
          return f_exists(t, trivial ? body : f_and(inst(code_.U, {t}), body));
        return f_forall(t, trivial ? body : f_implies(inst(code_.U, {t}), body));
      }
    }
    throw std::logic_error("unreachable");
  }

  const InterpCode& code_;
  NameSupply ns_;
  std::map<std::string, std::vector<std::string>> env_;
  std::vector<FlatHint> hints_;
};

}  // namespace

Translation translate(const Formula& phi, const InterpCode& code, const MacroTable& source_macros) {
  auto f = unfold(phi, source_macros);
  check_language(f, code.source);
  Translator tr(code, f);
  auto out = tr.run(f);
  return {out, std::move(tr.hints())};
}

InterpCode compose(const InterpCode& g, const InterpCode& d) {
  if (g.target != d.source)
    throw std::invalid_argument(fmt::format("cannot compose: {} targets {} but {} reads {}", g.name,
                                            lang_name(g.target), d.name, lang_name(d.source)));
  InterpCode c;
  c.name = g.name + "_" + d.name;
  c.source = g.source;
  c.target = d.target;
  c.dim = g.dim * d.dim;
  c.dim_par = g.dim_par * d.dim + d.dim_par;
  for (auto& c1 : g.components)
    for (auto& c2 : d.components) c.components.push_back(c1 + c2);
  for (auto& p : g.params)
    for (auto& c2 : d.components) c.params.push_back(p + c2);
  c.params.insert(c.params.end(), d.params.begin(), d.params.end());
  auto lift = [&](const CodeFormula& cf) {
    CodeFormula out;
    for (auto& t : cf.tuples) {
      std::vector<std::string> nt;
      for (auto& n : t)
        for (auto& c2 : d.components) nt.push_back(n + c2);
      out.tuples.push_back(nt);
    }
    auto tr = translate(cf.body, d, g.macros);
    out.body = tr.formula;
    out.hints = std::move(tr.hints);
    return out;
  };
  c.U = lift(g.U);
  c.E = lift(g.E);
  for (auto& [s, cf] : g.graphs) c.graphs[s] = lift(cf);
  c.macros = d.macros;
  return c;
}

nlohmann::ordered_json code_to_json(const InterpCode& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["source"] = lang_name(c.source);
  j["target"] = lang_name(c.target);
  j["dim"] = c.dim;
  j["dim_par"] = c.dim_par;
  j["params"] = c.params;
  j["components"] = c.components;
  j["U"] = to_text(c.U.body);
  j["E"] = to_text(c.E.body);
  nlohmann::ordered_json graphs = nlohmann::ordered_json::object(), tuples = nlohmann::ordered_json::object();
  tuples["U"] = c.U.tuples;
  tuples["E"] = c.E.tuples;
  for (auto& [s, g] : c.graphs) {
    graphs[s] = to_text(g.body);
    tuples[s] = g.tuples;
  }
  j["graphs"] = graphs;
  j["tuples"] = tuples;
  nlohmann::ordered_json macros = nlohmann::ordered_json::object();
  for (auto& [name, m] : c.macros)
  {
    nlohmann::ordered_json md;
    md["params"] = m.params;
    md["formula"] = m.body ? nlohmann::ordered_json(to_text(m.body)) : nlohmann::ordered_json(nullptr);
    macros[name] = md;
  }
  j["macros"] = macros;
  return j;
}

InterpCode code_from_json(const nlohmann::ordered_json& j) {
  InterpCode c;
  c.name = j.at("name").get<std::string>();
  c.source = lang_from_name(j.at("source").get<std::string>());
  c.target = lang_from_name(j.at("target").get<std::string>());
  c.dim = j.at("dim").get<int>();
  c.dim_par = j.at("dim_par").get<int>();
  c.params = j.at("params").get<std::vector<std::string>>();
  c.components = j.at("components").get<std::vector<std::string>>();
  auto& tuples = j.at("tuples");
  auto read = [&](const std::string& slot, const std::string& text) {
    return CodeFormula{tuples.at(slot).get<std::vector<std::vector<std::string>>>(), parse_formula(text, c.target), {}};
  };
  c.U = read("U", j.at("U").get<std::string>());
  c.E = read("E", j.at("E").get<std::string>());
  for (auto& [s, text] : j.at("graphs").items()) c.graphs[s] = read(s, text.get<std::string>());
  if (j.contains("macros"))
    for (auto& [name, m] : j.at("macros").items()) {
      MacroDef def;
      def.params = m.at("params").get<std::vector<std::string>>();
      def.lang = c.target;
      if (!m.at("formula").is_null()) def.body = parse_formula(m.at("formula").get<std::string>(), c.target);
      c.macros[name] = def;
    }
  if (static_cast<int>(c.components.size()) != c.dim || static_cast<int>(c.params.size()) != c.dim_par)
    throw std::invalid_argument("code dimensions do not match its tuples");
  return c;
}

BsElem mu_delta(long k, const Triple& t) { return bs_make(ZkRational(k, t[0], -to_long(t[1])), to_long(t[2])); }

Triple mu_delta_section(const BsElem& g) { return {g.y.num(), Int(-g.y.e()), Int(g.m)}; }

bool delta_equiv(long k, const Triple& a, const Triple& b) {
  return a[2] == b[2] && ZkRational(k, a[0], -to_long(a[1])) == ZkRational(k, b[0], -to_long(b[1]));
}

Triple delta_mul(long k, const Triple& a, const Triple& b) {
  long i1 = to_long(a[1]), i2 = to_long(b[1]) - to_long(a[2]);
  long i3 = std::min(i1, i2);
  Int z3 = a[0] * k_pow(k, i1 - i3) + b[0] * k_pow(k, i2 - i3);
  return {z3, Int(i3), a[2] + b[2]};
}

Triple delta_inv(const Triple& a) { return {-a[0], a[1] + a[2], -a[2]}; }

long mu_gamma(const BsElem& power, const BsElem& b1) {
  auto n = power_of(power, b1);
  if (!n) throw std::invalid_argument("not in <b1>");
  return *n;
}

SymbolModel<Int> delta_model(long k) {
  return [k](const std::string& s, const std::vector<std::vector<Int>>& args) -> std::vector<Int> {
    auto tr = [](const std::vector<Int>& v) { return Triple{v.at(0), v.at(1), v.at(2)}; };
    Triple r;
    if (s == "mul") r = delta_mul(k, tr(args.at(0)), tr(args.at(1)));
    else if (s == "inv") r = delta_inv(tr(args.at(0)));
    else if (s == "e") r = {0, 0, 0};
    else return {};
    return {r[0], r[1], r[2]};
  };
}

SymbolModel<BsElem> gamma_model(const BsElem& b1) {
  return [b1](const std::string& s, const std::vector<std::vector<BsElem>>& args) -> std::vector<BsElem> {
    auto G = bs_group(bs_k(b1));
    if (s == "add") return {G.mul(args.at(0).at(0), args.at(1).at(0))};
    if (s == "zero") return {G.identity()};
    if (s == "one") return {b1};
    if (s == "mul") {
      auto n = power_of(args.at(0).at(0), b1), l = power_of(args.at(1).at(0), b1);
      if (!n || !l) return {};
      return {G.pow(b1, *n * *l)};
    }
    return {};
  };
}

namespace {

template <class V>
auto hint_candidates(const std::vector<FlatHint>& hints, SymbolModel<V> model) {
  std::map<std::string, std::pair<const FlatHint*, size_t>> index;
  for (auto& h : hints)
    for (size_t i = 0; i < h.result.size(); ++i) index[h.result[i]] = {&h, i};
  return [index = std::move(index), model = std::move(model)](
             const std::string& var, bool, const Formula&, const Assignment<V>& env) -> std::optional<Candidates<V>> {
    auto it = index.find(var);
    if (it == index.end()) return std::nullopt;
    auto [h, comp] = it->second;
    std::vector<std::vector<V>> args;
    for (auto& t : h->args) {
      std::vector<V> vals;
      for (auto& n : t) {
        auto v = lookup(env, n);
        if (!v) return std::nullopt;
        vals.push_back(*v);
      }
      args.push_back(std::move(vals));
    }
    auto r = model(h->symbol, args);
    if (r.size() != h->result.size()) return std::nullopt;
    // the graph pins the tuple up to E, and the rest of the formula cannot tell E-equivalent tuples apart
    return Candidates<V>{{r[comp]}, true};
  };
}

}  // namespace

Verdict<Int> eval_in_ring(const Formula& f, const std::vector<FlatHint>& hints, long k, const Assignment<Int>& env,
                          long ring_max) {
  RingStructure R(ring_max);
  auto pins = ring_pin_hooks();
  auto hc = hint_candidates<Int>(hints, delta_model(k));
  EvalHooks<Int> hooks;
  hooks.candidates = [hc, pins](const std::string& var, bool ex, const Formula& body,
                                const Assignment<Int>& env) -> std::optional<Candidates<Int>> {
    if (auto c = hc(var, ex, body, env)) return c;
    return pins.candidates(var, ex, body, env);
  };
  return eval_bounded(f, R, env, hooks);
}

Verdict<BsElem> eval_in_group(const Formula& f, const std::vector<FlatHint>& hints, const InterpCode& gamma,
                              const BsElem& b1, const Assignment<BsElem>& env, const GroupStructure& box) {
  EvalHooks<BsElem> hooks;
  hooks.candidates = hint_candidates<BsElem>(hints, gamma_model(b1));
  hooks.macros = &gamma.macros;
  hooks.decide = [](const std::string& name, const std::vector<BsElem>& args) -> std::optional<GroupVerdict> {
    if (name == "pexp") {
      auto& b = args.at(3);
      auto x = power_of(args[0], b), y = power_of(args[1], b), z = power_of(args[2], b);
      if (!x || !y || !z || b.m != 1) return std::nullopt;
      return eval_ring_atom(*x, *y, *z) ? GroupVerdict::yes() : GroupVerdict::no();
    }
    if (name == "alpha" || name == "beta" || name == "delta" || name == "sq" || name == "gamma" || name == "tau" ||
        name == "pi") {
      auto v = witness_check(name, args);
      if (v.conclusive()) return v;
    }
    return std::nullopt;
  };
  return eval_bounded(f, box, env, hooks);
}

GroupVerdict theta_bs_check(const BsElem& zt, const BsElem& it, const BsElem& mt, const BsElem& x, const BsElem& a1,
                            const BsElem& b1, bool mutate, const WitnessConfig& cfg) {
  if (!classify(a1).in_A1 || !classify(b1).in_Ab) throw std::invalid_argument("parameters outside A1 x Ab");
  auto G = bs_group(bs_k(x));
  if (!(G.comm(it, b1) == G.identity())) return GroupVerdict::no("[it, b1] != e");
  if (!(G.comm(mt, b1) == G.identity())) return GroupVerdict::no("[mt, b1] != e");
  auto arg = G.mul(G.mul(G.mul(it, x), mutate ? mt : G.inv(mt)), G.inv(it));
  return witness_check("tau", {a1, arg, zt, b1}, cfg);
}

bool theta_z_check(long k, const Triple& zim, const Int& x, const std::array<Int, 6>& p, bool mutate) {
  if (!is_unit(ZkRational(k, p[0], -to_long(p[1]))) || p[2] != 0 || p[5] != 1)
    throw std::invalid_argument("parameters do not encode a pair in A1 x Ab");
  if (x != zim[2]) return false;
  long m = to_long(zim[2]);
  auto ratio = zk_divides(k_pow_minus_one(k, -1), k_pow_minus_one(k, -m));
  if (!ratio) throw std::logic_error("k^-1 - 1 must divide k^-m - 1");
  Int zb = mutate ? Int(-p[3]) : p[3];
  return ZkRational(k, zim[0], -to_long(zim[1])) == ZkRational(k, zb, -to_long(p[4])) * *ratio;
}

namespace {

std::string triple_text(const Triple& t) { return fmt::format("({}, {}, {})", t[0].get_str(), t[1].get_str(), t[2].get_str()); }

std::vector<Triple> triple_box(long zb, long ib, long mb) {
  std::vector<Triple> out;
  for (long z = -zb; z <= zb; ++z)
    for (long i = -ib; i <= ib; ++i)
      for (long m = -mb; m <= mb; ++m) out.push_back({Int(z), Int(i), Int(m)});
  return out;
}

void bind_tuple(Assignment<Int>& env, const std::vector<std::string>& names, const Triple& t) {
  for (size_t i = 0; i < 3; ++i) env.emplace_back(names[i], t[i]);
}

}  // namespace

SuiteReport verify_biinterp(long k, const BiinterpConfig& cfg) {
  SuiteReport rep;
  rep.suite = "biinterp";
  rep.k = {k};
  rep.box = {{"z", cfg.box}, {"i", cfg.box}, {"m", cfg.box}};
  auto G = bs_group(k);
  const long B = cfg.box;
  auto a1s = a1_samples(k);
  auto b1s = ab_samples(k);
  std::vector<std::pair<BsElem, BsElem>> pairs;
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 3; ++j) pairs.push_back({a1s[i], b1s[j]});

  // (i) theta_BS is the graph of (b1^z, b1^i, b1^m) -> a1^(z k^i) b1^m
  for (auto& [a1, b1] : pairs) {
    std::string par = fmt::format("a1={} b1={}", to_string(a1), to_string(b1));
    for (long z = -B; z <= B; ++z)
      for (long i = -B; i <= B; ++i)
        for (long m = -B; m <= B; ++m) {
          auto zt = G.pow(b1, z), it = G.pow(b1, i), mt = G.pow(b1, m);
          auto x = G.mul(module_pow(a1, ZkRational(k, z) * ZkRational::power_of_k(k, i)), mt);
          auto inst = fmt::format("theta_bs z={} i={} m={} {}", z, i, m, par);
          auto check = [&](const std::string& what, const BsElem& zt_, const BsElem& it_, const BsElem& x_,
                           bool expected) {
            auto v = theta_bs_check(zt_, it_, mt, x_, a1, b1, cfg.mutate, cfg.witness);
            bool pass = v.conclusive() && (v.truth == Truth::True) == expected;
            rep.check(pass, inst + what, expected ? "true" : "false", truth_name(v.truth));
          };
          check("", zt, it, x, true);
          check(" x*a", zt, it, G.mul(x, gen_a(k)), false);
          check(" x*b1", zt, it, G.mul(x, b1), false);
          check(" zt*a", G.mul(zt, gen_a(k)), it, x, false);
          check(" it*a", zt, G.mul(it, gen_a(k)), x, false);
        }
  }

  // (ii) theta_Z is the graph of mu_Gamma o mu_Delta; (iii) U of the composed code
  auto theta = named_formula("theta_z", k);
  auto comp = compose(code_gamma(k), code_delta(k));
  auto box = triple_box(B, B, B);
  for (auto& [a1, b1] : pairs) {
    auto sa = mu_delta_section(a1), sb = mu_delta_section(b1);
    // the canonical preimage and one shifted representative
    std::vector<std::array<Int, 6>> reps = {
        {sa[0], sa[1], sa[2], sb[0], sb[1], sb[2]},
        {sa[0] * k, sa[1] - 1, sa[2], sb[0] * k * k, sb[1] - 2, sb[2]}};
    for (auto& r : reps) {
      std::string par = fmt::format("params=({}, {}, {}, {}, {}, {})", r[0].get_str(), r[1].get_str(),
                                    r[2].get_str(), r[3].get_str(), r[4].get_str(), r[5].get_str());
      Assignment<Int> penv;
      for (size_t i = 0; i < 6; ++i) penv.emplace_back(theta.params[4 + i], r[i]);
      Assignment<Int> uenv;
      for (size_t i = 0; i < 6; ++i) uenv.emplace_back(comp.params[i], r[i]);
      for (auto& t : box) {
        auto g = mu_delta(k, t);
        bool in_u = G.comm(g, b1) == G.identity();
        // the characterization zk^i = zb k^ib (k^-m - 1)/(k^-1 - 1)
        auto ratio = *zk_divides(k_pow_minus_one(k, -1), k_pow_minus_one(k, -to_long(t[2])));
        bool charac = ZkRational(k, t[0], -to_long(t[1])) == ZkRational(k, r[3], -to_long(r[4])) * ratio;
        rep.check(in_u == charac, "U characterization " + triple_text(t) + " " + par, in_u ? "true" : "false",
                  charac ? "true" : "false");

        auto env = uenv;
        bind_tuple(env, comp.U.tuples[0], t);
        auto uv = eval_in_ring(comp.U.body, comp.U.hints, k, env);
        rep.check(uv.conclusive() && (uv.truth == Truth::True) == in_u, "U_composed " + triple_text(t) + " " + par,
                  in_u ? "true" : "false", truth_name(uv.truth));

        long m = to_long(t[2]);
        for (long x = m - 1; x <= m + 1; ++x) {
          bool expected = in_u && mu_gamma(g, b1) == x;
          bool closed = theta_z_check(k, t, Int(x), r, cfg.mutate);
          auto inst = fmt::format("theta_z {} x={} {}", triple_text(t), x, par);
          rep.check(closed == expected, inst, expected ? "true" : "false", closed ? "true" : "false");
          if (cfg.mutate) continue;
          Assignment<Int> fenv = {{"zt", t[0]}, {"it", t[1]}, {"mt", t[2]}, {"x", Int(x)}};
          fenv.insert(fenv.end(), penv.begin(), penv.end());
          auto fv = eval_in_ring(theta.ast, {}, k, fenv);
          rep.check(fv.conclusive() && (fv.truth == Truth::True) == expected, inst + " (formula)",
                    expected ? "true" : "false", truth_name(fv.truth));
        }
      }
    }
  }
  return rep;
}

SuiteReport verify_delta(long k, long zb, long ib, long mb) {
  SuiteReport rep;
  rep.suite = "interp/delta";
  rep.k = {k};
  rep.box = {{"z", zb}, {"i", ib}, {"m", mb}};
  auto G = bs_group(k);
  auto box = triple_box(zb, ib, mb);
  std::vector<BsElem> img;
  for (auto& t : box) img.push_back(mu_delta(k, t));
  for (size_t a = 0; a < box.size(); ++a) {
    auto inv = mu_delta(k, delta_inv(box[a]));
    rep.check(inv == G.inv(img[a]), "inv " + triple_text(box[a]), to_string(G.inv(img[a])), to_string(inv));
    auto sec = mu_delta_section(img[a]);
    rep.check(mu_delta(k, sec) == img[a] && delta_equiv(k, sec, box[a]), "section " + triple_text(box[a]),
              triple_text(box[a]), triple_text(sec));
    rep.check(delta_equiv(k, box[a], box[a]), "reflexive " + triple_text(box[a]), "true", "false");
    for (size_t b = 0; b < box.size(); ++b) {
      auto prod = mu_delta(k, delta_mul(k, box[a], box[b]));
      auto want = G.mul(img[a], img[b]);
      rep.check(prod == want, "mul " + triple_text(box[a]) + " " + triple_text(box[b]), to_string(want),
                to_string(prod));
      bool eq = delta_equiv(k, box[a], box[b]);
      rep.check(eq == (img[a] == img[b]) && eq == delta_equiv(k, box[b], box[a]),
                "equiv " + triple_text(box[a]) + " " + triple_text(box[b]), img[a] == img[b] ? "true" : "false",
                eq ? "true" : "false");
    }
  }
  for (auto& g : group_box(k, zb, 0, ib, mb)) {
    auto sec = mu_delta_section(g);
    rep.check(mu_delta(k, sec) == g && sec[1] <= 0, "round trip " + to_string(g), to_string(g),
              to_string(mu_delta(k, sec)));
  }

  // transitivity and the graph formulas themselves on a smaller box
  auto small = triple_box(2, 1, 1);
  for (auto& a : small)
    for (auto& b : small) {
      if (!delta_equiv(k, a, b)) continue;
      for (auto& c : small)
        if (delta_equiv(k, b, c))
          rep.check(delta_equiv(k, a, c), "transitive " + triple_text(a) + " " + triple_text(c), "true", "false");
    }
  auto code = code_delta(k);
  auto X = tuple_of("x", code), Y = tuple_of("y", code), W = tuple_of("w", code);
  auto holds = [&](const Formula& f, std::initializer_list<std::pair<const std::vector<std::string>*, Triple>> bs) {
    Assignment<Int> env;
    for (auto& [names, t] : bs) bind_tuple(env, *names, t);
    auto v = eval_in_ring(f, {}, k, env);
    return v.conclusive() ? std::optional<bool>(v.truth == Truth::True) : std::nullopt;
  };
  auto show = [](std::optional<bool> v) { return v ? (*v ? "true" : "false") : "inconclusive"; };
  for (auto& a : small) {
    auto iv = holds(code.graphs["inv"].body, {{&X, a}, {&W, delta_inv(a)}});
    rep.check(iv == true, "inv graph " + triple_text(a), "true", show(iv));
    for (auto& b : small) {
      bool want = delta_equiv(k, a, b);
      auto ev = holds(code.E.body, {{&X, a}, {&Y, b}});
      rep.check(ev == want, "E formula " + triple_text(a) + " " + triple_text(b), want ? "true" : "false", show(ev));
      auto p = delta_mul(k, a, b);
      auto mv = holds(code.graphs["mul"].body, {{&X, a}, {&Y, b}, {&W, p}});
      rep.check(mv == true, "mul graph " + triple_text(a) + " " + triple_text(b), "true", show(mv));
      Triple off = {p[0] + 1, p[1], p[2]};
      auto ov = holds(code.graphs["mul"].body, {{&X, a}, {&Y, b}, {&W, off}});
      rep.check(ov == false, "mul graph off " + triple_text(a) + " " + triple_text(b), "false", show(ov));
    }
  }
  for (auto& [t, want] : std::vector<std::pair<Triple, bool>>{{{0, 0, 0}, true}, {{0, 5, 0}, true}, {{1, 0, 0}, false}}) {
    auto v = holds(code.graphs["e"].body, {{&W, t}});
    rep.check(v == want, "e graph " + triple_text(t), want ? "true" : "false", show(v));
  }
  return rep;
}

std::vector<std::string> group_corpus() {
  return {"x = e",
          "x*y = y*x",
          "inv(x)*x = e",
          "[x,y] = e",
          "inv(y)*x*y = x*x",
          "x*y = e",
          "x = y -> x*inv(y) = e",
          "~(x*x = y)",
          "x*y*inv(x) = y & ~(x = e)",
          "x = e | y*y*y = x",
          "[[x,y],y] = e",
          "inv(x*y) = inv(y)*inv(x)"};
}

std::vector<std::string> ring_corpus() {
  return {"x + y = y + x",
          "x*y = 1",
          "x + x = x*(1 + 1)",
          "x*y = z",
          "x + 1 = y",
          "~(x = 0) -> x*x = x*y",
          "exp(x, y, z)",
          "exp(x, 1 + 1, y)",
          "(x*y)*z = x*(y*z)",
          "x*(y + z) = x*y + x*z",
          "(x = 0 | y = 0) <-> x*y = 0",
          "x*x + y = z + 1"};
}

SuiteReport verify_translation(long k) {
  SuiteReport rep;
  rep.suite = "interp/translation";
  rep.k = {k};
  rep.box = {{"z", 2}, {"i", 1}, {"m", 1}, {"ring", 2}};
  auto delta = code_delta(k);
  GroupStructure Gs(k, std::vector<BsElem>{bs_identity(k)});
  auto triples = triple_box(2, 1, 1);
  for (auto& src : group_corpus()) {
    auto phi = parse_formula(src, Lang::Group);
    auto tr = translate(phi, delta);
    auto vars = free_vars(phi);
    std::vector<std::string> names(vars.begin(), vars.end());
    std::vector<size_t> idx(names.size(), 0);
    for (;;) {
      Assignment<BsElem> genv;
      Assignment<Int> renv;
      std::string inst = src;
      for (size_t v = 0; v < names.size(); ++v) {
        auto& t = triples[idx[v]];
        genv.emplace_back(names[v], mu_delta(k, t));
        bind_tuple(renv, tuple_of(names[v], delta), t);
        inst += fmt::format(" {}={}", names[v], triple_text(t));
      }
      auto want = eval_bounded(phi, Gs, genv).truth;
      auto got = eval_in_ring(tr.formula, tr.hints, k, renv).truth;
      rep.check(want != Truth::Unknown && got == want, "delta: " + inst, truth_name(want), truth_name(got));
      size_t v = 0;
      while (v < idx.size() && ++idx[v] == triples.size()) idx[v++] = 0;
      if (v == idx.size()) break;
    }
  }

  auto gamma = code_gamma(k);
  RingStructure R(0);
  auto G = bs_group(k);
  for (auto& b1 : {ab_samples(k)[0], ab_samples(k)[1]}) {
    GroupStructure box(k, std::vector<BsElem>{G.identity()});
    for (auto& src : ring_corpus()) {
      auto phi = parse_formula(src, Lang::Ring);
      auto tr = translate(phi, gamma);
      auto vars = free_vars(phi);
      std::vector<std::string> names(vars.begin(), vars.end());
      std::vector<long> val(names.size(), -2);
      for (;;) {
        Assignment<Int> renv;
        Assignment<BsElem> genv = {{"pa", gen_a(k)}, {"pb", b1}};
        std::string inst = src + " b1=" + to_string(b1);
        for (size_t v = 0; v < names.size(); ++v) {
          renv.emplace_back(names[v], Int(val[v]));
          genv.emplace_back(names[v], G.pow(b1, val[v]));
          inst += fmt::format(" {}={}", names[v], val[v]);
        }
        auto want = eval_bounded(phi, R, renv).truth;
        auto got = eval_in_group(tr.formula, tr.hints, gamma, b1, genv, box).truth;
        rep.check(want != Truth::Unknown && got == want, "gamma: " + inst, truth_name(want), truth_name(got));
        size_t v = 0;
        while (v < val.size() && ++val[v] > 2) val[v++] = -2;
        if (v == val.size()) break;
      }
    }
  }
  return rep;
}

SuiteReport verify_composition(long k) {
  SuiteReport rep;
  rep.suite = "interp/composition";
  rep.k = {k};
  std::vector<InterpCode> codes = {code_delta(k), code_gamma(k), code_identity(Lang::Group),
                                   code_identity(Lang::Ring)};
  for (auto& g : codes)
    for (auto& d : codes) {
      if (g.target != d.source) continue;
      auto c = compose(g, d);
      int dim = g.dim * d.dim, par = g.dim_par * d.dim + d.dim_par;
      rep.check(c.dim == dim && c.dim_par == par && static_cast<int>(c.components.size()) == dim &&
                    static_cast<int>(c.params.size()) == par,
                c.name, fmt::format("dim {} dim_par {}", dim, par), fmt::format("dim {} dim_par {}", c.dim, c.dim_par));
      // every free variable of a composed formula is a tuple coordinate or a parameter
      auto scoped = [&](const CodeFormula& cf) {
        std::set<std::string> allowed(c.params.begin(), c.params.end());
        for (auto& t : cf.tuples) allowed.insert(t.begin(), t.end());
        for (auto& v : free_vars(cf.body))
          if (!allowed.count(v)) return false;
        return true;
      };
      bool ok = scoped(c.U) && scoped(c.E);
      for (auto& [s, cf] : c.graphs) ok = ok && scoped(cf);
      rep.check(ok, c.name + " free variables", "scoped", ok ? "scoped" : "stray variable");
    }
  auto delta = code_delta(k);
  auto with_id = compose(code_identity(Lang::Group), delta);
  rep.check(equal(with_id.E.body, delta.E.body) && with_id.U.body->kind == FKind::True, "identity o delta", "same E",
            "different");
  return rep;
}

}  // namespace bsk
