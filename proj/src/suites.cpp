#include "bsk/suites.hpp"

#include "bsk/definable.hpp"
#include "bsk/facts.hpp"
#include "bsk/interp.hpp"
#include "bsk/nonstd.hpp"

#include <fmt/format.h>

#include <random>
#include <stdexcept>

namespace bsk {

nlohmann::ordered_json to_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["k"] = r.k;
  j["box"] = r.box;
  j["checked"] = r.checked;
  j["skipped"] = r.skipped;
  auto v = nlohmann::ordered_json::array();
  for (auto& x : r.violations) v.push_back({{"instance", x.instance}, {"expected", x.expected}, {"got", x.got}});
  j["violations"] = v;
  return j;
}

void validate(const SuiteConfig& cfg) {
  if (cfg.k.empty()) throw std::invalid_argument("no k given");
  for (long k : cfg.k)
    if (k < 2) throw std::invalid_argument(fmt::format("k must be at least 2, got {}", k));
  if (cfg.z_max < 1 || cfg.i_max < 1 || cfg.m_max < 1 || cfg.ring_max < 1 || cfg.n_max < 1 || cfg.z_search < 1 ||
      cfg.i_search < 1 || cfg.samples < 1)
    throw std::invalid_argument("bounds must be positive");
  if (cfg.n_range.empty()) throw std::invalid_argument("empty n range");
  for (long n : cfg.n_range)
    if (n == 0) throw std::invalid_argument("the n range must not contain 0");
}

std::vector<std::string> suite_names() { return {"facts", "group", "interp", "definable", "biinterp", "nonstd"}; }

namespace {

const char* tf(bool b) { return b ? "true" : "false"; }

bool divides_int(long n, long m) { return m % n == 0; }

}  // namespace

SuiteReport facts_suite(const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "facts";
  rep.k = cfg.k;
  const long N = cfg.n_max;
  rep.box = {{"n", N}, {"m", N}};

  for (long n = -N; n <= N; ++n) {
    if (n == 0) continue;
    for (long m = -N; m <= N; ++m) {
      bool got = laurent_divides(LaurentPoly::x_pow_minus_one(n), LaurentPoly::x_pow_minus_one(m)).has_value();
      rep.check(got == divides_int(n, m), fmt::format("fact1 n={} m={}", n, m), tf(divides_int(n, m)), tf(got));
    }
  }
  for (long k : cfg.k)
    for (long n = -N; n <= N; ++n) {
      if (n == 0) continue;
      for (long m = -N; m <= N; ++m) {
        bool got = zk_divides(k_pow_minus_one(k, n), k_pow_minus_one(k, m)).has_value();
        rep.check(got == divides_int(n, m), fmt::format("fact2 k={} n={} m={}", k, n, m), tf(divides_int(n, m)),
                  tf(got));
      }
    }

  // x^(nl) - 1 = (x^n - 1)(l + (x^n - 1) g)
  for (long n = -5; n <= 5; ++n) {
    if (n == 0) continue;
    for (long l = -5; l <= 5; ++l) {
      auto g = cor1_witness(n, l);
      auto d = LaurentPoly::x_pow_minus_one(n);
      auto rhs = d * (LaurentPoly(Int(l)) + d * g);
      rep.check(rhs == LaurentPoly::x_pow_minus_one(n * l), fmt::format("fact3 n={} l={}", n, l),
                LaurentPoly::x_pow_minus_one(n * l).str(), rhs.str());
    }
  }

  for (long k : cfg.k) {
    // residue r = (k^(nz) - 1)/(k^n - 1) and r = z + (k^n - 1) q
    for (long z = -6; z <= 6; ++z)
      for (long n = -6; n <= 6; ++n) {
        if (n == 0) continue;
        auto inst = fmt::format("cor2 k={} z={} n={}", k, z, n);
        try {
          auto r = cor2_residue(k, z, n);
          auto d = k_pow_minus_one(k, n);
          bool ok = r.residue * d == k_pow_minus_one(k, n * z) && r.residue - ZkRational(k, z) == r.quotient * d;
          rep.check(ok, inst, "congruent", r.residue.str());
        } catch (const std::logic_error& e) {
          rep.check(false, inst, "congruent", e.what());
        }
      }

    // s_n exists for every n iff l z = t
    std::vector<ZkRational> ls = {ZkRational(k, 1), ZkRational(k, 3, 1), ZkRational(k, -2), ZkRational(k, 5, 2)};
    std::vector<ZkRational> offsets = {ZkRational(k, 0), ZkRational(k, 1), ZkRational(k, -2), ZkRational(k, 3, 1),
                                       ZkRational(k, 7)};
    for (auto& l : ls)
      for (long z = -6; z <= 6; ++z)
        for (auto& off : offsets) {
          auto t = l * ZkRational(k, z) + off;
          bool all = true;
          for (long n = -6; n <= 6 && all; ++n)
            if (n != 0 && !sn_witness(l, z, t, n)) all = false;
          bool want = off.is_zero();
          rep.check(all == want, fmt::format("cor4 k={} l={} z={} t={}", k, l.str(), z, t.str()), tf(want), tf(all));
        }
  }

  // units: a z = k^i for some integer z in [-1000, 1000], i in [0, 8]
  // (|z| <= 200 is too small: 32 z = 6^i first happens at z = 243)
  for (long k : {2L, 6L, 12L}) {
    for (long num = -50; num <= 50; ++num)
      for (long e = 0; e <= 2; ++e) {
        ZkRational a(k, num, e);
        if (a.e() != e && num != 0) continue;
        bool reach = false;
        if (num != 0)
          for (long i = 0; i <= 8 && !reach; ++i) {
            Int p = k_pow(k, i + a.e());
            if (p % a.num() == 0 && abs(p / a.num()) <= 1000) reach = true;
          }
        rep.check(is_unit(a) == reach, fmt::format("unit k={} a={}", k, a.str()), tf(reach), tf(is_unit(a)));
      }
  }
  return rep;
}

SuiteReport group_suite(long k, const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "group";
  rep.k = {k};
  rep.box = {{"num", 1000}, {"e", 6}, {"m", 6}, {"z", cfg.z_max}, {"i", cfg.i_max}, {"m_box", cfg.m_max}};
  auto G = bs_group(k);
  std::mt19937_64 rng(cfg.seed + k);
  std::uniform_int_distribution<long> num(-1000, 1000), den(0, 6), mm(-6, 6);
  auto rnd = [&] {
    long y = num(rng), e = den(rng);
    return bs_make(ZkRational(k, y, e), mm(rng));
  };
  auto same = [&](const BsElem& want, const BsElem& got, const std::string& inst) {
    rep.check(want == got, inst, to_string(want), to_string(got));
  };
  auto e = G.identity();
  for (int s = 0; s < 1000; ++s) {
    auto g = rnd(), h = rnd(), f = rnd();
    auto inst = fmt::format("{} {} {}", to_string(g), to_string(h), to_string(f));
    same(G.mul(G.mul(g, h), f), G.mul(g, G.mul(h, f)), "associative " + inst);
    same(g, G.mul(g, e), "right identity " + inst);
    same(g, G.mul(e, g), "left identity " + inst);
    same(e, G.mul(g, G.inv(g)), "right inverse " + inst);
    same(e, G.mul(G.inv(g), g), "left inverse " + inst);
    same(G.conj_longhand(g, h), G.conj(g, h), "conj " + inst);
    same(G.comm_longhand(g, h), G.comm(g, h), "comm " + inst);
  }
  for (int s = 0; s < 40; ++s) {
    auto g = rnd();
    for (long n = -16; n <= 16; ++n)
      same(bs_pow_iter(g, n), bs_pow(g, n), fmt::format("pow {} {}", to_string(g), n));
  }
  same(bs_pow(gen_a(k), k), G.conj(gen_a(k), gen_b(k)), "relation b^-1 a b = a^k");

  std::vector<BsElem> as, xs;
  for (int s = 0; s < 12; ++s) {
    auto g = rnd();
    as.push_back(bs_make(g.y, 0));
    xs.push_back(rnd());
  }
  for (auto& x1 : as)
    for (auto& x2 : xs)
      for (long n = -6; n <= 6; ++n)
        same(G.conj(x1, bs_pow(bs_make(ZkRational(k), x2.m), n)), G.conj(x1, bs_pow(x2, n)),
             fmt::format("semi {} {} {}", to_string(x1), to_string(x2), n));
  for (auto& b1 : ab_samples(k))
    for (auto& u : as)
      for (long n = -6; n <= 6; ++n) {
        auto inst = fmt::format("lemma4 {} {} {}", to_string(b1), to_string(u), n);
        auto want = bs_make(u.y * ZkRational::power_of_k(k, n), 0);
        same(want, G.conj(u, bs_pow(b1, n)), inst);
        same(want, G.conj(u, bs_pow(gen_b(k), n)), inst + " (b)");
      }

  // centralizer of b1 is <b1>
  auto box = group_box(k, cfg.z_max, 0, cfg.i_max, cfg.m_max);
  for (auto& b1 : ab_samples(k))
    for (auto& x : box) {
      bool commutes = G.comm(x, b1) == e;
      bool power = false;
      for (long m = -cfg.m_max; m <= cfg.m_max && !power; ++m) power = bs_pow(b1, m) == x;
      rep.check(commutes == power, fmt::format("centralizer {} {}", to_string(b1), to_string(x)), tf(power),
                tf(commutes));
    }

  for (auto& a1 : a1_samples(k))
    for (auto& b1 : ab_samples(k))
      for (int s = 0; s < 20; ++s) {
        auto g = rnd(), h = rnd();
        same(G.mul(lambda_auto(a1, b1, g), lambda_auto(a1, b1, h)), lambda_auto(a1, b1, G.mul(g, h)),
             fmt::format("lambda {} {} {} {}", to_string(a1), to_string(b1), to_string(g), to_string(h)));
      }
  return rep;
}

SuiteReport interp_suite(long k, const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "interp";
  rep.k = {k};
  rep.box = {{"z", cfg.z_max}, {"i", cfg.i_max}, {"m", cfg.m_max}};
  rep.merge(verify_delta(k, cfg.z_max, cfg.i_max, cfg.m_max));
  rep.merge(verify_translation(k));
  rep.merge(verify_composition(k));
  return rep;
}

namespace {

WitnessConfig witness_config(const SuiteConfig& cfg) {
  WitnessConfig w;
  w.n_range = cfg.n_range;
  w.z_search = cfg.z_search;
  w.i_search = cfg.i_search;
  w.mutate = cfg.mutate;
  return w;
}

}  // namespace

SuiteReport definable_suite(long k, const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "definable";
  rep.k = {k};
  auto w = witness_config(cfg);
  rep.box = {{"n_range", cfg.n_range}, {"z_search", cfg.z_search}, {"i_search", cfg.i_search}};
  for (auto name : {"alpha", "beta", "delta", "sq", "gamma", "tau", "pi"}) rep.merge(agreement_sweep(name, k, w));
  rep.merge(cor5_sweep(k, w));
  return rep;
}

SuiteReport biinterp_suite(long k, const SuiteConfig& cfg) {
  BiinterpConfig b;
  b.box = cfg.z_max;
  b.mutate = cfg.mutate;
  b.witness = witness_config(cfg);
  b.witness.mutate = false;
  return verify_biinterp(k, b);
}

SuiteReport nonstd_suite(long k, const SuiteConfig& cfg) {
  NonstdConfig n;
  n.samples = cfg.samples;
  n.seed = cfg.seed;
  n.corrupt = cfg.mutate;
  return verify_nonstd(k, n);
}

nlohmann::ordered_json run_check(const std::string& name, const SuiteConfig& cfg) {
  validate(cfg);
  auto one = [&](const std::string& s) {
    if (s == "facts") return facts_suite(cfg);
    SuiteReport rep;
    rep.suite = s;
    rep.k = cfg.k;
    for (long k : cfg.k) {
      SuiteReport r;
      if (s == "group") r = group_suite(k, cfg);
      else if (s == "interp") r = interp_suite(k, cfg);
      else if (s == "definable") r = definable_suite(k, cfg);
      else if (s == "biinterp") r = biinterp_suite(k, cfg);
      else if (s == "nonstd") r = nonstd_suite(k, cfg);
      else throw std::invalid_argument(fmt::format("unknown suite '{}'", s));
      rep.box = r.box;
      rep.merge(r);
    }
    return rep;
  };
  if (name != "all") return to_json(one(name));
  SuiteReport total;
  total.suite = "all";
  total.k = cfg.k;
  total.box = {{"z", cfg.z_max}, {"i", cfg.i_max}, {"m", cfg.m_max}, {"ring", cfg.ring_max}};
  auto parts = nlohmann::ordered_json::array();
  for (auto& s : suite_names()) {
    auto r = one(s);
    total.merge(r);
    parts.push_back(to_json(r));
  }
  auto j = to_json(total);
  j["suites"] = parts;
  return j;
}

}  // namespace bsk
