#include "bsk/nonstd.hpp"

#include <fmt/format.h>

#include <cctype>
#include <random>

namespace bsk {

OmegaInt operator*(OmegaInt x, OmegaInt y) {
  if (x.a != 0 && y.a != 0) throw std::domain_error("exponentiation undefined here");
  return {x.a * y.b + x.b * y.a, x.b * y.b};
}

std::string OmegaInt::str() const {
  if (a == 0) return std::to_string(b);
  std::string out = a == 1 ? "w" : a == -1 ? "-w" : fmt::format("{}*w", a);
  if (b > 0) out += fmt::format("+{}", b);
  if (b < 0) out += fmt::format("-{}", -b);
  return out;
}

SymExp::SymExp(const Int& c) { add_to(0, LaurentPoly(c)); }

SymExp SymExp::omega() { return from_exp(OmegaInt::omega()); }

SymExp SymExp::kpow_omega(long a) {
  SymExp s;
  s.add_to(a, LaurentPoly(Int(1)));
  return s;
}

SymExp SymExp::from_exp(OmegaInt e) {
  SymExp s;
  s.add_to(0, LaurentPoly::monomial(e.a, 1) + LaurentPoly(Int(e.b)));
  return s;
}

void SymExp::add_to(long a, const LaurentPoly& c) {
  auto sum = terms_[a] + c;
  if (sum.is_zero()) terms_.erase(a);
  else terms_[a] = sum;
}

int SymExp::sign() const {
  if (terms_.empty()) return 0;
  auto& c = terms_.rbegin()->second;
  return sgn(c.coeff(c.deg_max()));
}

SymExp SymExp::shift(long a) const {
  SymExp s;
  for (auto& [b, c] : terms_) s.terms_[a + b] = c;
  return s;
}

bool SymExp::divisible_by(const Int& d) const {
  for (auto& [a, c] : terms_)
    for (auto& [deg, v] : c.terms())
      if (!mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t())) return false;
  return true;
}

SymExp SymExp::divide_exact(const Int& d) const {
  SymExp s;
  for (auto& [a, c] : terms_) {
    LaurentPoly q;
    for (auto& [deg, v] : c.terms()) q = q + LaurentPoly::monomial(Int(v / d), deg);
    s.add_to(a, q);
  }
  return s;
}

std::optional<std::pair<long, Int>> SymExp::as_scaled_power() const {
  if (terms_.size() != 1) return std::nullopt;
  auto& [a, c] = *terms_.begin();
  if (c.deg_min() != 0 || c.deg_max() != 0) return std::nullopt;
  return std::pair{a, c.coeff(0)};
}

SymExp SymExp::operator-() const {
  SymExp s;
  for (auto& [a, c] : terms_) s.terms_[a] = -c;
  return s;
}

SymExp operator+(const SymExp& x, const SymExp& y) {
  SymExp s = x;
  for (auto& [a, c] : y.terms_) s.add_to(a, c);
  return s;
}

SymExp operator-(const SymExp& x, const SymExp& y) { return x + (-y); }

SymExp operator*(const SymExp& x, const SymExp& y) {
  SymExp s;
  for (auto& [a, c] : x.terms_)
    for (auto& [b, d] : y.terms_) s.add_to(a + b, c * d);
  return s;
}

namespace {

std::string dense_poly(const LaurentPoly& c) {
  std::string out;
  for (long d = c.deg_max(); d >= 0; --d) {
    if (!out.empty()) out += " + ";
    auto v = c.coeff(d).get_str();
    out += d >= 2 ? fmt::format("{}*w^{}", v, d) : d == 1 ? v + "*w" : v;
  }
  return out;
}

class SymParser {
 public:
  explicit SymParser(std::string_view s) : s_(s) {}

  SymExp parse() {
    skip();
    if (s_.substr(p_) == "0") return SymExp();
    SymExp out;
    for (;;) {
      expect("(");
      auto c = poly();
      expect(")");
      expect("*");
      expect("K");
      expect("^");
      expect("(");
      long a = integer();
      expect("*");
      expect("w");
      expect(")");
      out = out + SymExp(Int(1)).shift(a) * from_poly(c);
      skip();
      if (p_ == s_.size()) return out;
      expect("+");
    }
  }

 private:
  static SymExp from_poly(const LaurentPoly& c) {
    SymExp s;
    for (auto& [d, v] : c.terms()) {
      SymExp m(v);
      for (long i = 0; i < d; ++i) m = m * SymExp::omega();
      s = s + m;
    }
    return s;
  }

  LaurentPoly poly() {
    LaurentPoly c;
    for (;;) {
      Int v(integer());
      long d = 0;
      skip();
      if (peek('*')) {
        ++p_;
        expect("w");
        d = 1;
        skip();
        if (peek('^')) {
          ++p_;
          d = integer();
          if (d < 0) fail("negative power of w");
        }
      }
      c = c + LaurentPoly::monomial(v, d);
      skip();
      if (!peek('+')) return c;
      ++p_;
    }
  }

  long integer() {
    skip();
    size_t start = p_;
    if (peek('-')) ++p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (p_ == start || (p_ == start + 1 && s_[start] == '-')) fail("expected an integer");
    return std::stol(std::string(s_.substr(start, p_ - start)));
  }

  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool peek(char c) const { return p_ < s_.size() && s_[p_] == c; }
  void expect(std::string_view t) {
    skip();
    if (s_.substr(p_, t.size()) != t) fail(fmt::format("expected '{}'", t));
    p_ += t.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(fmt::format("bad symbolic value at position {}: {}", p_, what));
  }

  std::string_view s_;
  size_t p_ = 0;
};

}  // namespace

std::string SymExp::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto& [a, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += fmt::format("({})*K^({}*w)", dense_poly(c), a);
  }
  return out;
}

SymExp SymExp::parse(std::string_view text) { return SymParser(text).parse(); }

std::pair<Int, long> IntExpRing::kpow(long e) const {
  if (corrupt && e == 2) e = 1;
  return e >= 0 ? std::pair{k_pow(k, e), 0L} : std::pair{Int(1), -e};
}

std::pair<Int, long> IntExpRing::reduce(Int num, long den) const {
  if (num == 0) return {0, 0};
  while (den > 0 && mpz_divisible_ui_p(num.get_mpz_t(), k)) {
    num /= k;
    --den;
  }
  return {num, den};
}

std::optional<std::pair<Int, long>> IntExpRing::quotient(const Int& a, const Int& b) const {
  auto q = zk_divides(ZkRational(k, b), ZkRational(k, a));
  if (!q) return std::nullopt;
  return std::pair{q->num(), q->e()};
}

std::pair<SymExp, long> SymExpRing::kpow(OmegaInt e) const {
  if (corrupt && e.a != 0) e.b = 0;
  auto num = SymExp::kpow_omega(e.a);
  if (e.b >= 0) return {num * SymExp(k_pow(k, e.b)), 0};
  return {num, -e.b};
}

std::pair<SymExp, long> SymExpRing::reduce(SymExp num, OmegaInt den) const {
  if (num.is_zero()) return {num, 0};
  num = num.shift(-den.a);
  long d = den.b;
  if (d < 0) {
    num = num * SymExp(k_pow(k, -d));
    d = 0;
  }
  Int kk(k);
  while (d > 0 && num.divisible_by(kk)) {
    num = num.divide_exact(kk);
    --d;
  }
  return {num, d};
}

std::optional<std::pair<SymExp, long>> SymExpRing::quotient(const SymExp& a, const SymExp& b) const {
  if (a.is_zero()) return std::pair{SymExp(), 0L};
  auto sp = b.as_scaled_power();
  if (!sp) return std::nullopt;
  auto [shift, c] = *sp;
  // c = s * c' with s built from primes of k and gcd(c', k) = 1
  Int cp = abs(c), g;
  for (;;) {
    mpz_gcd_ui(g.get_mpz_t(), cp.get_mpz_t(), k);
    if (g == 1) break;
    cp /= g;
  }
  auto shifted = a.shift(-shift);
  if (!shifted.divisible_by(cp)) return std::nullopt;
  Int s = abs(c) / cp, pw = 1;
  long e = 0;
  while (!mpz_divisible_p(pw.get_mpz_t(), s.get_mpz_t())) {
    pw *= k;
    ++e;
  }
  return std::pair{(shifted * SymExp(pw)).divide_exact(c), e};
}

NsStdElem ns_from_core(const BsElem& g) {
  IntExpRing ring{bs_k(g)};
  return {Fraction<IntExpRing>(ring, g.y.num(), g.y.e()), g.m};
}

BsElem ns_to_core(const NsStdElem& g) {
  return bs_make(ZkRational(g.y.ring().k, g.y.num(), g.y.den()), g.m);
}

namespace {

std::string exp_str(long e) { return std::to_string(e); }
std::string exp_str(OmegaInt e) { return e.str(); }

const char* tf(bool b) { return b ? "true" : "false"; }

template <class R>
SuiteReport laws(const R& ring, const std::vector<typename R::Exp>& ex, const std::string& name) {
  using Exp = typename R::Exp;
  using F = Fraction<R>;
  SuiteReport rep;
  rep.suite = "nonstd/laws/" + name;
  rep.k = {ring.k};
  F one(ring, R::constant(1), Exp(0));
  rep.check(kpow_frac(ring, Exp(0)) == one, "k^0", "1", kpow_frac(ring, Exp(0)).str());
  rep.check(kpow_frac(ring, Exp(1)) == F(ring, R::constant(ring.k), Exp(0)), "k^1", std::to_string(ring.k),
            kpow_frac(ring, Exp(1)).str());

  // (k^i1)^n by repeated multiplication, n standard
  auto power = [&](const F& base, long n, const F& target) {
    F p = one;
    for (long j = 0; j < std::abs(n); ++j) p = p * base;
    return n >= 0 ? p == target : p * target == one;
  };
  for (auto& i1 : ex) {
    auto f1 = kpow_frac(ring, i1);
    rep.check(f1.sign() > 0, "k^" + exp_str(i1) + " > 0", "positive", f1.str());
    for (auto& i2 : ex) {
      auto f2 = kpow_frac(ring, i2);
      auto inst = fmt::format("i1={} i2={}", exp_str(i1), exp_str(i2));
      auto sum = kpow_frac(ring, i1 + i2);
      rep.check(f1 * f2 == sum, "product " + inst, sum.str(), (f1 * f2).str());
      rep.check(!(f1 == f2) || i1 == i2, "injective " + inst, "distinct", f1.str());
      auto s1 = R::standard(i1), s2 = R::standard(i2);
      if (!s1 && !s2) {
        bool threw = false;
        try {
          (void)(i1 * i2);
        } catch (const std::domain_error&) {
          threw = true;
        }
        if (threw) ++rep.skipped;
        else rep.check(false, "power " + inst, "exponentiation undefined here", "defined");
        continue;
      }
      auto target = kpow_frac(ring, i1 * i2);
      bool ok = s2 ? power(f1, *s2, target) : power(f2, *s1, target);
      rep.check(ok, "power " + inst, target.str(), "different");
    }
  }

  // fractions: canonical form, cross-multiplication, congruence and order
  std::vector<F> fr;
  for (size_t j = 0; j < ex.size(); ++j) {
    fr.push_back(kpow_frac(ring, ex[j]));
    fr.push_back(F(ring, R::from_exp(ex[j]), Exp(0)));
    fr.push_back(F(ring, R::from_exp(ex[j]), Exp(1)) - kpow_frac(ring, ex[(j + 1) % ex.size()]));
  }
  F zero(ring, R::constant(0), Exp(0));
  for (auto& f : fr)
    for (long j = 1; j <= 2; ++j) {
      F raw(ring, f.num() * R::constant(k_pow(ring.k, j)), Exp(f.den() + j));
      rep.check(raw == f && cross_equal(raw, f), "canonical " + f.str(), f.str(), raw.str());
    }
  for (auto& f : fr)
    for (auto& g : fr) {
      bool eq = f == g;
      rep.check(eq == cross_equal(f, g) && eq == (g == f), "equality " + f.str() + " | " + g.str(), tf(eq),
                tf(cross_equal(f, g)));
      int n = (f < g) + (g < f) + eq;
      rep.check(n == 1, "trichotomy " + f.str() + " | " + g.str(), "1", std::to_string(n));
      for (auto& h : fr) {
        auto inst = f.str() + " | " + g.str() + " | " + h.str();
        rep.check((f + g) * h == f * h + g * h, "distributive " + inst, "equal", "different");
        if (f < g) {
          rep.check(!(g < h) || f < h, "transitive " + inst, "true", "false");
          rep.check(f + h < g + h, "order and addition " + inst, "true", "false");
          if (zero < h) rep.check(f * h < g * h, "order and positive product " + inst, "true", "false");
        }
      }
    }
  return rep;
}

template <class R, class ElemSampler, class ExpSampler>
SuiteReport mr_axioms(const R& ring, int samples, unsigned long seed, const std::string& name, ElemSampler elem,
                      ExpSampler exps) {
  using Exp = typename R::Exp;
  SuiteReport rep;
  rep.suite = "nonstd/mr/" + name;
  rep.k = {ring.k};
  rep.box = {{"samples", samples}, {"seed", seed}};
  auto G = bs_nonstd(ring);
  std::mt19937_64 rng(seed);
  auto axiom = [&](const std::string& inst, auto lhs, auto rhs) {
    try {
      auto l = lhs();
      auto r = rhs();
      rep.check(l == r, inst, ns_str<R>(l), ns_str<R>(r));
    } catch (const std::domain_error&) {
      ++rep.skipped;
    }
  };
  for (int s = 0; s < samples; ++s) {
    auto g = elem(rng);
    auto h = elem(rng);
    Exp al = exps(rng), be = exps(rng);
    // every fourth pair commutes
    if (s % 4 == 0) {
      try {
        h = zexp_pow(G, g, Exp(std::uniform_int_distribution<long>(-3, 3)(rng)));
      } catch (const std::domain_error&) {
      }
    }
    auto pw = [&](const NsElem<R>& x, const Exp& n) { return zexp_pow(G, x, n); };
    auto inst = fmt::format("g={} h={} alpha={} beta={}", ns_str<R>(g), ns_str<R>(h), exp_str(al), exp_str(be));
    axiom("axiom 1 unit " + inst, [&] { return pw(g, Exp(1)); }, [&] { return g; });
    axiom("axiom 1 zero " + inst, [&] { return pw(g, Exp(0)); }, [&] { return G.identity(); });
    axiom("axiom 1 " + inst, [&] { return pw(g, al + be); }, [&] { return G.mul(pw(g, al), pw(g, be)); });
    axiom("axiom 2 " + inst, [&] { return pw(g, al * be); }, [&] { return pw(pw(g, al), be); });
    axiom("axiom 3 " + inst, [&] { return pw(G.conj(g, h), al); }, [&] { return G.conj(pw(g, al), h); });
    if (G.mul(g, h) == G.mul(h, g))
      axiom("axiom 4 " + inst, [&] { return pw(G.mul(g, h), al); }, [&] { return G.mul(pw(g, al), pw(h, al)); });
  }
  return rep;
}

}  // namespace

SuiteReport expring_laws_suite(const IntExpRing& ring, const std::vector<long>& exponents) {
  return laws(ring, exponents, "standard");
}

SuiteReport expring_laws_suite(const SymExpRing& ring, const std::vector<OmegaInt>& exponents) {
  return laws(ring, exponents, "symbolic");
}

SuiteReport standard_vs_core(long k, long z_max, long i_max, long m_max) {
  SuiteReport rep;
  rep.suite = "nonstd/standard";
  rep.k = {k};
  rep.box = {{"z", z_max}, {"i", i_max}, {"m", m_max}};
  auto box = group_box(k, z_max, 0, i_max, m_max);
  auto core = bs_group(k);
  auto G = bs_nonstd(IntExpRing{k});
  std::vector<NsStdElem> img;
  for (auto& g : box) {
    img.push_back(ns_from_core(g));
    rep.check(ns_to_core(img.back()) == g, "round trip " + to_string(g), to_string(g),
              to_string(ns_to_core(img.back())));
  }
  auto same = [&](const BsElem& want, const NsStdElem& got, const std::string& inst) {
    rep.check(ns_to_core(got) == want && ns_from_core(want) == got, inst, to_string(want), ns_str<IntExpRing>(got));
  };
  for (size_t a = 0; a < box.size(); ++a) {
    auto ga = to_string(box[a]);
    same(core.inv(box[a]), G.inv(img[a]), "inv " + ga);
    for (long n = -4; n <= 4; ++n) {
      same(bs_pow(box[a], n), zexp_pow(G, img[a], n), fmt::format("pow {} {}", ga, n));
      same(bs_pow(box[a], n), G.pow(img[a], n), fmt::format("pow by quotient {} {}", ga, n));
    }
    for (size_t b = 0; b < box.size(); ++b) {
      auto inst = ga + " " + to_string(box[b]);
      same(core.mul(box[a], box[b]), G.mul(img[a], img[b]), "mul " + inst);
      same(core.conj(box[a], box[b]), G.conj(img[a], img[b]), "conj " + inst);
      same(core.comm(box[a], box[b]), G.comm(img[a], img[b]), "comm " + inst);
      rep.check((box[a] == box[b]) == (img[a] == img[b]), "injective " + inst, tf(box[a] == box[b]),
                tf(img[a] == img[b]));
    }
  }
  return rep;
}

SuiteReport mr_axiom_suite(const IntExpRing& ring, int samples, unsigned long seed) {
  auto elem = [&](std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20), den(0, 3), m(-4, 4);
    long y = num(rng), d = den(rng);
    return NsElem<IntExpRing>{Fraction<IntExpRing>(ring, Int(y), d), m(rng)};
  };
  auto exps = [](std::mt19937_64& rng) { return std::uniform_int_distribution<long>(-6, 6)(rng); };
  return mr_axioms(ring, samples, seed, "standard", elem, exps);
}

SuiteReport mr_axiom_suite(const SymExpRing& ring, int samples, unsigned long seed) {
  auto elem = [&](std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coin(0, 1), c(-3, 3), den(0, 2), m(-2, 2), third(0, 2);
    SymExp num;
    for (long a = -1; a <= 1; ++a)
      if (coin(rng)) {
        long c0 = c(rng), c1 = c(rng);
        num = num + (SymExp(Int(c0)) + SymExp(Int(c1)) * SymExp::omega()).shift(a);
      }
    long d = den(rng);
    long b = m(rng);
    long t = third(rng);
    OmegaInt mm = t == 0 ? OmegaInt(coin(rng) ? 1 : -1, b) : OmegaInt(b);
    return NsElem<SymExpRing>{Fraction<SymExpRing>(ring, num, OmegaInt(d)), mm};
  };
  auto exps = [](std::mt19937_64& rng) {
    static const std::vector<OmegaInt> pool = {-2, -1, 0, 1, 2, OmegaInt(1, 0), OmegaInt(-1, 0), OmegaInt(1, 1)};
    return pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
  };
  return mr_axioms(ring, samples, seed, "symbolic", elem, exps);
}

SuiteReport verify_nonstd(long k, const NonstdConfig& cfg) {
  SuiteReport rep;
  rep.suite = "nonstd";
  rep.k = {k};
  rep.box = {{"z", 3}, {"i", 3}, {"m", 3}, {"samples", cfg.samples}, {"seed", cfg.seed}};
  IntExpRing zr{k, cfg.corrupt};
  SymExpRing sr{k, cfg.corrupt};
  std::vector<long> std_exps;
  for (long e = -5; e <= 5; ++e) std_exps.push_back(e);
  std::vector<OmegaInt> sym_exps = {0, 1, -1, OmegaInt(1, 0), OmegaInt(1, 1), OmegaInt(2, 0), OmegaInt(-1, 0),
                                    OmegaInt(1, -1), OmegaInt(-2, 3)};
  rep.merge(expring_laws_suite(zr, std_exps));
  rep.merge(expring_laws_suite(sr, sym_exps));
  rep.merge(standard_vs_core(k));
  rep.merge(mr_axiom_suite(zr, cfg.samples, cfg.seed));
  rep.merge(mr_axiom_suite(sr, cfg.samples, cfg.seed + 1));
  return rep;
}

}  // namespace bsk
