#pragma once

#include "bsk/bs_core.hpp"
#include "bsk/laurent_poly.hpp"
#include "bsk/report.hpp"

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bsk {

// a*w + b, the exponent group of the symbolic ring.
struct OmegaInt {
  long a = 0;
  long b = 0;

  OmegaInt() = default;
  OmegaInt(long b_) : b(b_) {}  // NOLINT: integers are exponents
  OmegaInt(long a_, long b_) : a(a_), b(b_) {}
  static OmegaInt omega() { return {1, 0}; }

  bool standard() const { return a == 0; }
  int sign() const { return a != 0 ? (a > 0 ? 1 : -1) : (b > 0) - (b < 0); }
  std::string str() const;

  OmegaInt operator-() const { return {-a, -b}; }
  friend OmegaInt operator+(OmegaInt x, OmegaInt y) { return {x.a + y.a, x.b + y.b}; }
  friend OmegaInt operator-(OmegaInt x, OmegaInt y) { return {x.a - y.a, x.b - y.b}; }
  // throws std::domain_error when the w^2 coefficient is nonzero
  friend OmegaInt operator*(OmegaInt x, OmegaInt y);
  friend bool operator==(OmegaInt x, OmegaInt y) = default;
  friend std::strong_ordering operator<=>(OmegaInt x, OmegaInt y) {
    return x.a != y.a ? x.a <=> y.a : x.b <=> y.b;
  }
};

// Finite sums c_a(w) K^(a w) with integer polynomials c_a. Negative a are allowed.
// K^(a w) dominates every polynomial in w, and w dominates every integer.
class SymExp {
 public:
  SymExp() = default;
  explicit SymExp(const Int& c);
  static SymExp omega();
  static SymExp kpow_omega(long a);
  // a*w + b as a ring element
  static SymExp from_exp(OmegaInt e);
  static SymExp parse(std::string_view text);

  const std::map<long, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int sign() const;
  std::string str() const;

  // times K^(a w)
  SymExp shift(long a) const;
  bool divisible_by(const Int& d) const;
  SymExp divide_exact(const Int& d) const;
  // c K^(a w) with c a constant integer
  std::optional<std::pair<long, Int>> as_scaled_power() const;

  SymExp operator-() const;
  friend SymExp operator+(const SymExp& x, const SymExp& y);
  friend SymExp operator-(const SymExp& x, const SymExp& y);
  friend SymExp operator*(const SymExp& x, const SymExp& y);
  friend bool operator==(const SymExp& x, const SymExp& y) { return x.terms_ == y.terms_; }
  friend bool operator<(const SymExp& x, const SymExp& y) { return (y - x).sign() > 0; }

 private:
  void add_to(long a, const LaurentPoly& c);
  std::map<long, LaurentPoly> terms_;
};

// Ring instances. Each supplies the element and exponent types, the embedding of exponents,
// k^e as a fraction num * k^-den, fraction canonicalization and exact quotients.
struct IntExpRing {
  using Elem = Int;
  using Exp = long;
  long k;
  bool corrupt = false;  // break k-exponentiation on purpose

  static Elem constant(const Int& c) { return c; }
  static Elem from_exp(long e) { return e; }
  static int sign(const Int& x) { return sgn(x); }
  static std::optional<long> standard(long e) { return e; }
  static std::string str(const Int& x) { return x.get_str(); }
  std::pair<Int, long> kpow(long e) const;
  std::pair<Int, long> reduce(Int num, long den) const;
  std::optional<std::pair<Int, long>> quotient(const Int& a, const Int& b) const;
};

struct SymExpRing {
  using Elem = SymExp;
  using Exp = OmegaInt;
  long k;
  bool corrupt = false;

  static Elem constant(const Int& c) { return SymExp(c); }
  static Elem from_exp(OmegaInt e) { return SymExp::from_exp(e); }
  static int sign(const SymExp& x) { return x.sign(); }
  static std::optional<long> standard(OmegaInt e) { return e.standard() ? std::optional<long>(e.b) : std::nullopt; }
  static std::string str(const SymExp& x) { return x.str(); }
  std::pair<SymExp, long> kpow(OmegaInt e) const;
  std::pair<SymExp, long> reduce(SymExp num, OmegaInt den) const;
  std::optional<std::pair<SymExp, long>> quotient(const SymExp& a, const SymExp& b) const;
};

// num * k^-den in the ring of fractions with denominators k^E. Canonical denominators are
// always standard integers: the symbolic ring absorbs K^(a w) into the numerator.
template <class R>
class Fraction {
 public:
  using Elem = typename R::Elem;
  using Exp = typename R::Exp;

  Fraction(const R& ring, Elem num, Exp den) : ring_(ring) {
    if (den < Exp(0)) throw std::invalid_argument("denominator exponent must be non-negative");
    std::tie(num_, den_) = ring.reduce(std::move(num), den);
  }

  const R& ring() const { return ring_; }
  const Elem& num() const { return num_; }
  long den() const { return den_; }
  int sign() const { return R::sign(num_); }
  std::string str() const { return den_ == 0 ? R::str(num_) : "(" + R::str(num_) + ")*k^-" + std::to_string(den_); }

  Fraction operator-() const { return Fraction(ring_, -num_, Exp(den_)); }
  friend Fraction operator+(const Fraction& x, const Fraction& y) {
    long d = std::max(x.den_, y.den_);
    return Fraction(x.ring_, x.num_ * R::constant(k_pow(x.ring_.k, d - x.den_)) +
                                 y.num_ * R::constant(k_pow(x.ring_.k, d - y.den_)),
                    Exp(d));
  }
  friend Fraction operator-(const Fraction& x, const Fraction& y) { return x + (-y); }
  friend Fraction operator*(const Fraction& x, const Fraction& y) {
    return Fraction(x.ring_, x.num_ * y.num_, Exp(x.den_ + y.den_));
  }
  friend bool operator==(const Fraction& x, const Fraction& y) { return x.num_ == y.num_ && x.den_ == y.den_; }
  friend bool operator<(const Fraction& x, const Fraction& y) { return (y - x).sign() > 0; }

 private:
  R ring_;
  Elem num_;
  long den_ = 0;
};

// num1 k^den2 = num2 k^den1
template <class R>
bool cross_equal(const Fraction<R>& x, const Fraction<R>& y) {
  auto& r = x.ring();
  return x.num() * R::constant(k_pow(r.k, y.den())) == y.num() * R::constant(k_pow(r.k, x.den()));
}

template <class R>
Fraction<R> frac_make(const R& ring, typename R::Elem num, typename R::Exp den) {
  return Fraction<R>(ring, std::move(num), den);
}

// k^e for any e in E
template <class R>
Fraction<R> kpow_frac(const R& ring, const typename R::Exp& e) {
  auto [num, den] = ring.kpow(e);
  return Fraction<R>(ring, std::move(num), typename R::Exp(den));
}

// Exact x / y, checked by multiplying back; nullopt when the quotient is not in the ring.
template <class R>
std::optional<Fraction<R>> frac_div(const Fraction<R>& x, const Fraction<R>& y) {
  if (y.sign() == 0) throw std::domain_error("division by zero");
  auto q = x.ring().quotient(x.num(), y.num());
  if (!q) return std::nullopt;
  // x / y = (num_x / num_y) k^(den_y - den_x)
  Fraction<R> out = Fraction<R>(x.ring(), q->first, typename R::Exp(q->second)) *
                    kpow_frac(x.ring(), typename R::Exp(y.den() - x.den()));
  if (!(out * y == x)) return std::nullopt;
  return out;
}

template <class R>
struct FracTraits {
  using Coeff = Fraction<R>;
  using Exp = typename R::Exp;
  R ring;

  Coeff zero() const { return Coeff(ring, R::constant(0), Exp(0)); }
  Coeff one() const { return Coeff(ring, R::constant(1), Exp(0)); }
  Exp exp_zero() const { return Exp(0); }
  Coeff kpow(const Exp& e) const { return kpow_frac(ring, e); }
  Coeff from_exp(const Exp& e) const { return Coeff(ring, R::from_exp(e), Exp(0)); }
  Coeff divide(const Coeff& a, const Coeff& b) const {
    auto q = frac_div(a, b);
    if (!q) throw std::domain_error("power undefined at this exponent");
    return *q;
  }
};

template <class R>
using NsGroup = BsGroup<FracTraits<R>>;
template <class R>
using NsElem = BsElement<FracTraits<R>>;

template <class R>
NsGroup<R> bs_nonstd(const R& ring) {
  return NsGroup<R>(FracTraits<R>{ring});
}

// (z, i, m) -> (z k^i, m)
template <class R>
NsElem<R> ns_from_coords(const R& ring, const typename R::Elem& z, const typename R::Exp& i,
                         const typename R::Exp& m) {
  return {Fraction<R>(ring, z, typename R::Exp(0)) * kpow_frac(ring, i), m};
}

// Powers with exponents in E. Standard exponents use the geometric sum, so no quotient is needed;
// non-standard ones divide exactly and throw std::domain_error when the power is undefined.
template <class R>
NsElem<R> zexp_pow(const NsGroup<R>& G, const NsElem<R>& g, const typename R::Exp& n) {
  using Exp = typename R::Exp;
  auto& tr = G.traits();
  if (g.m == Exp(0)) return {tr.from_exp(n) * g.y, Exp(0)};
  if (auto s = R::standard(n)) {
    auto x = tr.kpow(-g.m);
    auto sum = tr.zero(), term = tr.one();
    for (long j = 0; j < std::abs(*s); ++j) {
      sum = sum + term;
      term = term * x;
    }
    // (x^n - 1)/(x - 1) = -x^n (x^-n - 1)/(x - 1) for n < 0
    if (*s < 0) sum = -(tr.kpow(-(g.m * n)) * sum);
    return {g.y * sum, g.m * n};
  }
  Exp mn;
  try {
    mn = g.m * n;
  } catch (const std::domain_error&) {
    throw std::domain_error("power undefined at this exponent");
  }
  auto ratio = tr.divide(tr.kpow(-mn) - tr.one(), tr.kpow(-g.m) - tr.one());
  return {g.y * ratio, mn};
}

template <class R>
std::string ns_str(const NsElem<R>& g) {
  if constexpr (std::is_same_v<typename R::Exp, long>) return "(" + g.y.str() + ", " + std::to_string(g.m) + ")";
  else return "(" + g.y.str() + ", " + g.m.str() + ")";
}

using NsStdElem = NsElem<IntExpRing>;
NsStdElem ns_from_core(const BsElem& g);
BsElem ns_to_core(const NsStdElem& g);

SuiteReport expring_laws_suite(const IntExpRing& ring, const std::vector<long>& exponents);
SuiteReport expring_laws_suite(const SymExpRing& ring, const std::vector<OmegaInt>& exponents);
// The standard instantiation against bs-core on the box |z| <= 3, 0 <= i <= 3, |m| <= 3.
SuiteReport standard_vs_core(long k, long z_max = 3, long i_max = 3, long m_max = 3);
SuiteReport mr_axiom_suite(const IntExpRing& ring, int samples, unsigned long seed);
SuiteReport mr_axiom_suite(const SymExpRing& ring, int samples, unsigned long seed);

struct NonstdConfig {
  int samples = 200;
  unsigned long seed = 1;
  bool corrupt = false;
};
SuiteReport verify_nonstd(long k, const NonstdConfig& cfg = {});

}  // namespace bsk
