#pragma once

#include <stdexcept>

namespace bsk {

// A pair (y, m) in R[1/k^E] x| E. The traits type supplies the coefficient ring
// (Coeff), the exponent group (Exp), and:
//   zero(), one(), exp_zero(), kpow(Exp) -> Coeff, from_exp(Exp) -> Coeff,
//   divide(Coeff, Coeff) -> Coeff (exact; throws std::domain_error otherwise).
template <class Traits>
struct BsElement {
  typename Traits::Coeff y;
  typename Traits::Exp m;

  friend bool operator==(const BsElement& a, const BsElement& b) { return a.y == b.y && a.m == b.m; }
};

template <class Traits>
class BsGroup {
 public:
  using Coeff = typename Traits::Coeff;
  using Exp = typename Traits::Exp;
  using Element = BsElement<Traits>;

  explicit BsGroup(Traits traits) : tr_(std::move(traits)) {}
  const Traits& traits() const { return tr_; }

  Element identity() const { return {tr_.zero(), tr_.exp_zero()}; }
  Element make(Coeff y, Exp m) const { return {std::move(y), std::move(m)}; }

  // (y1 + y2 k^-m1, m1 + m2)
  Element mul(const Element& g1, const Element& g2) const {
    return {g1.y + g2.y * tr_.kpow(-g1.m), g1.m + g2.m};
  }

  // (-y k^m, -m)
  Element inv(const Element& g) const { return {-(g.y * tr_.kpow(g.m)), -g.m}; }

  // g2^-1 g1 g2 = ((y1 - y2) k^m2 + y2 k^(m2 - m1), m1)
  Element conj(const Element& g1, const Element& g2) const {
    return {(g1.y - g2.y) * tr_.kpow(g2.m) + g2.y * tr_.kpow(g2.m - g1.m), g1.m};
  }

  // g1^-1 g2^-1 g1 g2 = (-y1 k^m1 + y2 k^m2 + (y1 - y2) k^(m1 + m2), 0)
  Element comm(const Element& g1, const Element& g2) const {
    return {-(g1.y * tr_.kpow(g1.m)) + g2.y * tr_.kpow(g2.m) + (g1.y - g2.y) * tr_.kpow(g1.m + g2.m),
            tr_.exp_zero()};
  }

  // (y (k^-mn - 1)/(k^-m - 1), mn) for m != 0, (n y, 0) for m = 0
  Element pow(const Element& g, const Exp& n) const {
    if (g.m == tr_.exp_zero()) return {tr_.from_exp(n) * g.y, tr_.exp_zero()};
    Exp mn = g.m * n;
    Coeff ratio = tr_.divide(tr_.kpow(-mn) - tr_.one(), tr_.kpow(-g.m) - tr_.one());
    return {g.y * ratio, mn};
  }

  // Repeated multiplication, for integer exponents.
  Element pow_iter(const Element& g, long n) const {
    Element base = n < 0 ? inv(g) : g;
    Element r = identity();
    for (long i = 0; i < (n < 0 ? -n : n); ++i) r = mul(r, base);
    return r;
  }

  Element conj_longhand(const Element& g1, const Element& g2) const { return mul(mul(inv(g2), g1), g2); }
  Element comm_longhand(const Element& g1, const Element& g2) const {
    return mul(mul(mul(inv(g1), inv(g2)), g1), g2);
  }

 private:
  Traits tr_;
};

}  // namespace bsk
