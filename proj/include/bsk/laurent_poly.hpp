#pragma once

#include "bsk/zk_rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace bsk {

// An element of Z[x, x^-1]; zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Int& c) { set(0, c); }

  static LaurentPoly monomial(const Int& c, long d);
  // x^n - 1
  static LaurentPoly x_pow_minus_one(long n);
  static LaurentPoly parse(std::string_view text);

  bool is_zero() const { return coeffs_.empty(); }
  long deg_min() const { return coeffs_.begin()->first; }
  long deg_max() const { return coeffs_.rbegin()->first; }
  Int coeff(long d) const;
  const std::map<long, Int>& terms() const { return coeffs_; }

  // p(x) -> p(x^n)
  LaurentPoly substitute_power(long n) const;
  LaurentPoly shift(long d) const;
  Int value_at_one() const;
  std::string str() const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void set(long d, const Int& c);
  void add_to(long d, const Int& c);
  std::map<long, Int> coeffs_;
};

inline LaurentPoly laurent_add(const LaurentPoly& f, const LaurentPoly& g) { return f + g; }
inline LaurentPoly laurent_mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }

// Exact quotient q with d*q = f in Z[x, x^-1], if one exists. Throws on d = 0.
std::optional<LaurentPoly> laurent_divides(const LaurentPoly& d, const LaurentPoly& f);

}  // namespace bsk
