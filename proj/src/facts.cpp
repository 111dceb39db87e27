#include "bsk/facts.hpp"

#include <fmt/format.h>

#include <stdexcept>

namespace bsk {

LaurentPoly geometric_sum(long l) {
  LaurentPoly f;
  for (long j = 0; j < l; ++j) f = f + LaurentPoly::monomial(1, j);
  return f;
}

LaurentPoly geometric_remainder(long l) {
  // (f_l(y) - l) / (y - 1) = sum over j < l of (1 + ... + y^(j-1))
  LaurentPoly h;
  for (long i = 0; i + 2 <= l; ++i) h = h + LaurentPoly::monomial(l - 1 - i, i);
  return h;
}

LaurentPoly negative_geometric_sum(long l) {
  LaurentPoly g;
  for (long j = l; j <= -1; ++j) g = g - LaurentPoly::monomial(1, j);
  return g;
}

LaurentPoly cor1_witness(long n, long l) {
  if (n == 0 || l == 0) return LaurentPoly();
  LaurentPoly g;
  if (l > 0) {
    g = geometric_remainder(l).substitute_power(n);
  } else {
    auto xn1 = LaurentPoly::x_pow_minus_one(n);
    auto h = geometric_remainder(-l).substitute_power(n);
    auto gl = negative_geometric_sum(l).substitute_power(n);
    g = (LaurentPoly(Int(l)) - xn1 * h) * gl - h;
  }
  auto xn1 = LaurentPoly::x_pow_minus_one(n);
  if (xn1 * (LaurentPoly(Int(l)) + xn1 * g) != LaurentPoly::x_pow_minus_one(n * l))
    throw std::logic_error(fmt::format("witness identity failed for n={}, l={}", n, l));
  return g;
}

ResidueCheck cor2_residue(long k, long z, long n) {
  if (n == 0) throw std::invalid_argument("n must be nonzero");
  auto d = k_pow_minus_one(k, n);
  auto r = zk_divides(d, k_pow_minus_one(k, n * z));
  if (!r) throw std::logic_error(fmt::format("k^n-1 does not divide k^(nz)-1 for n={}, z={}", n, z));
  auto q = zk_divides(d, *r - ZkRational(k, z));
  if (!q) throw std::logic_error(fmt::format("residue congruence fails for n={}, z={}", n, z));
  return {*r, *q};
}

std::optional<long> fact1_witness(const ZkRational& y, long bound) {
  if (bound < 1) throw std::invalid_argument("bound must be positive");
  if (y.is_zero()) return std::nullopt;
  for (long n = 1; n <= bound; ++n)
    if (!zk_divides(k_pow_minus_one(y.k(), n), y)) return n;
  return std::nullopt;
}

std::optional<ZkRational> sn_witness(const ZkRational& l, long z, const ZkRational& t, long n) {
  if (n == 0) throw std::invalid_argument("n must be nonzero");
  long k = l.k();
  auto d = k_pow_minus_one(k, n);
  auto lhs = l * k_pow_minus_one(k, n * z) - t * d;
  return zk_divides(d * d, lhs);
}

}  // namespace bsk
