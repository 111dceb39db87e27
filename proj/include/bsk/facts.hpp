#pragma once

#include "bsk/laurent_poly.hpp"
#include "bsk/zk_rational.hpp"

#include <optional>

namespace bsk {

// f_l(y) = 1 + y + ... + y^(l-1) for l > 0
LaurentPoly geometric_sum(long l);
// h_l with f_l(y) = l + (y-1) h_l(y), l > 0
LaurentPoly geometric_remainder(long l);
// g_l(y) = -y^-1 - ... - y^l for l < 0
LaurentPoly negative_geometric_sum(long l);

// g with x^(nl) - 1 = (x^n - 1)(l + (x^n - 1) g); re-verified before returning.
LaurentPoly cor1_witness(long n, long l);

struct ResidueCheck {
  ZkRational residue;   // (k^(nz) - 1) / (k^n - 1)
  ZkRational quotient;  // (residue - z) / (k^n - 1)
};

// Throws on n = 0; throws std::logic_error if the congruence fails.
ResidueCheck cor2_residue(long k, long z, long n);

// Least n in [1, bound] with (k^n - 1) not dividing y.
std::optional<long> fact1_witness(const ZkRational& y, long bound);

// s with l(k^(nz) - 1) = t(k^n - 1) + s(k^n - 1)^2, if s lies in Z[1/k].
std::optional<ZkRational> sn_witness(const ZkRational& l, long z, const ZkRational& t, long n);

}  // namespace bsk
