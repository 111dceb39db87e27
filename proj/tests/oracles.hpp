#pragma once

// Independent reference arithmetic for the tests: plain GMP rationals and integers.

#include "bsk/zk_rational.hpp"

#include <gmpxx.h>

#include <array>
#include <map>

namespace oracle {

inline mpq_class kpow(long k, long n) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), k, n < 0 ? -n : n);
  return n < 0 ? mpq_class(1, p) : mpq_class(p);
}

// q lies in Z[1/k] iff its reduced denominator divides a power of k
inline bool in_zk(const mpq_class& q, long k) {
  mpz_class den = q.get_den();
  for (;;) {
    mpz_class g = gcd(den, mpz_class(k));
    if (g == 1) break;
    den /= g;
  }
  return den == 1;
}

inline mpq_class value(const bsk::ZkRational& a) { return mpq_class(a.num()) / kpow(a.k(), a.e()); }

// BS(1,k) as upper triangular matrices [[k^-m, y], [0, 1]]
struct Mat {
  mpq_class a, b;  // top row; bottom row is (0, 1)
  friend Mat operator*(const Mat& x, const Mat& y) { return {x.a * y.a, x.a * y.b + x.b}; }
  Mat inv() const { return {1 / a, -b / a}; }
  friend bool operator==(const Mat&, const Mat&) = default;
};

// sum of c x^d as a dense map, for the Laurent polynomial tests
using Poly = std::map<long, mpz_class>;

inline Poly mul(const Poly& f, const Poly& g) {
  Poly out;
  for (auto& [d1, c1] : f)
    for (auto& [d2, c2] : g) out[d1 + d2] += c1 * c2;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline Poly x_pow_minus_one(long n) {
  Poly p;
  if (n == 0) return p;
  p[n] += 1;
  p[0] -= 1;
  return p;
}

}  // namespace oracle
