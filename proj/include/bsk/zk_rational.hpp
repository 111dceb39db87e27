#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace bsk {

using Int = mpz_class;

// Carries the fixed k of BS(1,k); all values combined in one expression share it.
struct RingContext {
  long k;
  explicit RingContext(long k_);
};

Int int_pow(const Int& base, unsigned long e);
Int k_pow(long k, unsigned long e);

// An element num * k^-e of Z[1/k], with e >= 0 minimal.
class ZkRational {
 public:
  explicit ZkRational(long k, Int num = 0, long e = 0);

  static ZkRational normalize(long k, Int num, long e);
  static ZkRational integer(long k, const Int& v) { return ZkRational(k, v, 0); }
  // k^n for any integer n.
  static ZkRational power_of_k(long k, long n);
  static ZkRational parse(long k, std::string_view text);

  long k() const { return k_; }
  const Int& num() const { return num_; }
  long e() const { return e_; }

  bool is_zero() const { return sgn(num_) == 0; }
  bool is_integer() const { return e_ == 0; }
  int sign() const { return sgn(num_); }
  mpq_class to_mpq() const;
  std::string str() const;

  ZkRational operator-() const;
  friend ZkRational operator+(const ZkRational& a, const ZkRational& b);
  friend ZkRational operator-(const ZkRational& a, const ZkRational& b);
  friend ZkRational operator*(const ZkRational& a, const ZkRational& b);
  friend bool operator==(const ZkRational& a, const ZkRational& b) {
    return a.k_ == b.k_ && a.e_ == b.e_ && a.num_ == b.num_;
  }
  friend bool operator<(const ZkRational& a, const ZkRational& b);

 private:
  long k_;
  Int num_;
  long e_;
};

inline ZkRational zk_add(const ZkRational& a, const ZkRational& b) { return a + b; }
inline ZkRational zk_mul(const ZkRational& a, const ZkRational& b) { return a * b; }
inline ZkRational zk_neg(const ZkRational& a) { return -a; }

// Quotient q with d*q = a inside Z[1/k], if it exists. Throws on d = 0.
std::optional<ZkRational> zk_divides(const ZkRational& d, const ZkRational& a);

// a != 0 and every prime factor of |num| divides k.
bool is_unit(const ZkRational& a);

// Multiplicative inverse of a unit; throws if a is not a unit.
ZkRational zk_inverse(const ZkRational& a);

// k^n - 1 as an element of Z[1/k].
ZkRational k_pow_minus_one(long k, long n);

}  // namespace bsk
