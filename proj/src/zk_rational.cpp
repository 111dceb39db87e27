#include "bsk/zk_rational.hpp"

#include <fmt/format.h>

#include <cctype>
#include <stdexcept>

namespace bsk {

RingContext::RingContext(long k_) : k(k_) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int k_pow(long k, unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(k), e);
  return r;
}

static void check_k(long k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
}

static void same_ring(const ZkRational& a, const ZkRational& b) {
  if (a.k() != b.k()) throw std::invalid_argument("mismatched ring contexts");
}

ZkRational::ZkRational(long k, Int num, long e) : k_(k), num_(std::move(num)), e_(e) {
  check_k(k);
  if (sgn(num_) == 0) {
    e_ = 0;
    return;
  }
  if (e_ < 0) {
    num_ *= k_pow(k_, static_cast<unsigned long>(-e_));
    e_ = 0;
  }
  // num*k^-(e-1) is an integer exactly when k | num.
  while (e_ > 0 && mpz_divisible_ui_p(num_.get_mpz_t(), static_cast<unsigned long>(k_))) {
    mpz_divexact_ui(num_.get_mpz_t(), num_.get_mpz_t(), static_cast<unsigned long>(k_));
    --e_;
  }
}

ZkRational ZkRational::normalize(long k, Int num, long e) { return ZkRational(k, std::move(num), e); }

ZkRational ZkRational::power_of_k(long k, long n) {
  if (n >= 0) return ZkRational(k, k_pow(k, static_cast<unsigned long>(n)), 0);
  return ZkRational(k, 1, -n);
}

mpq_class ZkRational::to_mpq() const {
  mpq_class q(num_, k_pow(k_, static_cast<unsigned long>(e_)));
  q.canonicalize();
  return q;
}

std::string ZkRational::str() const {
  if (e_ == 0) return num_.get_str();
  return fmt::format("{}*{}^-{}", num_.get_str(), k_, e_);
}

ZkRational ZkRational::parse(long k, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto star = s.find('*');
  Int num;
  if (num.set_str(s.substr(0, star), 10) != 0)
    throw std::invalid_argument(fmt::format("bad numerator in '{}'", text));
  if (star == std::string::npos) return ZkRational(k, num, 0);
  auto caret = s.find("^-", star);
  if (caret == std::string::npos) throw std::invalid_argument(fmt::format("expected '^-' in '{}'", text));
  long base = std::stol(s.substr(star + 1, caret - star - 1));
  if (base != k) throw std::invalid_argument(fmt::format("base {} does not match k={}", base, k));
  long e = std::stol(s.substr(caret + 2));
  return ZkRational(k, num, e);
}

ZkRational ZkRational::operator-() const {
  ZkRational r = *this;
  r.num_ = -r.num_;
  return r;
}

ZkRational operator+(const ZkRational& a, const ZkRational& b) {
  same_ring(a, b);
  long e = std::max(a.e_, b.e_);
  Int n = a.num_ * k_pow(a.k_, static_cast<unsigned long>(e - a.e_)) +
          b.num_ * k_pow(a.k_, static_cast<unsigned long>(e - b.e_));
  return ZkRational(a.k_, std::move(n), e);
}

ZkRational operator-(const ZkRational& a, const ZkRational& b) { return a + (-b); }

ZkRational operator*(const ZkRational& a, const ZkRational& b) {
  same_ring(a, b);
  return ZkRational(a.k_, a.num_ * b.num_, a.e_ + b.e_);
}

bool operator<(const ZkRational& a, const ZkRational& b) {
  same_ring(a, b);
  return (a - b).sign() < 0;
}

// Removes from |q| every prime that divides k; returns the cofactor.
static Int strip_k_primes(Int q, long k) {
  q = abs(q);
  Int kk = k, g;
  for (;;) {
    mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), kk.get_mpz_t());
    if (g == 1) return q;
    while (mpz_divisible_p(q.get_mpz_t(), g.get_mpz_t())) q /= g;
  }
}

std::optional<ZkRational> zk_divides(const ZkRational& d, const ZkRational& a) {
  same_ring(d, a);
  if (d.is_zero()) throw std::domain_error("division by zero");
  long k = d.k();
  // a/d = P/Q with P = a.num*k^d.e, Q = d.num*k^a.e
  Int p = a.num() * k_pow(k, static_cast<unsigned long>(d.e()));
  Int q = d.num() * k_pow(k, static_cast<unsigned long>(a.e()));
  Int g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 0) {
    p /= g;
    q /= g;
  }
  if (strip_k_primes(q, k) != 1) return std::nullopt;
  long j = 0;
  Int kj = 1;
  while (!mpz_divisible_p(kj.get_mpz_t(), q.get_mpz_t())) {
    kj *= k;
    ++j;
  }
  return ZkRational(k, p * (kj / q), j);
}

bool is_unit(const ZkRational& a) {
  if (a.is_zero()) return false;
  return strip_k_primes(a.num(), a.k()) == 1;
}

ZkRational zk_inverse(const ZkRational& a) {
  auto q = zk_divides(a, ZkRational(a.k(), 1));
  if (!q) throw std::domain_error("not a unit of Z[1/k]");
  return *q;
}

ZkRational k_pow_minus_one(long k, long n) { return ZkRational::power_of_k(k, n) - ZkRational(k, 1); }

}  // namespace bsk
