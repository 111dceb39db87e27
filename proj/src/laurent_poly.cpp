#include "bsk/laurent_poly.hpp"

#include <fmt/format.h>

#include <cctype>
#include <stdexcept>

namespace bsk {

void LaurentPoly::set(long d, const Int& c) {
  if (sgn(c) == 0)
    coeffs_.erase(d);
  else
    coeffs_[d] = c;
}

void LaurentPoly::add_to(long d, const Int& c) {
  auto it = coeffs_.find(d);
  if (it == coeffs_.end()) {
    if (sgn(c) != 0) coeffs_.emplace(d, c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) coeffs_.erase(it);
}

LaurentPoly LaurentPoly::monomial(const Int& c, long d) {
  LaurentPoly p;
  p.set(d, c);
  return p;
}

LaurentPoly LaurentPoly::x_pow_minus_one(long n) { return monomial(1, n) - LaurentPoly(Int(1)); }

Int LaurentPoly::coeff(long d) const {
  auto it = coeffs_.find(d);
  return it == coeffs_.end() ? Int(0) : it->second;
}

LaurentPoly LaurentPoly::substitute_power(long n) const {
  LaurentPoly r;
  for (auto& [d, c] : coeffs_) r.add_to(d * n, c);
  return r;
}

LaurentPoly LaurentPoly::shift(long s) const {
  LaurentPoly r;
  for (auto& [d, c] : coeffs_) r.coeffs_.emplace(d + s, c);
  return r;
}

Int LaurentPoly::value_at_one() const {
  Int s = 0;
  for (auto& [d, c] : coeffs_) s += c;
  return s;
}

std::string LaurentPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += fmt::format("{}*x^{}", it->second.get_str(), it->first);
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  LaurentPoly p;
  if (s == "0") return p;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find('+', pos);
    // a '+' right after '^' or at the start belongs to a sign, not a separator
    while (next != std::string::npos && next > 0 && s[next - 1] == '^') next = s.find('+', next + 1);
    std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    auto star = term.find("*x^");
    if (star == std::string::npos) throw std::invalid_argument(fmt::format("bad term '{}'", term));
    Int c;
    if (c.set_str(term.substr(0, star), 10) != 0) throw std::invalid_argument(fmt::format("bad coefficient '{}'", term));
    long d = std::stol(term.substr(star + 3));
    p.add_to(d, c);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [d, c] : r.coeffs_) c = -c;
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (auto& [d, c] : b.coeffs_) r.add_to(d, c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (auto& [da, ca] : a.coeffs_)
    for (auto& [db, cb] : b.coeffs_) r.add_to(da + db, ca * cb);
  return r;
}

std::optional<LaurentPoly> laurent_divides(const LaurentPoly& d, const LaurentPoly& f) {
  if (d.is_zero()) throw std::domain_error("division by zero");
  if (f.is_zero()) return LaurentPoly();
  // Shift both into Z[x] with nonzero constant term, then divide from the top.
  long sd = d.deg_min(), sf = f.deg_min();
  LaurentPoly dd = d.shift(-sd), rem = f.shift(-sf), q;
  const long top = dd.deg_max();
  const Int lead = dd.coeff(top);
  while (!rem.is_zero() && rem.deg_max() >= top) {
    long deg = rem.deg_max();
    Int c = rem.coeff(deg);
    if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    Int qc;
    mpz_divexact(qc.get_mpz_t(), c.get_mpz_t(), lead.get_mpz_t());
    auto step = LaurentPoly::monomial(qc, deg - top);
    q = q + step;
    rem = rem - step * dd;
  }
  if (!rem.is_zero()) return std::nullopt;
  return q.shift(sf - sd);
}

}  // namespace bsk
