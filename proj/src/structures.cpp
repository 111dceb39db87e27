#include "bsk/structures.hpp"

#include "bsk/laurent_poly.hpp"

namespace bsk {

bool eval_ring_atom(const Int& x, const Int& y, const Int& z) {
  if (sgn(z) < 0) return false;
  if (sgn(z) == 0) return x == 1;
  if (y == 0) return x == 0;
  if (y == 1) return x == 1;
  if (y == -1) return x == (mpz_odd_p(z.get_mpz_t()) ? -1 : 1);
  // |y| >= 2: y^z has more than z bits
  if (z > static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2)) + 1) return false;
  return x == int_pow(y, z.get_ui());
}

RingStructure::RingStructure(long ring_max) {
  if (ring_max < 0) throw std::invalid_argument("ring box bound must be non-negative");
  box_.push_back(0);
  for (long v = 1; v <= ring_max; ++v) {
    box_.push_back(v);
    box_.push_back(-v);
  }
}

bool RingStructure::exp_atom(const Int& x, const Int& y, const Int& z) const { return eval_ring_atom(x, y, z); }

GroupStructure::GroupStructure(long k, long z_max, long i_max, long m_max)
    : k_(k), G_(bs_group(k)), box_(group_box(k, z_max, 0, i_max, m_max)) {}

GroupStructure::GroupStructure(long k, std::vector<BsElem> box) : k_(k), G_(bs_group(k)), box_(std::move(box)) {}

CyclicGroup::CyclicGroup(long order, long box_size) : n_(order) {
  if (order < 1 || box_size < 1 || box_size > order) throw std::invalid_argument("bad cyclic group box");
  for (long v = 0; v < box_size; ++v) box_.push_back(v);
}

namespace {

// A ring term as a polynomial in `var`; nullopt if another variable is unassigned.
std::optional<LaurentPoly> as_poly(const Term& t, const std::string& var, const Assignment<Int>& env) {
  switch (t->kind) {
    case TermKind::Var:
      if (t->name == var) return LaurentPoly::monomial(1, 1);
      if (auto v = lookup(env, t->name)) return LaurentPoly(*v);
      return std::nullopt;
    case TermKind::Zero:
      return LaurentPoly();
    case TermKind::One:
      return LaurentPoly(Int(1));
    case TermKind::Add:
    case TermKind::RMul: {
      auto a = as_poly(t->a, var, env);
      if (!a) return std::nullopt;
      auto b = as_poly(t->b, var, env);
      if (!b) return std::nullopt;
      return t->kind == TermKind::Add ? *a + *b : *a * *b;
    }
    default:
      return std::nullopt;
  }
}

using Pins = std::optional<std::set<Int>>;

// Values v with p(v) = target when p has degree <= 1.
Pins solve_linear(const LaurentPoly& p, const Int& target) {
  if (p.is_zero()) return target == 0 ? Pins{} : Pins{std::set<Int>{}};
  if (p.deg_min() < 0 || p.deg_max() > 1) return std::nullopt;
  Int a = p.coeff(1), b = p.coeff(0);
  if (a == 0) return b == target ? Pins{} : Pins{std::set<Int>{}};
  Int rhs = target - b;
  if (rhs % a != 0) return std::set<Int>{};
  return std::set<Int>{rhs / a};
}

bool mentions(const LaurentPoly& p) { return !p.is_zero() && p.deg_max() > 0; }

Pins pin_exp(const Formula& f, const std::string& var, const Assignment<Int>& env) {
  std::optional<LaurentPoly> ps[3];
  for (int i = 0; i < 3; ++i) {
    ps[i] = as_poly(f->terms[i], var, env);
    if (!ps[i]) return std::nullopt;
  }
  int slot = -1;
  for (int i = 0; i < 3; ++i)
    if (mentions(*ps[i])) {
      if (slot >= 0) return std::nullopt;
      slot = i;
    }
  if (slot < 0) return std::nullopt;
  auto constant = [&](int i) { return ps[i]->coeff(0); };
  if (slot == 0) {
    Int y = constant(1), z = constant(2);
    if (sgn(z) < 0) return std::set<Int>{};
    if (!z.fits_ulong_p()) return std::nullopt;
    return solve_linear(*ps[0], int_pow(y, z.get_ui()));
  }
  if (slot == 2) {
    Int x = constant(0), y = constant(1);
    if (y == 0 || y == 1 || y == -1) {
      if (!eval_ring_atom(x, y, 0) && !eval_ring_atom(x, y, 1) && !eval_ring_atom(x, y, 2)) return std::set<Int>{};
      return std::nullopt;
    }
    std::set<Int> out;
    Int pw = 1;
    for (long z = 0; abs(pw) <= abs(x); ++z, pw *= y) {
      if (pw == x) {
        auto s = solve_linear(*ps[2], z);
        if (!s) return std::nullopt;
        out.insert(s->begin(), s->end());
      }
    }
    return out;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::set<Int>> ring_pins(const Formula& f, const std::string& var, const Assignment<Int>& env,
                                       bool want) {
  switch (f->kind) {
    case FKind::True:
      return want ? Pins{} : Pins{std::set<Int>{}};
    case FKind::False:
      return want ? Pins{std::set<Int>{}} : Pins{};
    case FKind::Eq: {
      if (!want) return std::nullopt;
      auto l = as_poly(f->terms[0], var, env);
      if (!l) return std::nullopt;
      auto r = as_poly(f->terms[1], var, env);
      if (!r) return std::nullopt;
      auto d = *l - *r;
      if (!mentions(d)) return std::nullopt;
      return solve_linear(d, 0);
    }
    case FKind::Exp:
      return want ? pin_exp(f, var, env) : std::nullopt;
    case FKind::Not:
      return ring_pins(f->a, var, env, !want);
    case FKind::And:
    case FKind::Or:
    case FKind::Implies: {
      bool flip_left = f->kind == FKind::Implies;
      // conjunctive when every side must reach `want`
      bool conj = (f->kind == FKind::And) == want;
      if (f->kind == FKind::Implies) conj = !want;
      auto l = ring_pins(f->a, var, env, flip_left ? !want : want);
      if (conj) {
        if (l) return l;
        return ring_pins(f->b, var, env, want);
      }
      if (!l) return std::nullopt;
      auto r = ring_pins(f->b, var, env, want);
      if (!r) return std::nullopt;
      l->insert(r->begin(), r->end());
      return l;
    }
    case FKind::Exists:
    case FKind::Forall:
      // pins found without the bound variable hold for every value of it
      if (f->name == var || lookup(env, f->name)) return std::nullopt;
      return ring_pins(f->a, var, env, want);
    default:
      return std::nullopt;
  }
}

EvalHooks<Int> ring_pin_hooks() {
  EvalHooks<Int> h;
  h.candidates = [](const std::string& var, bool existential, const Formula& body,
                    const Assignment<Int>& env) -> std::optional<Candidates<Int>> {
    auto pins = ring_pins(body, var, env, existential);
    if (!pins) return std::nullopt;
    return Candidates<Int>{{pins->begin(), pins->end()}, true};
  };
  return h;
}

}  // namespace bsk
