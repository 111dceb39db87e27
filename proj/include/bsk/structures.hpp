#pragma once

#include "bsk/bs_core.hpp"
#include "bsk/eval.hpp"

#include <optional>
#include <set>
#include <vector>

namespace bsk {

// The ring Z with the exp atom; quantifiers range over [-ring_max, ring_max].
class RingStructure {
 public:
  using Value = Int;
  explicit RingStructure(long ring_max = 20);

  const std::vector<Int>& box() const { return box_; }
  bool box_is_domain() const { return false; }
  bool equal(const Int& a, const Int& b) const { return a == b; }

  Int zero() const { return 0; }
  Int one() const { return 1; }
  Int add(const Int& a, const Int& b) const { return a + b; }
  Int rmul(const Int& a, const Int& b) const { return a * b; }
  bool exp_atom(const Int& x, const Int& y, const Int& z) const;

 private:
  std::vector<Int> box_;
};

// x = y^z with z >= 0 (y^0 = 1).
bool eval_ring_atom(const Int& x, const Int& y, const Int& z);

// BS(1,k) with quantifiers over a coordinate box.
class GroupStructure {
 public:
  using Value = BsElem;
  GroupStructure(long k, long z_max = 3, long i_max = 3, long m_max = 3);
  GroupStructure(long k, std::vector<BsElem> box);

  long k() const { return k_; }
  const std::vector<BsElem>& box() const { return box_; }
  bool box_is_domain() const { return false; }
  bool equal(const BsElem& a, const BsElem& b) const { return a == b; }

  BsElem unit() const { return bs_identity(k_); }
  BsElem mul(const BsElem& a, const BsElem& b) const { return G_.mul(a, b); }
  BsElem inv(const BsElem& a) const { return G_.inv(a); }

 private:
  long k_;
  BsStd G_;
  std::vector<BsElem> box_;
};

// Z/n as a finite group where the box is the whole domain (used to test the evaluator).
class CyclicGroup {
 public:
  using Value = long;
  CyclicGroup(long order, long box_size);

  const std::vector<long>& box() const { return box_; }
  bool box_is_domain() const { return static_cast<long>(box_.size()) == n_; }
  bool equal(long a, long b) const { return a == b; }
  long unit() const { return 0; }
  long mul(long a, long b) const { return (a + b) % n_; }
  long inv(long a) const { return (n_ - a) % n_; }
  long order() const { return n_; }

 private:
  long n_;
  std::vector<long> box_;
};

// All values of `var` that could make `f` true (want = true) or false (want = false),
// given the assignment; nullopt when no finite set is forced.
std::optional<std::set<Int>> ring_pins(const Formula& f, const std::string& var, const Assignment<Int>& env,
                                       bool want);

// Candidate hook built on ring_pins: exhaustive whenever the body forces the quantified variable.
EvalHooks<Int> ring_pin_hooks();

}  // namespace bsk
