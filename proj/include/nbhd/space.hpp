#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nbhd/pstack.hpp"

namespace nbhd {

/// A neighborhood structure: one p-stack per point of a fixed carrier.
/// Construction checks only that the stacks live on the carrier; whether each
/// stack is a neighborhood stack at its point is a separate question answered
/// by validate_structure, so invalid candidates can be built and examined.
class NbdStructure {
 public:
  NbdStructure(Carrier carrier, std::vector<PStack> nu)
      : carrier_(std::move(carrier)), nu_(std::move(nu)) {
    if (static_cast<int>(nu_.size()) != carrier_.size())
      throw std::domain_error("structure needs exactly one stack per point");
    for (const PStack& s : nu_)
      if (s.carrier() != carrier_)
        throw std::domain_error("stack carrier differs from structure carrier");
  }

  const Carrier& carrier() const { return carrier_; }
  const PStack& at(int x) const { return nu_.at(static_cast<std::size_t>(x)); }
  const std::vector<PStack>& stacks() const { return nu_; }

  friend bool operator==(const NbdStructure& a, const NbdStructure& b) {
    return a.carrier_ == b.carrier_ && a.nu_ == b.nu_;
  }
  friend bool operator!=(const NbdStructure& a, const NbdStructure& b) { return !(a == b); }

 private:
  Carrier carrier_;
  std::vector<PStack> nu_;
};

/// Finest structure: the principal stack at every point.
inline NbdStructure discrete(const Carrier& c) {
  std::vector<PStack> nu;
  for (int x = 0; x < c.size(); ++x) nu.push_back(principal_stack(c, x));
  return NbdStructure(c, std::move(nu));
}

/// Coarsest structure: only the whole carrier at every point.
inline NbdStructure indiscrete(const Carrier& c) {
  std::vector<PStack> nu;
  for (int x = 0; x < c.size(); ++x) nu.push_back(whole_carrier_stack(c));
  return NbdStructure(c, std::move(nu));
}

struct ValidationResult {
  bool ok = true;
  int point = -1;        // first failing point, when !ok
  Mask offending = 0;    // a minimal set missing the point, when one exists
  bool empty_family = false;
  std::string message;
};

/// Checks the neighborhood axioms pointwise: nonempty stack, every member
/// containing its point. Names the first failure instead of throwing.
inline ValidationResult validate_structure(const NbdStructure& nu) {
  for (int x = 0; x < nu.carrier().size(); ++x) {
    const PStack& s = nu.at(x);
    if (s.family_empty())
      return {false, x, 0, true,
              "empty stack at point " + nu.carrier().label(x)};
    for (Mask m : s.minimal_sets())
      if (!(m & point_bit(x)))
        return {false, x, m, false,
                "member " + set_text(nu.carrier(), m) + " does not contain point " +
                    nu.carrier().label(x)};
  }
  return {};
}

/// The refinement order: nu ≤ nu2 iff every stack of nu2 refines the
/// corresponding stack of nu (pointwise family inclusion; equivalently the
/// identity map is continuous from nu2 to nu).
inline bool structure_leq(const NbdStructure& nu, const NbdStructure& nu2) {
  if (nu.carrier() != nu2.carrier()) throw std::domain_error("structure_leq: carrier mismatch");
  for (int x = 0; x < nu.carrier().size(); ++x)
    if (!refines(nu2.at(x), nu.at(x))) return false;
  return true;
}

/// Lattice meet: pointwise intersection of families. The empty meet is the
/// top element (discrete).
inline NbdStructure structure_meet(const Carrier& c, std::span<const NbdStructure> list) {
  NbdStructure acc = discrete(c);
  for (const NbdStructure& nu : list) {
    if (nu.carrier() != c) throw std::domain_error("structure_meet: carrier mismatch");
    std::vector<PStack> stacks;
    for (int x = 0; x < c.size(); ++x) stacks.push_back(family_intersection(acc.at(x), nu.at(x)));
    acc = NbdStructure(c, std::move(stacks));
  }
  return acc;
}

/// Lattice join: pointwise union of families. The empty join is the bottom
/// element (indiscrete).
inline NbdStructure structure_join(const Carrier& c, std::span<const NbdStructure> list) {
  NbdStructure acc = indiscrete(c);
  for (const NbdStructure& nu : list) {
    if (nu.carrier() != c) throw std::domain_error("structure_join: carrier mismatch");
    std::vector<PStack> stacks;
    for (int x = 0; x < c.size(); ++x) stacks.push_back(family_union(acc.at(x), nu.at(x)));
    acc = NbdStructure(c, std::move(stacks));
  }
  return acc;
}

/// True iff every stack's family is closed under pairwise intersections of
/// its members, i.e. every stack is a filter. Generator pairs suffice: if
/// m ∩ m' is a member for all minimal m, m', then A ∩ B ⊇ m ∩ m' is one for
/// arbitrary members A ⊇ m, B ⊇ m'.
inline bool is_pretopological(const NbdStructure& nu) {
  for (int x = 0; x < nu.carrier().size(); ++x) {
    const auto& ms = nu.at(x).minimal_sets();
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = i + 1; j < ms.size(); ++j)
        if (!nu.at(x).member(ms[i] & ms[j])) return false;
  }
  return true;
}

/// Closes each stack under finite intersections. On a finite carrier the
/// filter a family generates is principal, generated by the intersection of
/// all minimal sets (every finite intersection of members contains it, and it
/// is itself such an intersection). That set still contains the point for
/// valid structures, so the result is a valid pretopological structure, the
/// least one above the input.
inline NbdStructure pretop_modification(const NbdStructure& nu) {
  const Carrier& c = nu.carrier();
  std::vector<PStack> stacks;
  for (int x = 0; x < c.size(); ++x) {
    const PStack& s = nu.at(x);
    if (s.family_empty()) {
      stacks.push_back(s);
      continue;
    }
    Mask inter = c.full_mask();
    for (Mask m : s.minimal_sets()) inter &= m;
    stacks.push_back(PStack::upward_closure(c, {inter}));
  }
  return NbdStructure(c, std::move(stacks));
}

}  // namespace nbhd
