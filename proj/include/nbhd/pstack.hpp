#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "nbhd/carrier.hpp"

namespace nbhd {

/// An upward-closed family of subsets of a finite carrier, stored as the
/// antichain of its minimal sets. The represented family is
///
///   { S ⊆ X : m ⊆ S for some minimal set m }.
///
/// Canonical form: the antichain holds exactly the ⊆-minimal generators,
/// deduplicated and sorted ascending as bitmasks, so equality is a plain
/// vector comparison. The empty antichain represents the empty family; it is
/// constructible as a raw p-stack but is never a neighborhood stack.
class PStack {
 public:
  /// The p-stack generated by `generators`: the upward closure of the given
  /// sets. Throws std::domain_error if a generator is not a subset of the
  /// carrier.
  static PStack upward_closure(const Carrier& carrier, std::vector<Mask> generators) {
    for (Mask g : generators)
      if (!carrier.valid_subset(g))
        throw std::domain_error("generator is not a subset of the carrier");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    std::vector<Mask> minimal;
    for (Mask g : generators) {
      bool redundant = false;
      for (Mask h : generators)
        if (h != g && subset_of(h, g)) { redundant = true; break; }
      if (!redundant) minimal.push_back(g);
    }
    return PStack(carrier, std::move(minimal));
  }

  static PStack upward_closure(const Carrier& carrier, std::initializer_list<Mask> generators) {
    return upward_closure(carrier, std::vector<Mask>(generators));
  }

  const Carrier& carrier() const { return carrier_; }
  const std::vector<Mask>& minimal_sets() const { return minimal_; }

  bool family_empty() const { return minimal_.empty(); }

  /// True iff S belongs to the represented family.
  bool member(Mask s) const {
    for (Mask m : minimal_)
      if (subset_of(m, s)) return true;
    return false;
  }

  friend bool operator==(const PStack& a, const PStack& b) {
    return a.carrier_ == b.carrier_ && a.minimal_ == b.minimal_;
  }
  friend bool operator!=(const PStack& a, const PStack& b) { return !(a == b); }

 private:
  PStack(Carrier carrier, std::vector<Mask> minimal)
      : carrier_(std::move(carrier)), minimal_(std::move(minimal)) {}

  Carrier carrier_;
  std::vector<Mask> minimal_;
};

/// Pairwise intersection property: any two members of the family intersect.
/// Checking the minimal sets is enough, since members only grow upward.
inline bool satisfies_pip(const PStack& s) {
  const auto& ms = s.minimal_sets();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if ((ms[i] & ms[j]) == 0) return false;
  return true;
}

/// True iff `s` is a neighborhood stack at point x: the family is nonempty
/// and every member contains x. Implies satisfies_pip.
inline bool is_nbd_stack(const PStack& s, int x) {
  if (!s.carrier().valid_point(x)) throw std::domain_error("point not in carrier");
  if (s.family_empty()) return false;
  for (Mask m : s.minimal_sets())
    if (!(m & point_bit(x))) return false;
  return true;
}

/// family(s) ⊇ family(t): every member of t is already a member of s.
inline bool refines(const PStack& s, const PStack& t) {
  if (s.carrier() != t.carrier()) throw std::domain_error("refines: carrier mismatch");
  for (Mask m : t.minimal_sets())
    if (!s.member(m)) return false;
  return true;
}

/// Union of the represented families (the join in the family order).
inline PStack family_union(const PStack& s, const PStack& t) {
  if (s.carrier() != t.carrier()) throw std::domain_error("family_union: carrier mismatch");
  std::vector<Mask> gens = s.minimal_sets();
  gens.insert(gens.end(), t.minimal_sets().begin(), t.minimal_sets().end());
  return PStack::upward_closure(s.carrier(), std::move(gens));
}

/// Intersection of the represented families. S lies in both families iff it
/// contains some minimal set of each, i.e. some union m ∪ m'.
inline PStack family_intersection(const PStack& s, const PStack& t) {
  if (s.carrier() != t.carrier())
    throw std::domain_error("family_intersection: carrier mismatch");
  std::vector<Mask> gens;
  for (Mask m : s.minimal_sets())
    for (Mask n : t.minimal_sets()) gens.push_back(m | n);
  return PStack::upward_closure(s.carrier(), std::move(gens));
}

/// The principal stack at x: every subset containing x.
inline PStack principal_stack(const Carrier& c, int x) {
  if (!c.valid_point(x)) throw std::domain_error("point not in carrier");
  return PStack::upward_closure(c, {point_bit(x)});
}

/// The coarsest nonempty stack: only the full carrier.
inline PStack whole_carrier_stack(const Carrier& c) {
  return PStack::upward_closure(c, {c.full_mask()});
}

}  // namespace nbhd
