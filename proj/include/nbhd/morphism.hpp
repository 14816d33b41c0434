#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nbhd/pstack.hpp"
#include "nbhd/space.hpp"

namespace nbhd {

/// A total map between finite carriers, stored as an index table.
class SpaceMap {
 public:
  SpaceMap(Carrier dom, Carrier cod, std::vector<int> table)
      : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
    if (static_cast<int>(table_.size()) != dom_.size())
      throw std::domain_error("map table must cover the whole domain");
    for (int y : table_)
      if (!cod_.valid_point(y)) throw std::domain_error("map image out of codomain");
  }

  static SpaceMap identity(const Carrier& c) {
    std::vector<int> t(static_cast<std::size_t>(c.size()));
    for (int i = 0; i < c.size(); ++i) t[static_cast<std::size_t>(i)] = i;
    return SpaceMap(c, c, std::move(t));
  }

  static SpaceMap from_labels(const Carrier& dom, const Carrier& cod,
                              const std::map<std::string, std::string>& assignment) {
    std::vector<int> t(static_cast<std::size_t>(dom.size()), -1);
    for (const auto& [from, to] : assignment)
      t[static_cast<std::size_t>(dom.index_of(from))] = cod.index_of(to);
    for (int y : t)
      if (y < 0) throw std::domain_error("map assignment misses a domain point");
    return SpaceMap(dom, cod, std::move(t));
  }

  const Carrier& dom() const { return dom_; }
  const Carrier& cod() const { return cod_; }
  const std::vector<int>& table() const { return table_; }

  int apply(int x) const { return table_.at(static_cast<std::size_t>(x)); }

  Mask image(Mask m) const {
    Mask out = 0;
    for (int x = 0; x < dom_.size(); ++x)
      if (m & point_bit(x)) out |= point_bit(apply(x));
    return out;
  }

  Mask preimage(Mask m) const {
    Mask out = 0;
    for (int x = 0; x < dom_.size(); ++x)
      if (m & point_bit(apply(x))) out |= point_bit(x);
    return out;
  }

  bool is_surjective() const { return image(dom_.full_mask()) == cod_.full_mask(); }

  friend bool operator==(const SpaceMap& f, const SpaceMap& g) {
    return f.dom_ == g.dom_ && f.cod_ == g.cod_ && f.table_ == g.table_;
  }
  friend bool operator!=(const SpaceMap& f, const SpaceMap& g) { return !(f == g); }

 private:
  Carrier dom_;
  Carrier cod_;
  std::vector<int> table_;
};

inline SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
  if (f.cod() != g.dom()) throw std::domain_error("compose: middle carriers differ");
  std::vector<int> t(static_cast<std::size_t>(f.dom().size()));
  for (int x = 0; x < f.dom().size(); ++x)
    t[static_cast<std::size_t>(x)] = g.apply(f.apply(x));
  return SpaceMap(f.dom(), g.cod(), std::move(t));
}

/// The image p-stack f(s): generated by the images of the members of s.
/// Images of the minimal sets generate it, since f preserves inclusion.
inline PStack image_stack(const SpaceMap& f, const PStack& s) {
  if (f.dom() != s.carrier()) throw std::domain_error("image_stack: carrier mismatch");
  std::vector<Mask> gens;
  for (Mask m : s.minimal_sets()) gens.push_back(f.image(m));
  return PStack::upward_closure(f.cod(), std::move(gens));
}

/// f is continuous at x iff the transported stack f(nuX(x)) refines nuY(f(x)).
inline bool is_continuous_at(const SpaceMap& f, const NbdStructure& nuX,
                             const NbdStructure& nuY, int x) {
  if (nuX.carrier() != f.dom() || nuY.carrier() != f.cod())
    throw std::domain_error("is_continuous_at: structures do not match the map");
  if (!f.dom().valid_point(x)) throw std::domain_error("point not in carrier");
  return refines(image_stack(f, nuX.at(x)), nuY.at(f.apply(x)));
}

inline bool is_continuous(const SpaceMap& f, const NbdStructure& nuX, const NbdStructure& nuY) {
  for (int x = 0; x < f.dom().size(); ++x)
    if (!is_continuous_at(f, nuX, nuY, x)) return false;
  return true;
}

}  // namespace nbhd
