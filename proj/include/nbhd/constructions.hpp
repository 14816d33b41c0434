#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nbhd/morphism.hpp"
#include "nbhd/space.hpp"

namespace nbhd {

/// A family of maps out of one carrier, each into a structured codomain.
struct StructuredSource {
  Carrier domain;
  std::vector<std::pair<SpaceMap, NbdStructure>> legs;  // map from `domain`, structure on its codomain
};

/// A family of maps into one carrier, each from a structured domain.
struct StructuredSink {
  Carrier codomain;
  std::vector<std::pair<SpaceMap, NbdStructure>> legs;  // map into `codomain`, structure on its domain
};

/// The coarsest structure on the source's domain making every leg continuous:
/// at x, the stack generated by the preimages of the members of each
/// nu_i(f_i(x)). Preimages of the minimal sets generate it. Every generator
/// contains x, so the lift is valid; with no legs it degenerates to the
/// indiscrete structure (the whole carrier is always thrown in, which is
/// absorbed whenever any other generator exists).
inline NbdStructure initial_lift(const StructuredSource& src) {
  for (const auto& [f, nu] : src.legs) {
    if (f.dom() != src.domain) throw std::domain_error("initial_lift: leg domain mismatch");
    if (nu.carrier() != f.cod()) throw std::domain_error("initial_lift: leg structure mismatch");
  }
  std::vector<PStack> stacks;
  for (int x = 0; x < src.domain.size(); ++x) {
    std::vector<Mask> gens{src.domain.full_mask()};
    for (const auto& [f, nu] : src.legs)
      for (Mask m : nu.at(f.apply(x)).minimal_sets()) gens.push_back(f.preimage(m));
    stacks.push_back(PStack::upward_closure(src.domain, std::move(gens)));
  }
  return NbdStructure(src.domain, std::move(stacks));
}

/// The finest structure on the sink's codomain making every leg continuous:
///
///   nu_Y(y) = { A ⊆ Y : y ∈ A and f_i⁻¹(A) ∈ nu_i(x) for all i, x ∈ f_i⁻¹(y) }.
///
/// Points outside every image have a vacuous condition and get the principal
/// stack. Computed by sweeping all subsets of the codomain.
inline NbdStructure final_lift(const StructuredSink& snk) {
  for (const auto& [f, nu] : snk.legs) {
    if (f.cod() != snk.codomain) throw std::domain_error("final_lift: leg codomain mismatch");
    if (nu.carrier() != f.dom()) throw std::domain_error("final_lift: leg structure mismatch");
  }
  const Carrier& y_carrier = snk.codomain;
  std::vector<PStack> stacks;
  for (int y = 0; y < y_carrier.size(); ++y) {
    std::vector<Mask> members;
    for (Mask a = 0; a <= y_carrier.full_mask(); ++a) {
      if (!(a & point_bit(y))) continue;
      bool ok = true;
      for (const auto& [f, nu] : snk.legs) {
        Mask fiber = f.preimage(point_bit(y));
        Mask pre = f.preimage(a);
        for (int x = 0; ok && x < f.dom().size(); ++x)
          if ((fiber & point_bit(x)) && !nu.at(x).member(pre)) ok = false;
        if (!ok) break;
      }
      if (ok) members.push_back(a);
    }
    stacks.push_back(PStack::upward_closure(y_carrier, std::move(members)));
  }
  return NbdStructure(y_carrier, std::move(stacks));
}

// --- products -------------------------------------------------------------

/// cylinder: generated by A × X2 and X1 × B (the initial lift of the two
///           projections; the categorical product).
/// box:      generated by A × B (products of members of the two stacks).
enum class ProductMode { cylinder, box };

inline ProductMode product_mode_from_string(const std::string& s) {
  if (s == "cylinder") return ProductMode::cylinder;
  if (s == "box") return ProductMode::box;
  throw std::domain_error("unknown product mode: " + s);
}

inline std::string to_string(ProductMode m) {
  return m == ProductMode::cylinder ? "cylinder" : "box";
}

/// Pairs of points, labelled "(a,u)"; index (i,j) ↦ i·|B| + j.
inline Carrier product_carrier(const Carrier& a, const Carrier& b) {
  if (a.size() * b.size() > kMaxPoints)
    throw std::length_error("product carrier exceeds " + std::to_string(kMaxPoints) + " points");
  std::vector<std::string> labels;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j)
      labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
  return Carrier(std::move(labels));
}

inline int pair_index(const Carrier& b, int i, int j) { return i * b.size() + j; }

inline SpaceMap projection_first(const Carrier& a, const Carrier& b) {
  std::vector<int> t;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) t.push_back(i);
  return SpaceMap(product_carrier(a, b), a, std::move(t));
}

inline SpaceMap projection_second(const Carrier& a, const Carrier& b) {
  std::vector<int> t;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) t.push_back(j);
  return SpaceMap(product_carrier(a, b), b, std::move(t));
}

inline SpaceMap product_map(const SpaceMap& f, const SpaceMap& g) {
  Carrier dom = product_carrier(f.dom(), g.dom());
  Carrier cod = product_carrier(f.cod(), g.cod());
  std::vector<int> t;
  for (int i = 0; i < f.dom().size(); ++i)
    for (int j = 0; j < g.dom().size(); ++j)
      t.push_back(pair_index(g.cod(), f.apply(i), g.apply(j)));
  return SpaceMap(std::move(dom), std::move(cod), std::move(t));
}

/// The pairing ⟨f,g⟩ : Z → X1 × X2 of two maps with a common domain.
inline SpaceMap pairing(const SpaceMap& f, const SpaceMap& g) {
  if (f.dom() != g.dom()) throw std::domain_error("pairing: domains differ");
  Carrier cod = product_carrier(f.cod(), g.cod());
  std::vector<int> t;
  for (int z = 0; z < f.dom().size(); ++z)
    t.push_back(pair_index(g.cod(), f.apply(z), g.apply(z)));
  return SpaceMap(f.dom(), std::move(cod), std::move(t));
}

inline Mask cross_mask(const Carrier& b, Mask ma, Mask mb, int a_size) {
  Mask out = 0;
  for (int i = 0; i < a_size; ++i)
    if (ma & point_bit(i))
      for (int j = 0; j < b.size(); ++j)
        if (mb & point_bit(j)) out |= point_bit(pair_index(b, i, j));
  return out;
}

inline NbdStructure product_space(const NbdStructure& s1, const NbdStructure& s2,
                                  ProductMode mode) {
  const Carrier& c1 = s1.carrier();
  const Carrier& c2 = s2.carrier();
  if (mode == ProductMode::cylinder) {
    Carrier p = product_carrier(c1, c2);
    return initial_lift(StructuredSource{
        p, {{projection_first(c1, c2), s1}, {projection_second(c1, c2), s2}}});
  }
  Carrier p = product_carrier(c1, c2);
  std::vector<PStack> stacks;
  for (int i = 0; i < c1.size(); ++i)
    for (int j = 0; j < c2.size(); ++j) {
      std::vector<Mask> gens;
      for (Mask m1 : s1.at(i).minimal_sets())
        for (Mask m2 : s2.at(j).minimal_sets())
          gens.push_back(cross_mask(c2, m1, m2, c1.size()));
      stacks.push_back(PStack::upward_closure(p, std::move(gens)));
    }
  return NbdStructure(p, std::move(stacks));
}

// --- quotients ------------------------------------------------------------

/// The induced quotient structure: the final lift along a single surjection.
/// The membership condition f⁻¹(A) ∈ nu_X(x) already forces y ∈ A.
inline NbdStructure quotient_structure(const SpaceMap& f, const NbdStructure& nuX) {
  if (!f.is_surjective()) throw std::domain_error("quotient_structure: map is not surjective");
  if (nuX.carrier() != f.dom()) throw std::domain_error("quotient_structure: structure mismatch");
  return final_lift(StructuredSink{f.cod(), {{f, nuX}}});
}

/// Quotient map test: surjective and the codomain carries exactly the
/// induced structure.
inline bool is_quotient_map(const SpaceMap& f, const NbdStructure& nuX,
                            const NbdStructure& nuY) {
  if (nuX.carrier() != f.dom() || nuY.carrier() != f.cod())
    throw std::domain_error("is_quotient_map: structures do not match the map");
  if (!f.is_surjective()) return false;
  return nuY == quotient_structure(f, nuX);
}

}  // namespace nbhd
