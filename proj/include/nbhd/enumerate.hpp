#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nbhd/constructions.hpp"
#include "nbhd/morphism.hpp"
#include "nbhd/space.hpp"

namespace nbhd {

/// Carrier with single-letter labels starting at `base` ('a' → a,b,c,...).
inline Carrier canonical_carrier(int n, char base = 'a') {
  if (n < 1 || n > kMaxPoints) throw std::domain_error("canonical_carrier: bad size");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>(base + i)));
  return Carrier(std::move(labels));
}

/// All neighborhood stacks at x: nonempty upward-closed families whose
/// members all contain x. Enumerated as the nonempty antichains among the
/// supersets of {x}; canonical (ascending-antichain) order.
inline std::vector<PStack> enumerate_nbd_stacks(const Carrier& c, int x) {
  if (c.size() > 5) throw std::length_error("enumerate_nbd_stacks: carrier larger than 5 points");
  if (!c.valid_point(x)) throw std::domain_error("point not in carrier");

  std::vector<Mask> candidates;  // subsets containing x, ascending
  for (Mask m = 0; m <= c.full_mask(); ++m)
    if (m & point_bit(x)) candidates.push_back(m);

  const int k = static_cast<int>(candidates.size());
  std::vector<std::uint32_t> comparable(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && (subset_of(candidates[static_cast<std::size_t>(i)],
                               candidates[static_cast<std::size_t>(j)]) ||
                     subset_of(candidates[static_cast<std::size_t>(j)],
                               candidates[static_cast<std::size_t>(i)])))
        comparable[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;

  std::vector<PStack> out;
  for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << k); ++pick) {
    bool antichain = true;
    for (int i = 0; antichain && i < k; ++i)
      if ((pick >> i) & 1)
        if (comparable[static_cast<std::size_t>(i)] & pick) antichain = false;
    if (!antichain) continue;
    std::vector<Mask> gens;
    for (int i = 0; i < k; ++i)
      if ((pick >> i) & 1) gens.push_back(candidates[static_cast<std::size_t>(i)]);
    out.push_back(PStack::upward_closure(c, std::move(gens)));
  }
  std::sort(out.begin(), out.end(), [](const PStack& a, const PStack& b) {
    return a.minimal_sets() < b.minimal_sets();
  });
  return out;
}

/// All neighborhood structures on the carrier: the cartesian product of the
/// per-point stack lists, last point varying fastest.
inline std::vector<NbdStructure> enumerate_structures(const Carrier& c) {
  if (c.size() > 3) throw std::length_error("enumerate_structures: carrier larger than 3 points");
  std::vector<std::vector<PStack>> per_point;
  for (int x = 0; x < c.size(); ++x) per_point.push_back(enumerate_nbd_stacks(c, x));

  std::vector<NbdStructure> out;
  std::vector<std::size_t> idx(per_point.size(), 0);
  while (true) {
    std::vector<PStack> stacks;
    for (std::size_t x = 0; x < per_point.size(); ++x) stacks.push_back(per_point[x][idx[x]]);
    out.push_back(NbdStructure(c, std::move(stacks)));
    int pos = static_cast<int>(per_point.size()) - 1;
    while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] ==
                           per_point[static_cast<std::size_t>(pos)].size()) {
      idx[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

/// All |cod|^|dom| total maps, last domain point varying fastest.
inline std::vector<SpaceMap> enumerate_maps(const Carrier& dom, const Carrier& cod) {
  std::vector<SpaceMap> out;
  std::vector<int> table(static_cast<std::size_t>(dom.size()), 0);
  while (true) {
    out.push_back(SpaceMap(dom, cod, table));
    int pos = dom.size() - 1;
    while (pos >= 0 && ++table[static_cast<std::size_t>(pos)] == cod.size()) {
      table[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

inline std::vector<SpaceMap> enumerate_surjections(const Carrier& dom, const Carrier& cod) {
  std::vector<SpaceMap> out;
  for (SpaceMap& f : enumerate_maps(dom, cod))
    if (f.is_surjective()) out.push_back(std::move(f));
  return out;
}

// --- search harness --------------------------------------------------------

struct Counterexample {
  std::string kind;
  SpaceMap f1;
  NbdStructure nu1;
  std::optional<SpaceMap> f2;
  std::optional<NbdStructure> nu2;
  std::string witness_point;
  std::string witness_set;
};

struct SearchReport {
  std::map<std::string, std::string> parameters;
  std::vector<Counterexample> counterexamples;
  bool certified_none = false;
  std::map<std::string, long long> counts;
};

namespace detail {

/// First point and minimal set where two structures on one carrier disagree.
inline std::pair<int, Mask> first_disagreement(const NbdStructure& a, const NbdStructure& b) {
  for (int y = 0; y < a.carrier().size(); ++y) {
    if (a.at(y) == b.at(y)) continue;
    for (Mask m : a.at(y).minimal_sets())
      if (!b.at(y).member(m)) return {y, m};
    for (Mask m : b.at(y).minimal_sets())
      if (!a.at(y).member(m)) return {y, m};
  }
  throw std::logic_error("first_disagreement: structures are equal");
}

}  // namespace detail

/// Exhaustively checks, within the size bounds, that the induced quotient
/// structure of every surjection is the final lift: it makes the map
/// continuous and dominates every codomain structure that does.
inline SearchReport check_final_lift_universal(int max_x, int max_y) {
  if (max_x < 1 || max_x > 3 || max_y < 1 || max_y > 2)
    throw std::domain_error("check_final_lift_universal: bounds must satisfy 1 <= maxX <= 3, 1 <= maxY <= 2");
  SearchReport report;
  report.parameters["max_x"] = std::to_string(max_x);
  report.parameters["max_y"] = std::to_string(max_y);

  long long structures_checked = 0, candidate_checks = 0;
  for (int nx = 1; nx <= max_x; ++nx)
    for (int ny = 1; ny <= max_y; ++ny) {
      Carrier domc = canonical_carrier(nx, 'a');
      Carrier codc = canonical_carrier(ny, 'u');
      auto surjections = enumerate_surjections(domc, codc);
      report.counts["surjections_" + std::to_string(nx) + "_to_" + std::to_string(ny)] =
          static_cast<long long>(surjections.size());
      auto dom_structures = enumerate_structures(domc);
      auto cod_structures = enumerate_structures(codc);
      for (const SpaceMap& f : surjections)
        for (const NbdStructure& nuX : dom_structures) {
          ++structures_checked;
          NbdStructure lift = quotient_structure(f, nuX);
          if (!is_continuous(f, nuX, lift)) {
            for (int x = 0; x < nx; ++x)
              if (!is_continuous_at(f, nuX, lift, x)) {
                report.counterexamples.push_back(
                    {"final-lift-not-continuous", f, nuX, std::nullopt, std::nullopt,
                     domc.label(x), ""});
                break;
              }
          }
          for (const NbdStructure& nuY : cod_structures) {
            ++candidate_checks;
            if (!is_continuous(f, nuX, nuY)) continue;
            if (structure_leq(nuY, lift)) continue;
            // nuY makes f continuous but is not below the lift
            for (int y = 0; y < ny; ++y)
              for (Mask m : nuY.at(y).minimal_sets())
                if (!lift.at(y).member(m)) {
                  report.counterexamples.push_back(
                      {"final-lift-not-dominating", f, nuX, std::nullopt, nuY,
                       codc.label(y), set_text(codc, m)});
                  goto next_candidate;
                }
          next_candidate:;
          }
        }
    }
  report.counts["domain_structures_checked"] = structures_checked;
  report.counts["codomain_candidates_checked"] = candidate_checks;
  report.certified_none = report.counterexamples.empty();
  return report;
}

/// Exhaustively checks the product universal property within the bounds: for
/// every pair of structures on factor carriers, the cylinder product makes
/// both projections continuous, and a map into the product is continuous iff
/// both its components are. Also verifies cylinder <= box pointwise, with
/// strictness on discrete x discrete factors of size >= 2.
inline SearchReport check_initial_product_universal(int max_t = 2, int max_factor = 2) {
  if (max_t < 1 || max_t > 2 || max_factor < 1 || max_factor > 2)
    throw std::domain_error("check_initial_product_universal: bounds must lie in [1, 2]");
  SearchReport report;
  report.parameters["max_t"] = std::to_string(max_t);
  report.parameters["max_factor"] = std::to_string(max_factor);

  long long product_pairs = 0, pairing_candidates = 0, strict_separations = 0;
  for (int na = 1; na <= max_factor; ++na)
    for (int nb = 1; nb <= max_factor; ++nb) {
      Carrier ca = canonical_carrier(na, 'a');
      Carrier cb = canonical_carrier(nb, 'u');
      Carrier cp = product_carrier(ca, cb);
      SpaceMap p1 = projection_first(ca, cb);
      SpaceMap p2 = projection_second(ca, cb);
      auto a_structures = enumerate_structures(ca);
      auto b_structures = enumerate_structures(cb);
      for (const NbdStructure& nuA : a_structures)
        for (const NbdStructure& nuB : b_structures) {
          ++product_pairs;
          NbdStructure cyl = product_space(nuA, nuB, ProductMode::cylinder);
          NbdStructure box = product_space(nuA, nuB, ProductMode::box);

          if (!is_continuous(p1, cyl, nuA) || !is_continuous(p2, cyl, nuB)) {
            report.counterexamples.push_back({"projection-not-continuous", p1, cyl,
                                              std::nullopt, std::nullopt, "", ""});
            continue;
          }
          if (!structure_leq(cyl, box)) {
            auto [y, m] = detail::first_disagreement(cyl, box);
            report.counterexamples.push_back({"cylinder-above-box", p1, cyl, std::nullopt,
                                              std::optional<NbdStructure>(box), cp.label(y),
                                              set_text(cp, m)});
            continue;
          }
          if (nuA == discrete(ca) && nuB == discrete(cb) && na >= 2 && nb >= 2) {
            if (structure_leq(box, cyl)) {
              report.counterexamples.push_back({"box-not-strictly-finer", p1, cyl,
                                                std::nullopt, std::optional<NbdStructure>(box),
                                                "", ""});
              continue;
            }
            ++strict_separations;
          }

          for (int nt = 1; nt <= max_t; ++nt) {
            Carrier ct = canonical_carrier(nt, 'p');
            auto t_structures = enumerate_structures(ct);
            for (const SpaceMap& h : enumerate_maps(ct, cp)) {
              SpaceMap f = compose(p1, h);
              SpaceMap g = compose(p2, h);
              if (pairing(f, g) != h)
                throw std::logic_error("pairing does not reconstruct the swept map");
              for (const NbdStructure& nuT : t_structures) {
                ++pairing_candidates;
                const bool whole = is_continuous(h, nuT, cyl);
                const bool components =
                    is_continuous(f, nuT, nuA) && is_continuous(g, nuT, nuB);
                if (whole != components) {
                  report.counterexamples.push_back({"pairing-mismatch", h, nuT, std::nullopt,
                                                    std::optional<NbdStructure>(cyl), "", ""});
                }
              }
            }
          }
        }
    }
  report.counts["product_pairs"] = product_pairs;
  report.counts["pairing_candidates"] = pairing_candidates;
  report.counts["strict_separations"] = strict_separations;
  report.certified_none = report.counterexamples.empty();
  return report;
}

/// Exhaustive sweep over pairs of quotient presentations within the bounds:
/// both codomains carry the induced structure, the product map is formed with
/// product structures on both sides (given mode), and tested for being
/// quotient. Disagreements are reported with a witness point and set.
inline SearchReport search_product_quotient(int max_x, int max_y, ProductMode mode) {
  if (max_x < 1 || max_x > 3 || max_y < 1 || max_y > 2)
    throw std::domain_error("search_product_quotient: bounds must satisfy 1 <= maxX <= 3, 1 <= maxY <= 2");
  SearchReport report;
  report.parameters["max_x"] = std::to_string(max_x);
  report.parameters["max_y"] = std::to_string(max_y);
  report.parameters["mode"] = to_string(mode);

  struct Side {
    SpaceMap f;
    NbdStructure nuX;
    NbdStructure nuY;
  };
  std::vector<Side> sides;
  for (int nx = 1; nx <= max_x; ++nx)
    for (int ny = 1; ny <= max_y; ++ny) {
      Carrier domc = canonical_carrier(nx, 'a');
      Carrier codc = canonical_carrier(ny, 'u');
      for (const SpaceMap& f : enumerate_surjections(domc, codc))
        for (const NbdStructure& nuX : enumerate_structures(domc))
          sides.push_back({f, nuX, quotient_structure(f, nuX)});
    }
  report.counts["quotient_presentations"] = static_cast<long long>(sides.size());

  long long pairs = 0;
  for (const Side& s1 : sides)
    for (const Side& s2 : sides) {
      ++pairs;
      SpaceMap big = product_map(s1.f, s2.f);
      NbdStructure dom_prod = product_space(s1.nuX, s2.nuX, mode);
      NbdStructure cod_prod = product_space(s1.nuY, s2.nuY, mode);
      NbdStructure induced = quotient_structure(big, dom_prod);
      if (induced == cod_prod) continue;
      auto [y, m] = detail::first_disagreement(induced, cod_prod);
      report.counterexamples.push_back({"product-not-quotient", s1.f, s1.nuX, s2.f, s2.nuX,
                                        big.cod().label(y), set_text(big.cod(), m)});
    }
  report.counts["pairs_tested"] = pairs;
  report.counts["counterexamples"] = static_cast<long long>(report.counterexamples.size());
  report.certified_none = report.counterexamples.empty();
  return report;
}

}  // namespace nbhd
