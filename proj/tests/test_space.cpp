#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>
#include <vector>

#include "nbhd/enumerate.hpp"
#include "nbhd/morphism.hpp"
#include "nbhd/space.hpp"
#include "oracle.hpp"

using namespace nbhd;

namespace {

Carrier ab() { return Carrier({"a", "b"}); }
Carrier abc() { return Carrier({"a", "b", "c"}); }

NbdStructure make(const Carrier& c, std::vector<PStack> stacks) {
  return NbdStructure(c, std::move(stacks));
}

}  // namespace

TEST_CASE("structure validation") {
  const Carrier c = ab();
  CHECK(validate_structure(discrete(c)).ok);
  CHECK(validate_structure(indiscrete(c)).ok);

  const NbdStructure bad =
      make(c, {PStack::upward_closure(c, {mask_of(c, {"b"})}), principal_stack(c, 1)});
  const ValidationResult r = validate_structure(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.point == 0);
  CHECK(r.offending == mask_of(c, {"b"}));

  CHECK_THROWS_AS(make(c, {principal_stack(c, 0)}), std::domain_error);
}

TEST_CASE("structure order") {
  const Carrier c = ab();
  CHECK(structure_leq(indiscrete(c), discrete(c)));
  CHECK_FALSE(structure_leq(discrete(c), indiscrete(c)));

  const NbdStructure mixed = make(c, {whole_carrier_stack(c), principal_stack(c, 1)});
  CHECK(structure_leq(mixed, discrete(c)));

  CHECK_THROWS_AS(structure_leq(discrete(c), discrete(abc())), std::domain_error);
}

TEST_CASE("order agrees with identity continuity") {
  for (int n : {2, 3}) {
    const Carrier c = canonical_carrier(n);
    const SpaceMap id = SpaceMap::identity(c);
    const auto structures = enumerate_structures(c);
    for (const NbdStructure& nu : structures)
      for (const NbdStructure& nu2 : structures)
        REQUIRE(structure_leq(nu, nu2) == is_continuous(id, nu2, nu));
  }
}

TEST_CASE("meet and join") {
  const Carrier c = ab();
  const std::vector<NbdStructure> pair = {discrete(c), indiscrete(c)};
  CHECK(structure_meet(c, pair) == indiscrete(c));
  CHECK(structure_join(c, pair) == discrete(c));

  CHECK(structure_meet(c, {}) == discrete(c));
  CHECK(structure_join(c, {}) == indiscrete(c));

  // intersecting the principal family at a with the whole-carrier family
  const NbdStructure nu1 = make(c, {principal_stack(c, 0), principal_stack(c, 1)});
  const NbdStructure nu2 = make(c, {whole_carrier_stack(c), principal_stack(c, 1)});
  const std::vector<NbdStructure> both = {nu1, nu2};
  CHECK(structure_meet(c, both).at(0) == whole_carrier_stack(c));

  CHECK_THROWS_AS(structure_meet(c, std::vector<NbdStructure>{discrete(abc())}),
                  std::domain_error);
}

TEST_CASE("lattice bounds and extremality") {
  const Carrier c2 = ab();
  const auto structures2 = enumerate_structures(c2);
  for (const NbdStructure& nu : structures2) {
    REQUIRE(structure_leq(indiscrete(c2), nu));
    REQUIRE(structure_leq(nu, discrete(c2)));
  }

  // meet = greatest lower bound, join = least upper bound, fully on 2 points
  for (const NbdStructure& nu1 : structures2)
    for (const NbdStructure& nu2 : structures2) {
      const std::vector<NbdStructure> pair = {nu1, nu2};
      const NbdStructure meet = structure_meet(c2, pair);
      const NbdStructure join = structure_join(c2, pair);
      REQUIRE(structure_leq(meet, nu1));
      REQUIRE(structure_leq(meet, nu2));
      REQUIRE(structure_leq(nu1, join));
      REQUIRE(structure_leq(nu2, join));
      REQUIRE(validate_structure(meet).ok);
      REQUIRE(validate_structure(join).ok);
      for (const NbdStructure& other : structures2) {
        if (structure_leq(other, nu1) && structure_leq(other, nu2))
          REQUIRE(structure_leq(other, meet));
        if (structure_leq(nu1, other) && structure_leq(nu2, other))
          REQUIRE(structure_leq(join, other));
      }
    }

  // 3 points: order bounds on all pairs, extremality on a deterministic sample
  const Carrier c3 = abc();
  const auto structures3 = enumerate_structures(c3);
  for (const NbdStructure& nu1 : structures3)
    for (const NbdStructure& nu2 : structures3) {
      const std::vector<NbdStructure> pair = {nu1, nu2};
      const NbdStructure meet = structure_meet(c3, pair);
      const NbdStructure join = structure_join(c3, pair);
      REQUIRE(structure_leq(meet, nu1));
      REQUIRE(structure_leq(nu1, join));
      REQUIRE(structure_leq(meet, nu2));
      REQUIRE(structure_leq(nu2, join));
    }
  std::mt19937_64 rng(20240817);
  for (int t = 0; t < 200; ++t) {
    const NbdStructure& nu1 = structures3[static_cast<std::size_t>(rng() % structures3.size())];
    const NbdStructure& nu2 = structures3[static_cast<std::size_t>(rng() % structures3.size())];
    const std::vector<NbdStructure> pair = {nu1, nu2};
    const NbdStructure meet = structure_meet(c3, pair);
    const NbdStructure join = structure_join(c3, pair);
    for (const NbdStructure& other : structures3) {
      if (structure_leq(other, nu1) && structure_leq(other, nu2))
        REQUIRE(structure_leq(other, meet));
      if (structure_leq(nu1, other) && structure_leq(nu2, other))
        REQUIRE(structure_leq(join, other));
    }
  }
}

TEST_CASE("pretopological test") {
  const Carrier c = ab();
  CHECK(is_pretopological(discrete(c)));
  CHECK(is_pretopological(indiscrete(c)));

  const Carrier c3 = abc();
  const PStack forked =
      PStack::upward_closure(c3, {mask_of(c3, {"a", "b"}), mask_of(c3, {"a", "c"})});
  const NbdStructure nu =
      make(c3, {forked, principal_stack(c3, 1), principal_stack(c3, 2)});
  CHECK_FALSE(is_pretopological(nu));
  CHECK(is_pretopological(make(c3, {principal_stack(c3, 0), principal_stack(c3, 1),
                                    principal_stack(c3, 2)})));
}

TEST_CASE("pretopological modification") {
  const Carrier c3 = abc();
  const PStack forked =
      PStack::upward_closure(c3, {mask_of(c3, {"a", "b"}), mask_of(c3, {"a", "c"})});
  const NbdStructure nu =
      make(c3, {forked, principal_stack(c3, 1), principal_stack(c3, 2)});
  const NbdStructure fixed = pretop_modification(nu);
  CHECK(fixed.at(0) == principal_stack(c3, 0));
  CHECK(is_pretopological(fixed));

  CHECK(pretop_modification(indiscrete(c3)) == indiscrete(c3));
  CHECK(pretop_modification(discrete(c3)) == discrete(c3));
}

TEST_CASE("modification is a closure operator") {
  for (int n : {2, 3}) {
    const Carrier c = canonical_carrier(n);
    const auto structures = enumerate_structures(c);
    for (const NbdStructure& nu : structures) {
      const NbdStructure m = pretop_modification(nu);
      REQUIRE(is_pretopological(m));
      REQUIRE(structure_leq(nu, m));                      // inflationary
      REQUIRE(pretop_modification(m) == m);               // idempotent
      REQUIRE((is_pretopological(nu) == (m == nu)));      // fixes exactly pretop inputs
      for (const NbdStructure& mu : structures)           // monotone
        if (structure_leq(nu, mu))
          REQUIRE(structure_leq(m, pretop_modification(mu)));
    }
  }
}

TEST_CASE("modification is the least pretopological refinement") {
  const Carrier c = ab();
  const auto structures = enumerate_structures(c);
  for (const NbdStructure& nu : structures) {
    const NbdStructure m = pretop_modification(nu);
    for (const NbdStructure& mu : structures)
      if (is_pretopological(mu) && structure_leq(nu, mu)) REQUIRE(structure_leq(m, mu));
  }
}

TEST_CASE("modification factors continuous maps from pretopological spaces") {
  // g continuous into nu, with a pretopological domain, stays continuous into
  // the modification of nu
  const Carrier p = canonical_carrier(2, 'p');
  const Carrier x = ab();
  for (const NbdStructure& pi : enumerate_structures(p)) {
    if (!is_pretopological(pi)) continue;
    for (const NbdStructure& nu : enumerate_structures(x))
      for (const SpaceMap& g : enumerate_maps(p, x))
        if (is_continuous(g, pi, nu))
          REQUIRE(is_continuous(g, pi, pretop_modification(nu)));
  }
}
