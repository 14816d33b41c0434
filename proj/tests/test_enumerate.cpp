#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <stdexcept>
#include <vector>

#include "nbhd/constructions.hpp"
#include "nbhd/enumerate.hpp"
#include "oracle.hpp"

using namespace nbhd;

TEST_CASE("stack counts match the brute-force oracle") {
  const int expected[] = {0, 1, 2, 5, 19, 167};
  for (int n = 1; n <= 5; ++n) {
    const Carrier c = canonical_carrier(n);
    for (int x = 0; x < n; ++x) {
      const auto stacks = enumerate_nbd_stacks(c, x);
      REQUIRE(static_cast<int>(stacks.size()) == expected[n]);
      if (n <= 4 || x == 0)  // the n=5 oracle pass is the slow one, once is enough
        REQUIRE(oracle::count_nbd_stacks(n, x) == expected[n]);
      for (const PStack& s : stacks) REQUIRE(is_nbd_stack(s, x));
      // enumeration returns each stack exactly once
      std::set<std::vector<Mask>> seen;
      for (const PStack& s : stacks) REQUIRE(seen.insert(s.minimal_sets()).second);
    }
  }
}

TEST_CASE("structure counts") {
  CHECK(enumerate_structures(canonical_carrier(1)).size() == 1);
  CHECK(enumerate_structures(canonical_carrier(2)).size() == 4);

  const Carrier c3 = canonical_carrier(3);
  const auto all3 = enumerate_structures(c3);
  REQUIRE(all3.size() == 125);
  std::set<std::string> fingerprints;
  for (const NbdStructure& nu : all3) {
    REQUIRE(validate_structure(nu).ok);
    std::string fp;
    for (int x = 0; x < 3; ++x)
      for (Mask m : nu.at(x).minimal_sets()) fp += std::to_string(m) + ",";
    REQUIRE(fingerprints.insert(fp).second);
  }
}

TEST_CASE("enumeration size limits") {
  CHECK_THROWS_AS(enumerate_structures(canonical_carrier(4)), std::length_error);
  CHECK_THROWS_AS(enumerate_nbd_stacks(canonical_carrier(6), 0), std::length_error);
}

TEST_CASE("map and surjection counts") {
  const Carrier c1 = canonical_carrier(1);
  const Carrier c2 = canonical_carrier(2);
  const Carrier c3 = canonical_carrier(3);
  const Carrier d2 = canonical_carrier(2, 'u');

  CHECK(enumerate_maps(c2, d2).size() == 4);
  CHECK(enumerate_maps(c3, d2).size() == 8);
  CHECK(enumerate_maps(c1, d2).size() == 2);

  CHECK(enumerate_surjections(c3, d2).size() == 6);
  CHECK(enumerate_surjections(c2, d2).size() == 2);
  CHECK(enumerate_surjections(c1, d2).empty());
  for (const SpaceMap& f : enumerate_surjections(c3, d2)) CHECK(f.is_surjective());
}

TEST_CASE("final lifts verified universal over small carriers") {
  const SearchReport small = check_final_lift_universal(2, 2);
  CHECK(small.certified_none);
  CHECK(small.counterexamples.empty());

  const SearchReport full = check_final_lift_universal(3, 2);
  CHECK(full.certified_none);
  CHECK(full.counts.at("surjections_3_to_2") == 6);
  CHECK(full.counts.at("domain_structures_checked") > 0);
}

TEST_CASE("product projections verified universal over small carriers") {
  const SearchReport report = check_initial_product_universal(2, 2);
  CHECK(report.certified_none);
  CHECK(report.counts.at("strict_separations") >= 1);
  CHECK(report.counts.at("product_pairs") > 0);
}

TEST_CASE("identity presentations are always quotient maps") {
  const Carrier c = canonical_carrier(2);
  for (const NbdStructure& nu : enumerate_structures(c))
    CHECK(is_quotient_map(SpaceMap::identity(c), nu, nu));
}

TEST_CASE("product quotient search runs deterministically") {
  for (ProductMode mode : {ProductMode::cylinder, ProductMode::box}) {
    const SearchReport a = search_product_quotient(2, 2, mode);
    const SearchReport b = search_product_quotient(2, 2, mode);
    REQUIRE(a.certified_none == b.certified_none);
    REQUIRE(a.counts == b.counts);
    REQUIRE(a.counterexamples.size() == b.counterexamples.size());
    for (std::size_t i = 0; i < a.counterexamples.size(); ++i) {
      REQUIRE(a.counterexamples[i].kind == b.counterexamples[i].kind);
      REQUIRE(a.counterexamples[i].witness_point == b.counterexamples[i].witness_point);
      REQUIRE(a.counterexamples[i].witness_set == b.counterexamples[i].witness_set);
      REQUIRE(a.counterexamples[i].f1 == b.counterexamples[i].f1);
    }
    REQUIRE(a.counts.at("pairs_tested") ==
            a.counts.at("quotient_presentations") * a.counts.at("quotient_presentations"));
  }
}

TEST_CASE("indiscrete domains never break product quotients") {
  // if both presentations start from indiscrete domains, the product of the
  // quotient maps is itself a quotient map, in either product mode
  const Carrier x = canonical_carrier(2);
  const Carrier y = canonical_carrier(2, 'u');
  for (ProductMode mode : {ProductMode::cylinder, ProductMode::box})
    for (const SpaceMap& f : enumerate_surjections(x, y))
      for (const SpaceMap& g : enumerate_surjections(x, y)) {
        const NbdStructure nuY1 = quotient_structure(f, indiscrete(x));
        const NbdStructure nuY2 = quotient_structure(g, indiscrete(x));
        const SpaceMap fg = product_map(f, g);
        const NbdStructure dom = product_space(indiscrete(x), indiscrete(x), mode);
        const NbdStructure cod = product_space(nuY1, nuY2, mode);
        REQUIRE(is_quotient_map(fg, dom, cod));
      }
}
