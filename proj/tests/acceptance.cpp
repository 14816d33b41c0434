// Acceptance gate: one test case per criterion, each printing a [PASS]/[FAIL]
// line with its runtime so the result is readable straight off the test log.

#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nbhd/cli.hpp"
#include "nbhd/constructions.hpp"
#include "nbhd/continuum.hpp"
#include "nbhd/enumerate.hpp"
#include "oracle.hpp"
#include "schema_check.hpp"

using namespace nbhd;

namespace {

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void report(int n, const std::string& what, bool ok, double secs, double limit) {
  const bool good = ok && secs < limit;
  std::ostringstream line;
  line << (good ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << what << " ("
       << std::fixed << std::setprecision(2) << secs << " s)";
  std::cout << line.str() << std::endl;
  REQUIRE(ok);
  REQUIRE(secs < limit);
}

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

}  // namespace

TEST_CASE("criterion 1") {
  Timer t;
  bool ok = true;

  const Carrier c2 = canonical_carrier(2);
  const Carrier c3 = canonical_carrier(3);
  ok &= enumerate_nbd_stacks(c2, 0).size() == 2;
  ok &= enumerate_structures(c2).size() == 4;
  ok &= enumerate_nbd_stacks(c3, 0).size() == 5;
  ok &= enumerate_structures(c3).size() == 125;
  for (int x = 0; x < 2; ++x) ok &= oracle::count_nbd_stacks(2, x) == 2;
  for (int x = 0; x < 3; ++x) ok &= oracle::count_nbd_stacks(3, x) == 5;

  report(1, "stack and structure enumeration matches the brute-force oracle", ok,
         t.seconds(), 1.0);
}

TEST_CASE("criterion 2") {
  Timer t;
  const SearchReport r = check_final_lift_universal(3, 2);
  const bool ok = r.certified_none && r.counterexamples.empty() &&
                  r.counts.at("surjections_3_to_2") == 6 &&
                  r.counts.at("domain_structures_checked") > 0;
  report(2, "final lifts dominate every continuous codomain structure", ok, t.seconds(), 5.0);
}

TEST_CASE("criterion 3") {
  Timer t;
  const SearchReport r = check_initial_product_universal(2, 2);
  const bool ok = r.certified_none && r.counterexamples.empty() &&
                  r.counts.at("strict_separations") >= 1 && r.counts.at("product_pairs") > 0;
  report(3, "product projections are universal and cylinder sits below box", ok, t.seconds(),
         5.0);
}

TEST_CASE("criterion 4") {
  Timer t;
  bool ok = true;

  const Carrier c = canonical_carrier(2);
  const auto structures = enumerate_structures(c);
  for (const NbdStructure& nu : structures) {
    const NbdStructure m = pretop_modification(nu);
    ok &= is_pretopological(m);
    ok &= structure_leq(nu, m);
    ok &= pretop_modification(m) == m;
    for (const NbdStructure& mu : structures)
      if (is_pretopological(mu) && structure_leq(nu, mu)) ok &= structure_leq(m, mu);
  }

  report(4, "pretopological modification is an idempotent inflationary least refinement", ok,
         t.seconds(), 1.0);
}

TEST_CASE("criterion 5") {
  Timer t;
  bool ok = true;

  std::string text;
  ok &= run_cli({"verify-paper", "--q", "0", "--seed", "42"}, &text) == 0;
  ok &= Json::parse(text)["overall"] == "pass";
  ok &= run_cli({"verify-paper", "--q", "7/3", "--seed", "42"}, &text) == 0;
  ok &= Json::parse(text)["overall"] == "pass";
  ok &= run_cli({"verify-paper", "--q", "0", "--seed", "42", "--mode", "R"}, &text) == 0;
  ok &= Json::parse(text)["overall"] == "pass";

  // the consistency check must have teeth: a shrunken vertical band fails it
  ok &= !check_preimage_identity(Rat(0), 200, Rat(10), 42, Rat(1, 2)).pass;

  report(5, "full verification run passes at q=0, q=7/3, and in real-line mode", ok,
         t.seconds(), 10.0);
}

TEST_CASE("criterion 6") {
  Timer t;
  int failures = 0;

  std::mt19937_64 rng(0xACCE97);
  for (int i = 0; i < 1000; ++i) {
    const Rat q(static_cast<int>(rng() % 41) - 20, 1 + static_cast<int>(rng() % 9));
    const Rat default_radius(1 + static_cast<int>(rng() % 32), 64);
    std::map<BigInt, Rat> overrides;
    for (int k = static_cast<int>(rng() % 4); k > 0; --k)
      overrides[BigInt(static_cast<int>(rng() % 301) - 150)] =
          Rat(1 + static_cast<int>(rng() % 32), 64);
    const BoxSpec box{EpsFamily(default_radius, overrides),
                      Rat(1 + static_cast<int>(rng() % 256), 64)};
    try {
      const auto [c, r] = witness_product_side(q, box);
      if (!membership_quotient_box(q, box, c, r) || membership_PhiAq(q, c, r)) ++failures;
    } catch (const std::exception&) {
      ++failures;
    }
  }

  report(6, "1000 random boxes all yield sound product-side witnesses", failures == 0,
         t.seconds(), 30.0);
}

TEST_CASE("criterion 7") {
  Timer t;
  bool ok = true;

  std::ifstream schema_file(NBHD_REPO_ROOT "/report.schema.json");
  ok &= schema_file.good();
  const Json schema = Json::parse(schema_file);

  for (const std::string mode : {"cylinder", "box"}) {
    std::string text;
    ok &= run_cli({"search-product-quotient", "--max-x", "2", "--max-y", "2", "--mode", mode},
                  &text) == 0;
    const Json j = Json::parse(text);
    std::string why;
    const bool valid = schema_check::valid(schema, j, &why);
    if (!valid) std::cout << "schema violation: " << why << std::endl;
    ok &= valid;

    // the certificate flag must match the list, and every listed finding must
    // reproduce from its own serialized data
    ok &= j["certified_none"].get<bool>() == j["counterexamples"].empty();
    const ProductMode pmode = product_mode_from_string(mode);
    for (const Json& ce : j["counterexamples"]) {
      const SpaceMap f1 = map_from_json(ce["f1"]);
      const NbdStructure nu1 = structure_from_json(ce["nu1"]);
      const SpaceMap f2 = map_from_json(ce["f2"]);
      const NbdStructure nu2 = structure_from_json(ce["nu2"]);
      const NbdStructure dom = product_space(nu1, nu2, pmode);
      const NbdStructure cod =
          product_space(quotient_structure(f1, nu1), quotient_structure(f2, nu2), pmode);
      ok &= !is_quotient_map(product_map(f1, f2), dom, cod);
    }
  }

  report(7, "finite product-quotient search emits schema-valid, self-consistent reports", ok,
         t.seconds(), 60.0);
}
