#pragma once

#include <fstream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nbhd/continuum.hpp"
#include "nbhd/enumerate.hpp"
#include "nbhd/json_io.hpp"

// Subcommand dispatch for the nbhd-lab tool. Every subcommand emits one JSON
// report (stdout or --out <path>) shaped as report.schema.json describes.
// Exit codes: 0 when the report's overall status is pass, 1 when a check
// failed, 2 on usage, validation, or I/O errors.

namespace nbhd {

namespace detail {

inline Json check_to_json(const CheckEntry& e) {
  Json c = Json::object();
  c["name"] = e.name;
  c["status"] = e.pass ? "pass" : "fail";
  if (e.witness) c["witness"] = *e.witness;
  if (!e.details.empty()) {
    Json d = Json::object();
    for (const auto& [k, v] : e.details) d[k] = v;
    c["details"] = d;
  }
  return c;
}

inline Json counterexample_to_json(const Counterexample& ce) {
  Json j = Json::object();
  j["kind"] = ce.kind;
  j["f1"] = to_json(ce.f1);
  j["nu1"] = to_json(ce.nu1);
  if (ce.f2) j["f2"] = to_json(*ce.f2);
  if (ce.nu2) j["nu2"] = to_json(*ce.nu2);
  j["witness_point"] = ce.witness_point;
  j["witness_set"] = ce.witness_set;
  return j;
}

inline Json counts_to_json(const std::map<std::string, long long>& counts) {
  Json j = Json::object();
  for (const auto& [k, v] : counts) j[k] = v;
  return j;
}

}  // namespace detail

/// Parses and runs one invocation (argv without the program name). Reports go
/// to `out` or the --out path; diagnostics go to `err`.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
  CLI::App app{"finite neighborhood spaces and the exact-rational quotient-product checks"};
  app.require_subcommand(1);

  std::string out_path;
  const auto add_out = [&out_path](CLI::App* sub) {
    sub->add_option("--out", out_path, "write the JSON report to this path instead of stdout");
  };

  CLI::App* verify = app.add_subcommand(
      "verify-paper", "machine-check the quotient-times-identity counterexample");
  std::string q_text = "0", mode_text = "Q", window_text = "10";
  int z_range = 1000, eps_trials = 100, samples = 100000, delta_count = 100;
  std::uint64_t seed = 42;
  verify->add_option("--q", q_text, "base point of the second factor (rational)");
  verify->add_option("--z-range", z_range, "explicit integer sweep bound")->check(CLI::Range(1, 1000000));
  verify->add_option("--delta-count", delta_count, "delta grid is {1/k : 1 <= k <= n}")->check(CLI::Range(1, 100000));
  verify->add_option("--eps-trials", eps_trials, "random radius families per delta")->check(CLI::Range(1, 100000));
  verify->add_option("--samples", samples, "random sample points for the preimage identity")->check(CLI::Range(1, 100000000));
  verify->add_option("--seed", seed, "seed for all randomized draws");
  verify->add_option("--mode", mode_text, "Q or R: how to read the horizontal factor");
  verify->add_option("--window", window_text, "horizontal sampling window (rational)");
  add_out(verify);

  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "count neighborhood stacks and structures");
  int size = 0;
  enumerate_cmd->add_option("--size", size, "carrier size")->required()->check(CLI::Range(1, 5));
  add_out(enumerate_cmd);

  CLI::App* universal = app.add_subcommand(
      "check-universal", "exhaustively verify the lift universal properties");
  int u_max_x = 3, u_max_y = 2;
  universal->add_option("--max-x", u_max_x, "largest domain carrier")->check(CLI::Range(1, 3));
  universal->add_option("--max-y", u_max_y, "largest codomain carrier")->check(CLI::Range(1, 2));
  add_out(universal);

  CLI::App* search = app.add_subcommand(
      "search-product-quotient", "exhaust small products of quotient maps");
  int s_max_x = 2, s_max_y = 2;
  std::string s_mode_text = "cylinder";
  search->add_option("--max-x", s_max_x, "largest domain carrier")->check(CLI::Range(1, 3));
  search->add_option("--max-y", s_max_y, "largest codomain carrier")->check(CLI::Range(1, 2));
  search->add_option("--mode", s_mode_text, "product structure: cylinder or box");
  add_out(search);

  CLI::App* continuity = app.add_subcommand(
      "check-continuity", "test a map between two structure files for continuity");
  std::string dom_path, cod_path, map_path;
  continuity->add_option("domain-space", dom_path, "JSON structure file for the domain")->required();
  continuity->add_option("codomain-space", cod_path, "JSON structure file for the codomain")->required();
  continuity->add_option("map", map_path, "JSON map file")->required();
  add_out(continuity);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const auto emit = [&](const Json& report) {
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
  };

  try {
    if (verify->parsed()) {
      VerifyConfig cfg;
      cfg.q = parse_rat(q_text);
      cfg.z_range = z_range;
      cfg.delta_grid.clear();
      for (int k = 1; k <= delta_count; ++k) cfg.delta_grid.push_back(Rat(1, k));
      cfg.eps_trials = eps_trials;
      cfg.samples = samples;
      cfg.seed = seed;
      cfg.mode = continuum_mode_from_string(mode_text);
      cfg.window = parse_rat(window_text);
      const VerificationReport rep = run_verification(cfg);

      Json j = Json::object();
      j["command"] = "verify-paper";
      Json config = Json::object();
      config["q"] = rat_to_string(cfg.q);
      config["z_range"] = cfg.z_range;
      config["delta_count"] = delta_count;
      config["eps_trials"] = cfg.eps_trials;
      config["samples"] = cfg.samples;
      config["seed"] = cfg.seed;
      config["mode"] = to_string(cfg.mode);
      config["window"] = rat_to_string(cfg.window);
      j["config"] = config;
      Json checks = Json::array();
      for (const CheckEntry& c : rep.checks) checks.push_back(detail::check_to_json(c));
      j["checks"] = checks;
      if (!rep.note.empty()) j["note"] = rep.note;
      j["overall"] = rep.overall ? "pass" : "fail";
      emit(j);
      return rep.overall ? 0 : 1;
    }

    if (enumerate_cmd->parsed()) {
      const Carrier c = canonical_carrier(size);
      bool consistent = true;
      long long per_point = 0;
      for (int x = 0; x < c.size(); ++x) {
        const auto stacks = enumerate_nbd_stacks(c, x);
        if (x == 0) per_point = static_cast<long long>(stacks.size());
        if (static_cast<long long>(stacks.size()) != per_point) consistent = false;
        for (const PStack& s : stacks)
          if (!is_nbd_stack(s, x)) consistent = false;
      }
      std::map<std::string, long long> counts;
      counts["stacks_per_point"] = per_point;
      if (size <= 3)
        counts["structures"] = static_cast<long long>(enumerate_structures(c).size());

      Json j = Json::object();
      j["command"] = "enumerate";
      Json config = Json::object();
      config["size"] = size;
      j["config"] = config;
      Json check = Json::object();
      check["name"] = "enumeration";
      check["status"] = consistent ? "pass" : "fail";
      j["checks"] = Json::array({check});
      j["counts"] = detail::counts_to_json(counts);
      j["overall"] = consistent ? "pass" : "fail";
      emit(j);
      return consistent ? 0 : 1;
    }

    if (universal->parsed()) {
      const SearchReport final_rep = check_final_lift_universal(u_max_x, u_max_y);
      const int product_bound = u_max_x < 2 ? u_max_x : 2;
      const SearchReport prod_rep = check_initial_product_universal(product_bound, product_bound);

      Json j = Json::object();
      j["command"] = "check-universal";
      Json config = Json::object();
      config["max_x"] = u_max_x;
      config["max_y"] = u_max_y;
      j["config"] = config;
      Json checks = Json::array();
      const auto summarize = [](const char* name, const SearchReport& r) {
        Json c = Json::object();
        c["name"] = name;
        c["status"] = r.certified_none ? "pass" : "fail";
        Json d = Json::object();
        for (const auto& [k, v] : r.parameters) d[k] = v;
        c["details"] = d;
        return c;
      };
      checks.push_back(summarize("final-lift-universal", final_rep));
      checks.push_back(summarize("product-universal", prod_rep));
      j["checks"] = checks;
      std::map<std::string, long long> counts = final_rep.counts;
      counts.insert(prod_rep.counts.begin(), prod_rep.counts.end());
      j["counts"] = detail::counts_to_json(counts);
      Json ces = Json::array();
      for (const Counterexample& ce : final_rep.counterexamples)
        ces.push_back(detail::counterexample_to_json(ce));
      for (const Counterexample& ce : prod_rep.counterexamples)
        ces.push_back(detail::counterexample_to_json(ce));
      j["counterexamples"] = ces;
      const bool ok = final_rep.certified_none && prod_rep.certified_none;
      j["certified_none"] = ok;
      j["overall"] = ok ? "pass" : "fail";
      emit(j);
      return ok ? 0 : 1;
    }

    if (search->parsed()) {
      const ProductMode mode = product_mode_from_string(s_mode_text);
      const SearchReport rep = search_product_quotient(s_max_x, s_max_y, mode);

      // A counterexample is a finding, not a failure; what can fail is the
      // re-verification of the findings themselves.
      bool reverified = true;
      for (const Counterexample& ce : rep.counterexamples) {
        const SpaceMap big = product_map(ce.f1, *ce.f2);
        const NbdStructure domp = product_space(ce.nu1, *ce.nu2, mode);
        const NbdStructure codp = product_space(quotient_structure(ce.f1, ce.nu1),
                                                quotient_structure(*ce.f2, *ce.nu2), mode);
        if (is_quotient_map(big, domp, codp)) reverified = false;
      }

      Json j = Json::object();
      j["command"] = "search-product-quotient";
      Json config = Json::object();
      config["max_x"] = s_max_x;
      config["max_y"] = s_max_y;
      config["mode"] = to_string(mode);
      j["config"] = config;
      Json checks = Json::array();
      Json completed = Json::object();
      completed["name"] = "search-exhausted";
      completed["status"] = "pass";
      checks.push_back(completed);
      Json reverify = Json::object();
      reverify["name"] = "counterexamples-reverified";
      reverify["status"] = reverified ? "pass" : "fail";
      checks.push_back(reverify);
      j["checks"] = checks;
      j["counts"] = detail::counts_to_json(rep.counts);
      Json ces = Json::array();
      for (const Counterexample& ce : rep.counterexamples)
        ces.push_back(detail::counterexample_to_json(ce));
      j["counterexamples"] = ces;
      j["certified_none"] = rep.certified_none;
      j["overall"] = reverified ? "pass" : "fail";
      emit(j);
      return reverified ? 0 : 1;
    }

    if (continuity->parsed()) {
      const auto load = [](const std::string& path) -> Json {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open file: " + path);
        return Json::parse(f);
      };
      const NbdStructure s1 = structure_from_json(load(dom_path));
      const NbdStructure s2 = structure_from_json(load(cod_path));
      const SpaceMap f = map_from_json(load(map_path));
      if (f.dom() != s1.carrier() || f.cod() != s2.carrier())
        throw std::domain_error("map domain/codomain do not match the space files");

      std::string witness;
      bool cont = true;
      for (int x = 0; x < f.dom().size(); ++x)
        if (!is_continuous_at(f, s1, s2, x)) {
          cont = false;
          witness = f.dom().label(x);
          break;
        }

      Json j = Json::object();
      j["command"] = "check-continuity";
      Json config = Json::object();
      config["domain_space"] = dom_path;
      config["codomain_space"] = cod_path;
      config["map"] = map_path;
      j["config"] = config;
      Json check = Json::object();
      check["name"] = "continuity";
      check["status"] = cont ? "pass" : "fail";
      if (!cont) check["witness"] = witness;
      j["checks"] = Json::array({check});
      j["overall"] = cont ? "pass" : "fail";
      emit(j);
      return cont ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace nbhd
