#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "nbhd/carrier.hpp"
#include "nbhd/morphism.hpp"
#include "nbhd/pstack.hpp"
#include "nbhd/space.hpp"

// JSON forms. A stack is the array of its minimal sets, each set an array of
// labels; sets are sorted as label arrays so the output is canonical. A
// structure is an object, one key per point in carrier order; key order
// defines the carrier on the way back in. A map carries explicit domain and
// codomain label arrays plus a label-to-label object. Everything uses
// ordered_json so serialization is byte-deterministic.

namespace nbhd {

using Json = nlohmann::ordered_json;

inline Json to_json(const PStack& s) {
  std::vector<std::vector<std::string>> sets;
  for (Mask m : s.minimal_sets()) sets.push_back(sorted_labels(s.carrier(), m));
  std::sort(sets.begin(), sets.end());
  Json out = Json::array();
  for (const auto& labels : sets) out.push_back(labels);
  return out;
}

inline Json to_json(const NbdStructure& nu) {
  Json out = Json::object();
  for (int x = 0; x < nu.carrier().size(); ++x)
    out[nu.carrier().label(x)] = to_json(nu.at(x));
  return out;
}

inline Json to_json(const SpaceMap& f) {
  Json out = Json::object();
  out["domain"] = f.dom().labels();
  out["codomain"] = f.cod().labels();
  Json table = Json::object();
  for (int x = 0; x < f.dom().size(); ++x)
    table[f.dom().label(x)] = f.cod().label(f.apply(x));
  out["map"] = table;
  return out;
}

namespace detail {

inline std::vector<std::string> string_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw std::domain_error(what + ": expected an array of labels");
  std::vector<std::string> out;
  for (const Json& e : j) {
    if (!e.is_string()) throw std::domain_error(what + ": labels must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace detail

/// Reads a stack from its array-of-label-arrays form onto the given carrier.
inline PStack stack_from_json(const Carrier& c, const Json& j) {
  if (!j.is_array()) throw std::domain_error("stack: expected an array of sets");
  std::vector<Mask> gens;
  for (const Json& set : j)
    gens.push_back(mask_of(c, detail::string_list(set, "stack set")));
  return PStack::upward_closure(c, std::move(gens));
}

/// Reads a structure from its object form; the key order defines the carrier.
inline NbdStructure structure_from_json(const Json& j) {
  if (!j.is_object() || j.empty())
    throw std::domain_error("structure: expected a nonempty object keyed by point labels");
  std::vector<std::string> labels;
  for (auto it = j.begin(); it != j.end(); ++it) labels.push_back(it.key());
  Carrier c(labels);
  std::vector<PStack> stacks;
  for (auto it = j.begin(); it != j.end(); ++it) stacks.push_back(stack_from_json(c, it.value()));
  return NbdStructure(c, std::move(stacks));
}

inline SpaceMap map_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("domain") || !j.contains("codomain") || !j.contains("map"))
    throw std::domain_error("map: expected an object with domain, codomain, and map");
  Carrier dom(detail::string_list(j["domain"], "map domain"));
  Carrier cod(detail::string_list(j["codomain"], "map codomain"));
  const Json& table = j["map"];
  if (!table.is_object()) throw std::domain_error("map: 'map' must be an object");
  std::vector<int> assignment(static_cast<std::size_t>(dom.size()), -1);
  for (auto it = table.begin(); it != table.end(); ++it) {
    if (!it.value().is_string()) throw std::domain_error("map: values must be labels");
    assignment[static_cast<std::size_t>(dom.index_of(it.key()))] =
        cod.index_of(it.value().get<std::string>());
  }
  for (int x = 0; x < dom.size(); ++x)
    if (assignment[static_cast<std::size_t>(x)] < 0)
      throw std::domain_error("map: no value for point '" + dom.label(x) + "'");
  return SpaceMap(dom, cod, std::move(assignment));
}

}  // namespace nbhd
