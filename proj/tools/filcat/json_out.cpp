#include "filcat/json_out.hpp"

namespace filcat::cli {

json to_json(const Atom& a) {
  switch (a.kind()) {
    case Atom::Kind::label:
      return a.label_text();
    case Atom::Kind::pair:
      return {{"pair", json::array({to_json(a.first()), to_json(a.second())})}};
    case Atom::Kind::tag:
      return {{"tag", a.tag_index()}, {"of", to_json(a.tagged())}};
    case Atom::Kind::germ_code: {
      json ground = json::array(), core = json::array(), map = json::object();
      for (const auto& g : a.germ_ground()) ground.push_back(to_json(g));
      for (const auto& c : a.germ_core()) core.push_back(to_json(c));
      for (const auto& [k, v] : a.germ_entries()) map[k.to_string()] = to_json(v);
      return {{"dom", {{"ground", ground}, {"core", core}}}, {"map", map}};
    }
  }
  return nullptr;
}

json to_json(const GroundSet& s) {
  json out = json::array();
  for (const auto& a : s.atoms()) out.push_back(to_json(a));
  return out;
}

json to_json(const Subset& x) {
  json out = json::array();
  for (const auto& a : x.atoms()) out.push_back(to_json(a));
  return out;
}

json to_json(const Filter& F) { return {{"ground", to_json(F.ground())}, {"core", to_json(F.core())}}; }

json to_json(const PartialFn& f) {
  json graph = json::array();
  for (const auto& [k, v] : f.graph()) graph.push_back(json::array({to_json(k), to_json(v)}));
  return {{"dom", to_json(f.dom())}, {"cod", to_json(f.cod())}, {"graph", graph}};
}

json to_json(const FilArrow& a) {
  json graph = json::array();
  for (const auto& [k, v] : a.rep().graph()) graph.push_back(json::array({to_json(k), to_json(v)}));
  return {{"source", to_json(a.source())}, {"target", to_json(a.target())}, {"germ", graph}};
}

json to_json(const LawReport& r, bool timings) {
  json out = {{"law", r.law},       {"universe", r.universe}, {"cases", r.cases},
              {"passed", r.passed}, {"randomized", r.randomized}};
  if (r.randomized) out["seed"] = r.seed;
  if (!r.passed) {
    out["message"] = r.message;
    out["witness"] = r.witness;
  }
  if (timings) out["seconds"] = r.seconds;
  return out;
}

}  // namespace filcat::cli
