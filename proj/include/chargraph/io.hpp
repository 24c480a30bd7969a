#pragma once

// JSON encodings for graphs, degree sets, group models, case reports and
// scanner rows.
//
//   graph:       {"vertices":[2,3,5],"edges":[[3,7],[5,13]]}
//   degree set:  {"degrees":[1,5,11]}
//   group model: {"kind":"psl2","p":2,"f":6} | {"kind":"pgl2",...}
//                {"kind":"solvable","degrees":[...]}
//                {"kind":"product","factors":[...]}

#include <string>
#include <vector>

#include <json.hpp>

#include "chargraph/classify.hpp"
#include "chargraph/degrees.hpp"
#include "chargraph/graph.hpp"
#include "chargraph/shapes.hpp"

namespace chargraph {

using json = nlohmann::ordered_json;

inline json to_json(const CharGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.a, e.b});
  return {{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

inline CharGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw std::invalid_argument("graph JSON needs \"vertices\" and \"edges\"");
  }
  PrimeSet vertices = j.at("vertices").get<PrimeSet>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph JSON: edges are pairs");
    edges.push_back(make_edge(e[0].get<Prime>(), e[1].get<Prime>()));
  }
  return CharGraph(std::move(vertices), std::move(edges));
}

inline json to_json(const DegreeSet& cd) { return {{"degrees", cd.degrees()}}; }

inline DegreeSet degree_set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("degrees")) {
    throw std::invalid_argument("degree set JSON needs \"degrees\"");
  }
  return DegreeSet(j.at("degrees").get<std::vector<u64>>());
}

inline json to_json(const GroupModel& m) {
  return std::visit(
      [](const auto& k) -> json {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, GroupModel::Psl2>) {
          return {{"kind", "psl2"}, {"p", k.q.p}, {"f", k.q.f}};
        } else if constexpr (std::is_same_v<T, GroupModel::Pgl2>) {
          return {{"kind", "pgl2"}, {"p", k.q.p}, {"f", k.q.f}};
        } else if constexpr (std::is_same_v<T, GroupModel::AbstractSolvable>) {
          return {{"kind", "solvable"}, {"degrees", k.cd.degrees()}};
        } else {
          json factors = json::array();
          for (const auto& f : k.factors) factors.push_back(to_json(f));
          return {{"kind", "product"}, {"factors", std::move(factors)}};
        }
      },
      m.kind);
}

inline GroupModel group_model_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw std::invalid_argument("group model JSON needs \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "psl2") return GroupModel::psl2(j.at("p").get<u64>(), j.at("f").get<unsigned>());
  if (kind == "pgl2") return GroupModel::pgl2(j.at("p").get<u64>(), j.at("f").get<unsigned>());
  if (kind == "solvable") return GroupModel::solvable(degree_set_from_json(j));
  if (kind == "product") {
    std::vector<GroupModel> factors;
    for (const auto& f : j.at("factors")) factors.push_back(group_model_from_json(f));
    return GroupModel::product(std::move(factors));
  }
  throw std::invalid_argument("group model JSON: unknown kind \"" + kind + "\"");
}

/// A radical given as an array of degree sets, a single degree set, or a
/// solvable/product group model.
inline std::vector<DegreeSet> radical_from_json(const json& j) {
  std::vector<DegreeSet> out;
  if (j.is_array()) {
    for (const auto& d : j) out.push_back(degree_set_from_json(d));
  } else if (j.is_object() && j.contains("kind")) {
    const GroupModel m = group_model_from_json(j);
    if (const auto* p = std::get_if<GroupModel::DirectProduct>(&m.kind)) {
      for (const auto& f : p->factors) out.push_back(cd_of(f));
    } else {
      out.push_back(cd_of(m));
    }
  } else {
    out.push_back(degree_set_from_json(j));
  }
  return out;
}

inline json to_json(const Factorization& fac) {
  json factors = json::array();
  for (const auto& [p, e] : fac.factors) factors.push_back({p, e});
  return {{"n", fac.n}, {"factors", std::move(factors)}};
}

inline json to_json(const CaseReport& r) {
  json j = {{"f", r.f},
            {"sizes", {r.minus_primes.size(), r.plus_primes.size()}},
            {"pi_minus", r.minus_primes},
            {"pi_plus", r.plus_primes},
            {"case", to_string(r.main_case)},
            {"socle_graph", to_json(r.socle_graph)},
            {"required_radical", r.required_radical}};
  j["expected_shape"] = r.expected_shape ? json(render_shape(*r.expected_shape)) : json(nullptr);
  if (r.graph) j["graph"] = to_json(*r.graph);
  j["verified"] = r.verified;
  return j;
}

inline std::string to_string(InterestClause c) {
  switch (c) {
    case InterestClause::a: return "a";
    case InterestClause::b: return "b";
    case InterestClause::none: return "none";
  }
  return "none";
}

inline std::string to_string(OddFourClause c) {
  switch (c) {
    case OddFourClause::a: return "a";
    case OddFourClause::b: return "b";
    case OddFourClause::c: return "c";
    case OddFourClause::none: return "none";
  }
  return "none";
}

inline json to_json(const InterestRow& r) {
  json j = {{"f", r.f},
            {"pi_minus", r.minus_primes},
            {"pi_plus", r.plus_primes},
            {"clause", to_string(r.clause)},
            {"conforming", r.clause != InterestClause::none}};
  if (r.t) {
    j["t"] = *r.t;
    j["beta"] = r.beta;
  }
  return j;
}

inline json to_json(const EvenFiveRow& r) {
  return {{"f", r.f}, {"pi_minus", r.minus_primes}, {"pi_plus", r.plus_primes},
          {"conforming", r.conforming}};
}

inline json to_json(const OddFourRow& r) {
  return {{"q", r.q}, {"p", r.power.p}, {"f", r.power.f}, {"pi", r.primes},
          {"clause", to_string(r.clause)}, {"conforming", r.clause != OddFourClause::none}};
}

inline json to_json(const CaseRow& r) {
  return {{"f", r.f}, {"sizes", {r.minus_size, r.plus_size}}, {"case", to_string(r.main_case)}};
}

}  // namespace chargraph
