#pragma once
// JSON serialization for every core type. Exact values are emitted as JSON
// integers when they fit in 64 bits and as "n" / "n/d" strings otherwise;
// floating point input is rejected to keep everything exact.
//
// Schemas (stable, also documented in the README):
//   graph       {"n": 4, "edges": [[1,2],[2,3],...]}
//   field       {"field": "Q"} | {"field": "GF", "p": 5}
//   assignment  {"graph": G, "field": F,
//                "lists": {"1": [1,2], ...},
//                "matchings": [{"edge":1,"tail":1,"pairs":[[1,1],[2,2]]},...]}
//   instance    assignment plus optional "orientation": {"tails": [t_e,...]}
//   coloring    {"1": 1, "2": 2, ...}

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dporient/aux_digraph.hpp"
#include "dporient/correspondence.hpp"
#include "dporient/decomposition.hpp"
#include "dporient/euler.hpp"
#include "dporient/field.hpp"
#include "dporient/graph.hpp"
#include "dporient/polynomial.hpp"
#include "dporient/solver.hpp"

namespace dporient {

using nlohmann::json;

struct JsonError : Error {
  using Error::Error;
};

// ---- exact values ----------------------------------------------------------

inline json value_to_json(const FieldElement& x) {
  if (is_integral(x)) {
    Integer n = numerator(x);
    if (n >= std::numeric_limits<long long>::min() &&
        n <= std::numeric_limits<long long>::max())
      return json(static_cast<long long>(n));
  }
  return json(to_string(x));
}

inline json integer_to_json(const Integer& n) {
  if (n >= std::numeric_limits<long long>::min() &&
      n <= std::numeric_limits<long long>::max())
    return json(static_cast<long long>(n));
  return json(to_string(n));
}

inline FieldElement value_from_json(const json& j) {
  if (j.is_number_integer()) return FieldElement(j.get<long long>());
  if (j.is_number_unsigned()) return FieldElement(j.get<unsigned long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_float())
    throw JsonError("refusing non-exact numeric value " + j.dump());
  throw JsonError("expected an exact value, got " + j.dump());
}

inline Integer integer_from_json(const json& j) {
  FieldElement x = value_from_json(j);
  if (!is_integral(x)) throw JsonError("expected an integer, got " + j.dump());
  return numerator(x);
}

// ---- core structures -------------------------------------------------------

inline json graph_to_json(const Multigraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline Multigraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw JsonError("graph wants {\"n\", \"edges\"}");
  std::vector<std::pair<int, int>> ends;
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw JsonError("edge wants [u, v]");
    ends.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Multigraph(j.at("n").get<int>(), ends);
}

inline json digraph_to_json(const Digraph& d) {
  json arcs = json::array();
  for (const Arc& a : d.arcs()) arcs.push_back({a.tail, a.head});
  return json{{"n", d.vertex_count()}, {"arcs", std::move(arcs)}};
}

inline Digraph digraph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("arcs"))
    throw JsonError("digraph wants {\"n\", \"arcs\"}");
  std::vector<std::pair<int, int>> arcs;
  for (const json& a : j.at("arcs")) {
    if (!a.is_array() || a.size() != 2) throw JsonError("arc wants [tail, head]");
    arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
  }
  return Digraph(j.at("n").get<int>(), arcs);
}

inline json field_to_json(const FieldSpec& f) {
  if (f.is_rationals()) return json{{"field", "Q"}};
  return json{{"field", "GF"}, {"p", f.modulus()}};
}

inline FieldSpec field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("field")) throw JsonError("field wants {\"field\"}");
  std::string kind = j.at("field").get<std::string>();
  if (kind == "Q") return FieldSpec::rationals();
  if (kind == "GF") {
    if (!j.contains("p")) throw JsonError("GF field wants \"p\"");
    return FieldSpec::prime(j.at("p").get<std::int64_t>());
  }
  throw JsonError("unknown field '" + kind + "'");
}

inline json orientation_to_json(const Orientation& o) {
  json tails = json::array();
  for (const Edge& e : o.base().edges()) tails.push_back(o.tail(e.id));
  return json{{"tails", std::move(tails)}};
}

inline Orientation orientation_from_json(const json& j, const Multigraph& g) {
  if (!j.is_object() || !j.contains("tails"))
    throw JsonError("orientation wants {\"tails\"}");
  const json& tails = j.at("tails");
  if (static_cast<int>(tails.size()) != g.edge_count())
    throw JsonError("orientation lists " + std::to_string(tails.size()) +
                    " tails for " + std::to_string(g.edge_count()) + " edges");
  std::vector<bool> forward(g.edge_count());
  for (const Edge& e : g.edges()) {
    int t = tails[e.id - 1].get<int>();
    if (t == e.u)
      forward[e.id - 1] = true;
    else if (t == e.v)
      forward[e.id - 1] = false;
    else
      throw JsonError("tail " + std::to_string(t) + " is not an endpoint of edge " +
                      std::to_string(e.id));
  }
  return Orientation(g, forward);
}

inline json assignment_to_json(const CorrespondenceAssignment& A) {
  json lists = json::object();
  for (int v = 1; v <= A.graph().vertex_count(); ++v) {
    json l = json::array();
    for (const FieldElement& c : A.lists().list(v)) l.push_back(value_to_json(c));
    lists[std::to_string(v)] = std::move(l);
  }
  json matchings = json::array();
  for (const Edge& e : A.graph().edges()) {
    const PartialMatching& pm = A.matching(e.id);
    json pairs = json::array();
    for (const auto& [c1, c2] : pm.pairs)
      pairs.push_back({value_to_json(c1), value_to_json(c2)});
    matchings.push_back(json{{"edge", pm.edge_id},
                             {"tail", pm.tail},
                             {"head", pm.head},
                             {"pairs", std::move(pairs)}});
  }
  return json{{"graph", graph_to_json(A.graph())},
              {"field", field_to_json(A.field())},
              {"lists", std::move(lists)},
              {"matchings", std::move(matchings)}};
}

inline CorrespondenceAssignment assignment_from_json(const json& j) {
  if (!j.is_object() || !j.contains("graph") || !j.contains("field"))
    throw JsonError("assignment wants {\"graph\", \"field\", \"lists\", \"matchings\"}");
  Multigraph g = graph_from_json(j.at("graph"));
  FieldSpec spec = field_from_json(j.at("field"));
  std::vector<std::vector<FieldElement>> lists(g.vertex_count() + 1);
  if (j.contains("lists")) {
    for (const auto& [key, arr] : j.at("lists").items()) {
      int v = 0;
      try {
        v = std::stoi(key);
      } catch (const std::exception&) {
        throw JsonError("list key '" + key + "' is not a vertex id");
      }
      if (v < 1 || v > g.vertex_count())
        throw JsonError("list key '" + key + "' is out of range");
      for (const json& c : arr) lists[v].push_back(value_from_json(c));
    }
  }
  std::vector<PartialMatching> matchings;
  if (j.contains("matchings")) {
    for (const json& mj : j.at("matchings")) {
      PartialMatching pm;
      pm.edge_id = mj.at("edge").get<int>();
      pm.tail = mj.at("tail").get<int>();
      pm.head = mj.at("head").get<int>();
      if (mj.contains("pairs"))
        for (const json& pj : mj.at("pairs")) {
          if (!pj.is_array() || pj.size() != 2) throw JsonError("pair wants [c1, c2]");
          pm.pairs.emplace_back(value_from_json(pj[0]), value_from_json(pj[1]));
        }
      matchings.push_back(std::move(pm));
    }
  }
  return CorrespondenceAssignment(std::move(g), spec,
                                  ListAssignment(spec, std::move(lists)),
                                  std::move(matchings));
}

inline json coloring_to_json(const Coloring& f) {
  json out = json::object();
  for (const auto& [v, c] : f) out[std::to_string(v)] = value_to_json(c);
  return out;
}

inline Coloring coloring_from_json(const json& j) {
  Coloring f;
  for (const auto& [key, c] : j.items()) f[std::stoi(key)] = value_from_json(c);
  return f;
}

// ---- classification / covers / sign data -----------------------------------

inline json edge_classification_to_json(const EdgeClassification& ec) {
  json out{{"class", to_string(ec.tag)}};
  if (ec.tag != EdgeClass::Irregular) {
    out["phi"] = value_to_json(ec.phi);
    out["a"] = value_to_json(ec.a);
  }
  return out;
}

inline json sign_entry_to_json(const SignEntry& se) {
  return json{{"sigma", se.sigma},
              {"phi", value_to_json(se.phi)},
              {"phi_plus", value_to_json(se.phi_plus)},
              {"a", value_to_json(se.a)}};
}

inline json sign_data_to_json(const SignData& S) {
  json entries = json::array();
  for (std::size_t id = 1; id < S.entries.size(); ++id) {
    json e = sign_entry_to_json(S.entries[id]);
    e["edge"] = static_cast<int>(id);
    entries.push_back(std::move(e));
  }
  return json{{"orientation", orientation_to_json(S.orientation)},
              {"entries", std::move(entries)}};
}

inline SignData sign_data_from_json(const json& j, const FieldSpec& spec,
                                    const Multigraph& g) {
  SignData S{spec, orientation_from_json(j.at("orientation"), g),
             std::vector<SignEntry>(g.edge_count() + 1)};
  for (const json& ej : j.at("entries")) {
    int id = ej.at("edge").get<int>();
    g.edge(id);
    SignEntry se;
    se.sigma = ej.at("sigma").get<int>();
    se.phi = value_from_json(ej.at("phi"));
    se.phi_plus = value_from_json(ej.at("phi_plus"));
    se.a = value_from_json(ej.at("a"));
    S.entries[id] = se;
  }
  return S;
}

inline json classification_to_json(const AssignmentClassification& ac) {
  json edges = json::array();
  for (std::size_t id = 1; id < ac.per_edge.size(); ++id) {
    json e = edge_classification_to_json(ac.per_edge[id]);
    e["edge"] = static_cast<int>(id);
    edges.push_back(std::move(e));
  }
  json out{{"class", to_string(ac.cls)}, {"edges", std::move(edges)}};
  if (ac.sign_data) out["sign_data"] = sign_data_to_json(*ac.sign_data);
  if (!ac.irregular_edges.empty()) out["irregular_edges"] = ac.irregular_edges;
  return out;
}

inline json cover_to_json(const MatchingCover& cover) {
  json parts = json::array();
  for (const CoverPart& p : cover.parts) {
    json pairs = json::array();
    for (const auto& [c1, c2] : p.pairs)
      pairs.push_back({value_to_json(c1), value_to_json(c2)});
    parts.push_back(json{{"pairs", std::move(pairs)},
                         {"witness", edge_classification_to_json(p.witness)}});
  }
  return json{{"mode", std::string(1, to_char(cover.mode))},
              {"k", cover.k()},
              {"parts", std::move(parts)}};
}

inline json lift_to_json(const LiftResult& lr) {
  json prov = json::array();
  for (std::size_t i = 0; i < lr.provenance.size(); ++i)
    prov.push_back(json{{"edge", static_cast<int>(i) + 1},
                        {"from", lr.provenance[i].first},
                        {"part", lr.provenance[i].second}});
  json out = assignment_to_json(lr.assignment);
  out["provenance"] = std::move(prov);
  return out;
}

// ---- aux digraphs / euler / polynomials -------------------------------------

inline json aux_to_json(const AuxDigraph& aux) {
  json verts = json::array();
  const auto& vs = aux.vertices();
  for (std::size_t v = 1; v < vs.size(); ++v) {
    json vj{{"id", static_cast<int>(v)}, {"label", vs[v].label()}};
    verts.push_back(std::move(vj));
  }
  json arcs = json::array();
  for (const Arc& a : aux.digraph().arcs()) arcs.push_back({a.id, a.tail, a.head});
  json out{{"kind", aux.kind() == AuxKind::Sigma ? "sigma" : "sigmaphi"},
           {"n", aux.digraph().vertex_count()},
           {"originals", aux.original_count()},
           {"vertices", std::move(verts)},
           {"arcs", std::move(arcs)}};
  if (aux.kind() == AuxKind::SigmaPhi) {
    json gp = json::object();
    for (const Edge& e : aux.origin().base().edges()) {
      json paths = json::array();
      for (const GammaPath& p : aux.gamma_paths(e.id)) paths.push_back(p.arcs);
      gp[std::to_string(e.id)] = std::move(paths);
    }
    out["gamma_paths"] = std::move(gp);
  }
  return out;
}

inline json eulerian_count_to_json(const EulerianCount& c) {
  return json{{"even", integer_to_json(c.even)}, {"odd", integer_to_json(c.odd)}};
}

inline json eulerian_difference_to_json(const EulerianDifference& d) {
  return json{{"even", integer_to_json(d.counts.even)},
              {"odd", integer_to_json(d.counts.odd)},
              {"difference", integer_to_json(d.difference)},
              {"residue", value_to_json(d.residue)},
              {"is_zero", d.is_zero}};
}

inline json monomial_to_json(const Monomial& m) { return json(m.exps); }

inline json polynomial_to_json(const SparsePolynomial& p) {
  json terms = json::array();
  for (const auto& [exps, coef] : p.terms())
    terms.push_back(json{{"exp", exps}, {"coef", value_to_json(coef)}});
  return json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

inline json identity_report_to_json(const IdentityReport& r) {
  return json{{"monomial", monomial_to_json(r.target)},
              {"coefficient", value_to_json(r.coefficient_raw)},
              {"coefficient_in_field", value_to_json(r.coefficient)},
              {"even", integer_to_json(r.counts.even)},
              {"odd", integer_to_json(r.counts.odd)},
              {"difference", integer_to_json(r.difference)},
              {"equal_exact", r.equal_exact},
              {"equal_in_field", r.equal_in_field}};
}

inline json solve_result_to_json(const SolveResult& r) {
  json out{{"status", to_string(r.status)}, {"decisions", r.decisions}};
  if (r.status == SolveStatus::Found) out["coloring"] = coloring_to_json(r.coloring);
  return out;
}

}  // namespace dporient
