#pragma once
// Correspondence assignments (L, C): a list of allowed colors per vertex and
// a partial matching of colors across each edge. A coloring picks one color
// per list and must avoid every matched pair.
//
// Matchings are classified by the strongest algebraic form c1 = phi*c2 + a
// they fit when the edge is read tail -> head:
//
//   straight  phi = 1, a = 0          (c1 = c2)
//   good      phi = 1                 (constant difference)
//   signable  phi = -1                (constant sum; sigma = -1)
//   zsignable phi in <1> \ {0}        (integer slope over Q; anything over GF(p))
//   general   phi in F \ {0}
//   irregular no single (phi, a) fits
//
// With two or more pairs phi is forced by any two of them, so classification
// is exact. SignData packages per-edge (sigma, phi_plus, a) witnesses against
// a fixed orientation; reversing edges maps phi to 1/phi and a to -a/phi.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dporient/field.hpp"
#include "dporient/graph.hpp"

namespace dporient {

using ColorPair = std::pair<FieldElement, FieldElement>;

class ListAssignment {
 public:
  ListAssignment() = default;

  // lists[v] for v in 1..n; lists[0] ignored. Entries must be canonical field
  // elements and distinct within each list.
  ListAssignment(const FieldSpec& spec, std::vector<std::vector<FieldElement>> lists)
      : lists_(std::move(lists)) {
    if (lists_.empty()) lists_.emplace_back();
    for (std::size_t v = 1; v < lists_.size(); ++v) {
      const auto& l = lists_[v];
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (!spec.is_element(l[i]))
          throw FieldError("list entry " + to_string(l[i]) + " at vertex " +
                           std::to_string(v) + " is not canonical over " + spec.describe());
        for (std::size_t j = i + 1; j < l.size(); ++j)
          if (l[i] == l[j])
            throw FieldError("duplicate list entry " + to_string(l[i]) +
                             " at vertex " + std::to_string(v));
      }
    }
  }

  int vertex_count() const { return static_cast<int>(lists_.size()) - 1; }

  const std::vector<FieldElement>& list(int v) const {
    if (v < 1 || v >= static_cast<int>(lists_.size()))
      throw GraphError("no list for vertex " + std::to_string(v));
    return lists_[v];
  }

  int list_size(int v) const { return static_cast<int>(list(v).size()); }

  bool contains(int v, const FieldElement& c) const {
    for (const FieldElement& x : list(v))
      if (x == c) return true;
    return false;
  }

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  std::vector<std::vector<FieldElement>> lists_;
};

// Pairs are stored read tail -> head: (c1 in L(tail), c2 in L(head)).
struct PartialMatching {
  int edge_id = 0;
  int tail = 0;
  int head = 0;
  std::vector<ColorPair> pairs;
  friend bool operator==(const PartialMatching&, const PartialMatching&) = default;
};

class CorrespondenceAssignment {
 public:
  CorrespondenceAssignment() = default;

  CorrespondenceAssignment(Multigraph g, FieldSpec spec, ListAssignment lists,
                           std::vector<PartialMatching> matchings)
      : graph_(std::move(g)), spec_(spec), lists_(std::move(lists)) {
    if (lists_.vertex_count() != graph_.vertex_count())
      throw GraphError("list assignment covers " + std::to_string(lists_.vertex_count()) +
                       " vertices, graph has " + std::to_string(graph_.vertex_count()));
    matchings_.assign(graph_.edge_count() + 1, PartialMatching{});
    std::vector<bool> seen(graph_.edge_count() + 1, false);
    for (PartialMatching& pm : matchings) {
      const Edge& e = graph_.edge(pm.edge_id);
      if (seen[pm.edge_id])
        throw GraphError("duplicate matching for edge " + std::to_string(pm.edge_id));
      seen[pm.edge_id] = true;
      bool straight_ends = pm.tail == e.u && pm.head == e.v;
      bool swapped_ends = pm.tail == e.v && pm.head == e.u;
      if (!straight_ends && !swapped_ends)
        throw GraphError("matching for edge " + std::to_string(pm.edge_id) +
                         " names endpoints " + std::to_string(pm.tail) + "," +
                         std::to_string(pm.head) + " but the edge joins " +
                         std::to_string(e.u) + "," + std::to_string(e.v));
      validate_pairs(pm);
      matchings_[pm.edge_id] = std::move(pm);
    }
    // Edges without a record get an empty matching read u -> v.
    for (const Edge& e : graph_.edges())
      if (!seen[e.id]) matchings_[e.id] = PartialMatching{e.id, e.u, e.v, {}};
  }

  const Multigraph& graph() const { return graph_; }
  const FieldSpec& field() const { return spec_; }
  const ListAssignment& lists() const { return lists_; }

  const PartialMatching& matching(int edge_id) const {
    graph_.edge(edge_id);
    return matchings_[edge_id];
  }

  const std::vector<PartialMatching>& matchings() const { return matchings_; }

  // The pair list read with the given endpoint as tail.
  std::vector<ColorPair> pairs_oriented(int edge_id, int tail) const {
    const PartialMatching& pm = matching(edge_id);
    if (tail == pm.tail) return pm.pairs;
    if (tail != pm.head)
      throw GraphError("vertex " + std::to_string(tail) + " is not an endpoint of edge " +
                       std::to_string(edge_id));
    std::vector<ColorPair> swapped;
    swapped.reserve(pm.pairs.size());
    for (const auto& [c1, c2] : pm.pairs) swapped.emplace_back(c2, c1);
    return swapped;
  }

  friend bool operator==(const CorrespondenceAssignment&, const CorrespondenceAssignment&) = default;

 private:
  void validate_pairs(const PartialMatching& pm) const {
    const auto& pairs = pm.pairs;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto& [c1, c2] = pairs[i];
      if (!lists_.contains(pm.tail, c1))
        throw FieldError("edge " + std::to_string(pm.edge_id) + ": color " + to_string(c1) +
                         " not in the list of vertex " + std::to_string(pm.tail));
      if (!lists_.contains(pm.head, c2))
        throw FieldError("edge " + std::to_string(pm.edge_id) + ": color " + to_string(c2) +
                         " not in the list of vertex " + std::to_string(pm.head));
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        if (pairs[j].first == c1)
          throw FieldError("edge " + std::to_string(pm.edge_id) + ": color " + to_string(c1) +
                           " matched twice on the tail side");
        if (pairs[j].second == c2)
          throw FieldError("edge " + std::to_string(pm.edge_id) + ": color " + to_string(c2) +
                           " matched twice on the head side");
      }
    }
  }

  Multigraph graph_;
  FieldSpec spec_;
  ListAssignment lists_;
  std::vector<PartialMatching> matchings_;  // [0] unused
};

enum class EdgeClass {
  Straight = 0,
  Good = 1,
  Signable = 2,
  ZSignable = 3,
  GeneralSignable = 4,
  Irregular = 5,
};

inline const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::Straight: return "straight";
    case EdgeClass::Good: return "good";
    case EdgeClass::Signable: return "signable";
    case EdgeClass::ZSignable: return "zsignable";
    case EdgeClass::GeneralSignable: return "general";
    case EdgeClass::Irregular: return "irregular";
  }
  return "?";
}

inline EdgeClass weakest(EdgeClass a, EdgeClass b) { return a < b ? b : a; }

struct EdgeClassification {
  EdgeClass tag = EdgeClass::Straight;
  FieldElement phi = 1;  // meaningless when Irregular
  FieldElement a = 0;

  int sigma(const FieldSpec& spec) const {
    if (tag == EdgeClass::Irregular)
      throw FieldError("irregular matchings have no sigma");
    if (spec.is_rationals()) return phi < 0 ? -1 : 1;
    return tag == EdgeClass::Signable ? -1 : 1;
  }

  // Whether every pair satisfies c1 - phi*c2 = a.
  bool verify(const FieldSpec& spec, const std::vector<ColorPair>& pairs) const {
    if (tag == EdgeClass::Irregular) return false;
    for (const auto& [c1, c2] : pairs)
      if (spec.sub(c1, spec.mul(phi, c2)) != a) return false;
    return true;
  }
};

// Classifies a pair list read tail -> head. With >= 2 pairs the slope is
// forced by the first two (head colors are distinct by the matching
// property), so the most specific class is exact.
inline EdgeClassification classify_pairs(const FieldSpec& spec,
                                         const std::vector<ColorPair>& pairs) {
  EdgeClassification ec;
  if (pairs.empty()) return ec;  // straight, phi=1, a=0

  bool all_equal = true;
  for (const auto& [c1, c2] : pairs)
    if (c1 != c2) {
      all_equal = false;
      break;
    }
  if (all_equal) return ec;

  if (pairs.size() == 1) {
    ec.tag = EdgeClass::Good;
    ec.a = spec.sub(pairs[0].first, pairs[0].second);
    return ec;
  }

  const auto& [p1, q1] = pairs[0];
  const auto& [p2, q2] = pairs[1];
  FieldElement phi = spec.div(spec.sub(p1, p2), spec.sub(q1, q2));
  if (phi == 0) {
    // a forced zero slope admits no sign witness
    ec.tag = EdgeClass::Irregular;
    ec.phi = 0;
    ec.a = 0;
    return ec;
  }
  FieldElement a = spec.sub(p1, spec.mul(phi, q1));
  for (const auto& [c1, c2] : pairs) {
    if (spec.sub(c1, spec.mul(phi, c2)) != a) {
      ec.tag = EdgeClass::Irregular;
      ec.phi = 0;
      ec.a = 0;
      return ec;
    }
  }
  ec.phi = phi;
  ec.a = a;
  FieldElement minus_one = spec.is_rationals() ? FieldElement(-1)
                                               : FieldElement(Integer(spec.modulus() - 1));
  if (phi == FieldElement(1))
    ec.tag = EdgeClass::Good;  // a != 0 here, straight was handled above
  else if (phi == minus_one)
    ec.tag = EdgeClass::Signable;
  else if (spec.in_unit_subgroup(phi))
    ec.tag = EdgeClass::ZSignable;
  else
    ec.tag = EdgeClass::GeneralSignable;
  return ec;
}

inline EdgeClassification classify_edge(const CorrespondenceAssignment& A, int edge_id,
                                        int tail) {
  return classify_pairs(A.field(), A.pairs_oriented(edge_id, tail));
}

// Per-edge sign witness against a fixed orientation: phi = sigma * phi_plus
// and c1 - phi*c2 = a for every matched pair read tail -> head.
struct SignEntry {
  int sigma = 1;
  FieldElement phi = 1;
  FieldElement phi_plus = 1;  // positive over Q; representative in [1,p) over GF(p)
  FieldElement a = 0;

  bool unit_phi(const FieldSpec& spec) const { return spec.in_unit_subgroup(phi); }

  // phi_plus as an arc multiplicity; integral and positive or raises.
  Integer multiplicity() const {
    if (!is_integral(phi_plus) || numerator(phi_plus) < 1)
      throw FieldError("phi_plus " + to_string(phi_plus) +
                       " is not a positive integer multiplicity");
    return numerator(phi_plus);
  }

  friend bool operator==(const SignEntry&, const SignEntry&) = default;
};

struct SignData {
  FieldSpec spec;
  Orientation orientation;
  std::vector<SignEntry> entries;  // [0] unused, indexed by edge id

  const SignEntry& entry(int edge_id) const {
    if (edge_id < 1 || edge_id >= static_cast<int>(entries.size()))
      throw GraphError("no sign entry for edge " + std::to_string(edge_id));
    return entries[edge_id];
  }
};

inline SignEntry make_sign_entry(const FieldSpec& spec, const FieldElement& phi,
                                 const FieldElement& a,
                                 std::optional<int> sigma_choice = {}) {
  if (phi == 0) throw FieldError("sign entry with zero phi");
  SignEntry se;
  se.phi = phi;
  se.a = a;
  if (spec.in_unit_subgroup(phi)) {
    auto f = spec.positive_factorization(phi, sigma_choice);
    se.sigma = f.sigma;
    se.phi_plus = FieldElement(f.phi_plus);
  } else {
    // Q only: phi is a non-integer rational, sign is forced.
    se.sigma = phi < 0 ? -1 : 1;
    se.phi_plus = phi < 0 ? FieldElement(-phi) : phi;
    if (sigma_choice && *sigma_choice != se.sigma)
      throw FieldError("sigma override contradicts the sign of " + to_string(phi));
  }
  return se;
}

struct AssignmentClassification {
  EdgeClass cls = EdgeClass::Straight;
  std::vector<EdgeClassification> per_edge;  // [0] unused, w.r.t. the orientation
  std::optional<SignData> sign_data;         // present unless some edge is irregular
  std::vector<int> irregular_edges;
};

// Classifies every edge read along D and aggregates to the weakest class.
// sigma_overrides (edge id -> +-1) force the sign choice per edge where the
// field admits one (GF(p)); over Q a contradictory override raises.
inline AssignmentClassification classify_assignment(
    const CorrespondenceAssignment& A, const Orientation& D,
    const std::map<int, int>& sigma_overrides = {}) {
  if (D.base() != A.graph()) throw GraphError("orientation is over a different graph");
  const FieldSpec& spec = A.field();
  AssignmentClassification out;
  out.per_edge.resize(A.graph().edge_count() + 1);
  SignData sd{spec, D, std::vector<SignEntry>(A.graph().edge_count() + 1)};
  bool regular = true;
  for (const Edge& e : A.graph().edges()) {
    EdgeClassification ec = classify_edge(A, e.id, D.tail(e.id));
    out.per_edge[e.id] = ec;
    out.cls = weakest(out.cls, ec.tag);
    if (ec.tag == EdgeClass::Irregular) {
      regular = false;
      out.irregular_edges.push_back(e.id);
    } else if (regular) {
      std::optional<int> ov;
      if (auto it = sigma_overrides.find(e.id); it != sigma_overrides.end()) ov = it->second;
      sd.entries[e.id] = make_sign_entry(spec, ec.phi, ec.a, ov);
    }
  }
  if (regular) out.sign_data = std::move(sd);
  return out;
}

// Rewrites S for the orientation with the given edges reversed:
// phi -> 1/phi, a -> -a/phi. Each edge's sigma is kept and phi_plus is
// recomputed as the canonical representative of sigma * phi, which makes the
// transform an involution on any fixed edge set.
inline SignData reverse_sign_data(const SignData& S, const std::vector<int>& edge_ids) {
  SignData out{S.spec, S.orientation.reversed(edge_ids), S.entries};
  std::vector<bool> flip(S.entries.size(), false);
  for (int id : edge_ids) {
    S.orientation.base().edge(id);
    flip[id] = true;
  }
  for (std::size_t id = 1; id < out.entries.size(); ++id) {
    if (!flip[id]) continue;
    const SignEntry& old = S.entries[id];
    FieldElement phi_hat = S.spec.inv(old.phi);
    FieldElement a_hat = S.spec.neg(S.spec.mul(phi_hat, old.a));
    if (S.spec.in_unit_subgroup(phi_hat))
      out.entries[id] = make_sign_entry(S.spec, phi_hat, a_hat, old.sigma);
    else
      out.entries[id] = make_sign_entry(S.spec, phi_hat, a_hat);
  }
  return out;
}

// Checks S against the matchings of A: same graph, phi = sigma*phi_plus != 0,
// and c1 - phi*c2 = a for every pair read along S.orientation.
inline bool verify_sign_data(const CorrespondenceAssignment& A, const SignData& S) {
  if (S.orientation.base() != A.graph()) return false;
  if (static_cast<int>(S.entries.size()) != A.graph().edge_count() + 1) return false;
  const FieldSpec& spec = A.field();
  for (const Edge& e : A.graph().edges()) {
    const SignEntry& se = S.entries[e.id];
    if (se.phi == 0 || se.phi_plus <= 0) return false;
    if (spec.is_prime_field() && !is_integral(se.phi_plus)) return false;
    if ((se.sigma != 1 && se.sigma != -1) ||
        spec.canonical(FieldElement(se.sigma) * se.phi_plus) != se.phi)
      return false;
    for (const auto& [c1, c2] : A.pairs_oriented(e.id, S.orientation.tail(e.id)))
      if (spec.sub(c1, spec.mul(se.phi, c2)) != se.a) return false;
  }
  return true;
}

// Applies per-vertex color renamings h[v] : L(v) -> L'(v). Vertices absent
// from h keep their lists; a present map must cover the whole list and be
// injective. Lists and matched pairs are rewritten in place.
inline CorrespondenceAssignment apply_renaming(
    const CorrespondenceAssignment& A,
    const std::map<int, std::map<FieldElement, FieldElement>>& h) {
  const FieldSpec& spec = A.field();
  int n = A.graph().vertex_count();
  for (const auto& [v, hv] : h) {
    if (v < 1 || v > n) throw GraphError("renaming names vertex " + std::to_string(v));
    (void)hv;
  }
  auto rename = [&](int v, const FieldElement& c) -> FieldElement {
    auto it = h.find(v);
    if (it == h.end()) return c;
    auto jt = it->second.find(c);
    if (jt == it->second.end())
      throw FieldError("renaming at vertex " + std::to_string(v) + " is undefined on " +
                       to_string(c));
    return jt->second;
  };
  std::vector<std::vector<FieldElement>> lists(n + 1);
  for (int v = 1; v <= n; ++v) {
    for (const FieldElement& c : A.lists().list(v)) lists[v].push_back(rename(v, c));
  }
  std::vector<PartialMatching> matchings;
  for (const Edge& e : A.graph().edges()) {
    PartialMatching pm = A.matching(e.id);
    for (auto& [c1, c2] : pm.pairs) {
      c1 = rename(pm.tail, c1);
      c2 = rename(pm.head, c2);
    }
    matchings.push_back(std::move(pm));
  }
  // The constructor re-validates distinctness (so injectivity) and membership.
  return CorrespondenceAssignment(A.graph(), spec, ListAssignment(spec, std::move(lists)),
                                  std::move(matchings));
}

}  // namespace dporient
