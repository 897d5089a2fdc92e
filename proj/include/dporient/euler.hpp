#pragma once
// Exact counts of spanning Eulerian subdigraphs (arc subsets with in-degree
// equal to out-degree at every vertex; the empty set counts and is even), and
// the coefficient identity tying them to orientation products:
//
//   [M_D] prod_(v->w) (x_v - sigma(e) phi_plus(e) x_w)  =  EE - EO
//
// evaluated on the sigma-phi auxiliary digraph. Over GF(p) the identity is
// checked with integer representatives and holds modulo p.
//
// Counting is exact backtracking over arcs, most-constrained vertices first,
// pruning a branch as soon as some vertex's imbalance exceeds its remaining
// undecided arcs. Counts are arbitrary-precision.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dporient/aux_digraph.hpp"
#include "dporient/caps.hpp"
#include "dporient/field.hpp"
#include "dporient/graph.hpp"
#include "dporient/polynomial.hpp"

namespace dporient {

struct EulerianCount {
  Integer even = 0;
  Integer odd = 0;
  friend bool operator==(const EulerianCount&, const EulerianCount&) = default;
};

inline EulerianCount count_eulerian(const Digraph& d, int arc_cap = 30) {
  int m = d.arc_count();
  if (m > arc_cap)
    throw CapExceeded("eulerian count over " + std::to_string(m) +
                      " arcs exceeds cap " + std::to_string(arc_cap));
  int n = d.vertex_count();

  // Decide arcs grouped around low-degree vertices first so balance
  // constraints close early.
  std::vector<int> degree(n + 1, 0);
  for (const Arc& a : d.arcs()) {
    ++degree[a.tail];
    ++degree[a.head];
  }
  std::vector<int> rank(n + 1, 0);
  {
    std::vector<int> verts;
    for (int v = 1; v <= n; ++v) verts.push_back(v);
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
      if (degree[a] != degree[b]) return degree[a] < degree[b];
      return a < b;
    });
    for (int i = 0; i < n; ++i) rank[verts[i]] = i;
  }
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i + 1;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int ra = std::min(rank[d.arc(a).tail], rank[d.arc(a).head]);
    int rb = std::min(rank[d.arc(b).tail], rank[d.arc(b).head]);
    if (ra != rb) return ra < rb;
    return a < b;
  });

  std::vector<int> balance(n + 1, 0), remaining(n + 1, 0);
  for (const Arc& a : d.arcs()) {
    ++remaining[a.tail];
    ++remaining[a.head];
  }

  EulerianCount counts;
  auto feasible = [&](int v) { return std::abs(balance[v]) <= remaining[v]; };

  std::function<void(int, int)> go = [&](int idx, int parity) {
    if (idx == m) {
      (parity ? counts.odd : counts.even) += 1;
      return;
    }
    const Arc& a = d.arc(order[idx]);
    --remaining[a.tail];
    --remaining[a.head];
    // Exclude the arc.
    if (feasible(a.tail) && feasible(a.head)) go(idx + 1, parity);
    // Include the arc.
    ++balance[a.tail];
    --balance[a.head];
    if (feasible(a.tail) && feasible(a.head)) go(idx + 1, parity ^ 1);
    --balance[a.tail];
    ++balance[a.head];
    ++remaining[a.tail];
    ++remaining[a.head];
  };
  go(0, 0);
  return counts;
}

struct EulerianDifference {
  EulerianCount counts;
  Integer difference = 0;   // EE - EO
  FieldElement residue = 0; // reduced into the field
  bool is_zero = true;
};

inline EulerianDifference eulerian_difference(const Digraph& d, const FieldSpec& spec,
                                              int arc_cap = 30) {
  EulerianDifference out;
  out.counts = count_eulerian(d, arc_cap);
  out.difference = out.counts.even - out.counts.odd;
  out.residue = spec.reduce_integer(out.difference);
  out.is_zero = out.residue == 0;
  return out;
}

struct IdentityReport {
  Monomial target;
  Rational coefficient_raw;   // integer when phi_plus are multiplicities
  FieldElement coefficient;   // reduced into the field
  EulerianCount counts;
  Integer difference = 0;
  bool equal_exact = false;    // raw coefficient == EE - EO as integers
  bool equal_in_field = false; // congruent after reduction
};

// Expands the orientation product with integer representatives
// sigma(e) * phi_plus(e), extracts the M_D coefficient, counts Eulerian
// subdigraphs of the sigma-phi digraph, and reports both sides. Never
// asserts; callers compare.
inline IdentityReport verify_identity(const Orientation& D, const SignData& S,
                                      const FieldSpec& spec, const Caps& caps = Caps()) {
  const Multigraph& g = D.base();
  std::vector<Rational> phi_repr(g.edge_count() + 1, Rational(1));
  for (const Edge& e : g.edges()) {
    const SignEntry& se = S.entry(e.id);
    phi_repr[e.id] = Rational(se.sigma) * Rational(se.multiplicity());
  }
  IdentityReport rep;
  rep.target = target_monomial(D);
  SparsePolynomial p =
      expand_graph_polynomial(D, phi_repr, rep.target, caps.expand_edges);
  rep.coefficient_raw = p.coefficient_raw(rep.target);
  rep.coefficient = spec.reduce_rational(rep.coefficient_raw);

  AuxDigraph aux = build_d_sigma_phi(D, S);
  rep.counts = count_eulerian(aux.digraph(), caps.euler_arcs);
  rep.difference = rep.counts.even - rep.counts.odd;
  rep.equal_exact = rep.coefficient_raw == Rational(rep.difference);
  rep.equal_in_field =
      spec.is_zero_residue(numerator(rep.coefficient_raw - Rational(rep.difference)));
  return rep;
}

}  // namespace dporient
