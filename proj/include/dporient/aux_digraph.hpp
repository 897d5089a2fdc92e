#pragma once
// Auxiliary digraphs over an orientation D:
//
//   D_sigma      keeps sigma = +1 arcs and replaces each sigma = -1 arc
//                v -> w by a directed path v -> mid -> w.
//
//   D_sigma_phi  replaces every arc v -> w by a gadget with entry vertex t
//                ("tail") and exit vertex h ("head"):
//                  sigma = +1: arc v->t, phi_plus parallel arcs t->h, arc h->w
//                              (2 + phi_plus arcs, gamma-paths of length 3)
//                  sigma = -1: arc v->t, internals x_1..x_{phi_plus} with
//                              arcs t->x_i and x_i->h, arc h->w
//                              (2 + 2*phi_plus arcs, gamma-paths of length 4)
//
// The i-th gamma-path of an edge is its full v->w route through the i-th
// middle. Any spanning Eulerian subdigraph selects, per gadget, either
// nothing or exactly one full gamma-path (the entry arc admits at most one
// continuation), which check_eulerian_structure verifies and decomposes.
//
// Vertex ids: originals 1..n first, then gadget vertices in edge-id order,
// tail before internals before head. Arc ids sequential in the same order.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "dporient/correspondence.hpp"
#include "dporient/graph.hpp"

namespace dporient {

enum class AuxTag { Original, Tail, Head, Internal, Mid };

struct AuxVertex {
  AuxTag tag = AuxTag::Original;
  int vertex = 0;  // original vertex id when tag == Original
  int edge = 0;    // owning edge id for gadget vertices
  int index = 0;   // 1-based internal index when tag == Internal

  // v3 / t5 / h5 / x5_2 / m5
  std::string label() const {
    switch (tag) {
      case AuxTag::Original: return "v" + std::to_string(vertex);
      case AuxTag::Tail: return "t" + std::to_string(edge);
      case AuxTag::Head: return "h" + std::to_string(edge);
      case AuxTag::Internal:
        return "x" + std::to_string(edge) + "_" + std::to_string(index);
      case AuxTag::Mid: return "m" + std::to_string(edge);
    }
    return "?";
  }
};

enum class AuxKind { Sigma, SigmaPhi };

struct GammaPath {
  int edge = 0;
  int index = 0;           // 1-based middle index
  std::vector<int> arcs;   // arc ids along the path
};

class AuxDigraph {
 public:
  AuxKind kind() const { return kind_; }
  const Digraph& digraph() const { return digraph_; }
  const Orientation& origin() const { return origin_; }
  int original_count() const { return origin_.base().vertex_count(); }
  const std::vector<AuxVertex>& vertices() const { return vertices_; }  // [0] unused

  const std::vector<GammaPath>& gamma_paths(int edge_id) const {
    if (kind_ != AuxKind::SigmaPhi)
      throw GraphError("gamma paths exist only in the sigma-phi digraph");
    origin_.base().edge(edge_id);
    return gamma_[edge_id];
  }

  friend AuxDigraph build_d_sigma(const Orientation&, const std::vector<int>&);
  friend AuxDigraph build_d_sigma_phi(const Orientation&, const SignData&);

 private:
  AuxKind kind_ = AuxKind::Sigma;
  Digraph digraph_;
  Orientation origin_;
  std::vector<AuxVertex> vertices_;
  std::vector<std::vector<GammaPath>> gamma_;  // [0] unused, per edge id
};

// sigma[edge_id] must be +1 or -1. All-good data (every sigma = +1) yields a
// digraph structurally equal to D.to_digraph(), ids included.
inline AuxDigraph build_d_sigma(const Orientation& D, const std::vector<int>& sigma) {
  const Multigraph& g = D.base();
  if (static_cast<int>(sigma.size()) != g.edge_count() + 1)
    throw GraphError("sigma vector must have one entry per edge (1-indexed)");
  AuxDigraph aux;
  aux.kind_ = AuxKind::Sigma;
  aux.origin_ = D;
  aux.vertices_.resize(g.vertex_count() + 1);
  for (int v = 1; v <= g.vertex_count(); ++v)
    aux.vertices_[v] = AuxVertex{AuxTag::Original, v, 0, 0};
  std::vector<std::pair<int, int>> arcs;
  for (const Edge& e : g.edges()) {
    if (sigma[e.id] == 1) {
      arcs.emplace_back(D.tail(e.id), D.head(e.id));
    } else if (sigma[e.id] == -1) {
      int mid = static_cast<int>(aux.vertices_.size());
      aux.vertices_.push_back(AuxVertex{AuxTag::Mid, 0, e.id, 0});
      arcs.emplace_back(D.tail(e.id), mid);
      arcs.emplace_back(mid, D.head(e.id));
    } else {
      throw GraphError("sigma for edge " + std::to_string(e.id) + " must be +1 or -1");
    }
  }
  aux.digraph_ = Digraph(static_cast<int>(aux.vertices_.size()) - 1, arcs);
  return aux;
}

// Builds the gadget digraph for D with the sign data S (which must sit on D).
// Every phi_plus must be a positive integer multiplicity.
inline AuxDigraph build_d_sigma_phi(const Orientation& D, const SignData& S) {
  if (!(S.orientation == D))
    throw GraphError("sign data was taken along a different orientation");
  const Multigraph& g = D.base();
  if (static_cast<int>(S.entries.size()) != g.edge_count() + 1)
    throw GraphError("sign data must have one entry per edge");

  AuxDigraph aux;
  aux.kind_ = AuxKind::SigmaPhi;
  aux.origin_ = D;
  aux.vertices_.resize(g.vertex_count() + 1);
  for (int v = 1; v <= g.vertex_count(); ++v)
    aux.vertices_[v] = AuxVertex{AuxTag::Original, v, 0, 0};
  aux.gamma_.resize(g.edge_count() + 1);

  std::vector<std::pair<int, int>> arcs;
  auto add_arc = [&](int t, int h) {
    arcs.emplace_back(t, h);
    return static_cast<int>(arcs.size());
  };

  for (const Edge& e : g.edges()) {
    const SignEntry& se = S.entry(e.id);
    Integer mult = se.multiplicity();
    if (mult > 1024)
      throw CapExceeded("phi_plus " + to_string(mult) + " on edge " +
                        std::to_string(e.id) + " exceeds the gadget size guard");
    int k = static_cast<int>(mult);
    int v = D.tail(e.id), w = D.head(e.id);
    int t = static_cast<int>(aux.vertices_.size());
    aux.vertices_.push_back(AuxVertex{AuxTag::Tail, 0, e.id, 0});
    std::vector<int> internals;
    if (se.sigma == -1) {
      for (int i = 1; i <= k; ++i) {
        internals.push_back(static_cast<int>(aux.vertices_.size()));
        aux.vertices_.push_back(AuxVertex{AuxTag::Internal, 0, e.id, i});
      }
    }
    int h = static_cast<int>(aux.vertices_.size());
    aux.vertices_.push_back(AuxVertex{AuxTag::Head, 0, e.id, 0});

    int entry = add_arc(v, t);
    std::vector<GammaPath>& paths = aux.gamma_[e.id];
    if (se.sigma == 1) {
      for (int i = 1; i <= k; ++i) {
        int mid = add_arc(t, h);
        paths.push_back(GammaPath{e.id, i, {entry, mid, 0}});
      }
    } else {
      for (int i = 1; i <= k; ++i) {
        int into = add_arc(t, internals[i - 1]);
        int outof = add_arc(internals[i - 1], h);
        paths.push_back(GammaPath{e.id, i, {entry, into, outof, 0}});
      }
    }
    int exit = add_arc(h, w);
    for (GammaPath& p : paths) p.arcs.back() = exit;
  }
  aux.digraph_ = Digraph(static_cast<int>(aux.vertices_.size()) - 1, arcs);
  return aux;
}

struct EulerianStructure {
  bool eulerian = false;
  std::vector<GammaPath> decomposition;  // one entry per gadget that fires
  std::string violation;                 // empty when eulerian
};

// Structural test for "arc_selected is a spanning Eulerian subdigraph" of a
// sigma-phi digraph: balance at every original vertex plus, per gadget,
// either no arc or exactly the arcs of one gamma-path. Equivalent to
// in-degree = out-degree everywhere, and additionally returns the gamma-path
// decomposition.
inline EulerianStructure check_eulerian_structure(const AuxDigraph& aux,
                                                  const std::vector<bool>& arc_selected) {
  if (aux.kind() != AuxKind::SigmaPhi)
    throw GraphError("structural check applies to the sigma-phi digraph");
  const Digraph& d = aux.digraph();
  if (static_cast<int>(arc_selected.size()) != d.arc_count())
    throw GraphError("selection size mismatch");

  EulerianStructure res;
  std::vector<int> balance(d.vertex_count() + 1, 0);
  for (const Arc& a : d.arcs()) {
    if (!arc_selected[a.id - 1]) continue;
    ++balance[a.tail];
    --balance[a.head];
  }
  for (int v = 1; v <= aux.original_count(); ++v) {
    if (balance[v] != 0) {
      res.violation = "vertex " + std::to_string(v) + " is unbalanced";
      return res;
    }
  }
  int m = aux.origin().base().edge_count();
  for (int e = 1; e <= m; ++e) {
    const auto& paths = aux.gamma_paths(e);
    // Arcs of the gadget = union of its gamma-path arcs.
    std::vector<int> selected;
    for (const GammaPath& p : paths)
      for (int arc : p.arcs)
        if (arc_selected[arc - 1]) selected.push_back(arc);
    std::sort(selected.begin(), selected.end());
    selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
    if (selected.empty()) continue;
    const GammaPath* hit = nullptr;
    for (const GammaPath& p : paths) {
      std::vector<int> sorted = p.arcs;
      std::sort(sorted.begin(), sorted.end());
      if (sorted == selected) {
        hit = &p;
        break;
      }
    }
    if (!hit) {
      res.violation = "edge " + std::to_string(e) + " gadget is not a single gamma-path";
      return res;
    }
    res.decomposition.push_back(*hit);
  }
  res.eulerian = true;
  return res;
}

}  // namespace dporient
