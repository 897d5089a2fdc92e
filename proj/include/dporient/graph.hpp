#pragma once
// Loopless multigraphs, multidigraphs and orientations. Vertices are
// 1..n, edges and arcs carry explicit 1-based ids so parallel edges stay
// distinguishable. Orientations are a base multigraph plus a per-edge
// direction bit; arc ids of the induced digraph equal the edge ids.
//
// Also here: orientation enumeration (binary counter order), the bounded
// out-degree orientation search (augmenting paths, optionally with frozen
// edge directions), subdivision, and bipartiteness with an odd-closed-walk
// witness.

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "dporient/caps.hpp"

namespace dporient {

struct GraphError : Error {
  using Error::Error;
};

struct Edge {
  int id = 0;
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class Multigraph {
 public:
  Multigraph() = default;

  Multigraph(int n, const std::vector<std::pair<int, int>>& endpoints) : n_(n) {
    if (n < 0) throw GraphError("negative vertex count");
    edges_.reserve(endpoints.size());
    for (std::size_t i = 0; i < endpoints.size(); ++i) {
      auto [u, v] = endpoints[i];
      int id = static_cast<int>(i) + 1;
      if (u < 1 || u > n || v < 1 || v > n)
        throw GraphError("edge " + std::to_string(id) + " endpoint out of range");
      if (u == v) throw GraphError("edge " + std::to_string(id) + " is a loop");
      edges_.push_back(Edge{id, u, v});
    }
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(int id) const {
    if (id < 1 || id > edge_count())
      throw GraphError("no edge with id " + std::to_string(id));
    return edges_[id - 1];
  }

  const std::vector<Edge>& edges() const { return edges_; }

  // 1-indexed; parallel edges count with multiplicity.
  std::vector<int> degrees() const {
    std::vector<int> d(n_ + 1, 0);
    for (const Edge& e : edges_) {
      ++d[e.u];
      ++d[e.v];
    }
    return d;
  }

  // vertex -> incident edge ids, ascending.
  std::vector<std::vector<int>> incidence() const {
    std::vector<std::vector<int>> inc(n_ + 1);
    for (const Edge& e : edges_) {
      inc[e.u].push_back(e.id);
      inc[e.v].push_back(e.id);
    }
    return inc;
  }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

struct Arc {
  int id = 0;
  int tail = 0;
  int head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

class Digraph {
 public:
  Digraph() = default;

  Digraph(int n, const std::vector<std::pair<int, int>>& arcs) : n_(n) {
    if (n < 0) throw GraphError("negative vertex count");
    arcs_.reserve(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      auto [t, h] = arcs[i];
      int id = static_cast<int>(i) + 1;
      if (t < 1 || t > n || h < 1 || h > n)
        throw GraphError("arc " + std::to_string(id) + " endpoint out of range");
      if (t == h) throw GraphError("arc " + std::to_string(id) + " is a loop");
      arcs_.push_back(Arc{id, t, h});
    }
  }

  int vertex_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  const Arc& arc(int id) const {
    if (id < 1 || id > arc_count())
      throw GraphError("no arc with id " + std::to_string(id));
    return arcs_[id - 1];
  }

  const std::vector<Arc>& arcs() const { return arcs_; }

  std::vector<int> out_degrees() const {
    std::vector<int> d(n_ + 1, 0);
    for (const Arc& a : arcs_) ++d[a.tail];
    return d;
  }

  std::vector<int> in_degrees() const {
    std::vector<int> d(n_ + 1, 0);
    for (const Arc& a : arcs_) ++d[a.head];
    return d;
  }

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
};

// Forgets directions; edge i inherits arc i's endpoints.
inline Multigraph underlying_graph(const Digraph& d) {
  std::vector<std::pair<int, int>> ends;
  ends.reserve(d.arc_count());
  for (const Arc& a : d.arcs()) ends.emplace_back(a.tail, a.head);
  return Multigraph(d.vertex_count(), ends);
}

class Orientation {
 public:
  Orientation() = default;

  Orientation(Multigraph base, std::vector<bool> forward)
      : base_(std::move(base)), forward_(std::move(forward)) {
    if (static_cast<int>(forward_.size()) != base_.edge_count())
      throw GraphError("orientation size mismatch");
  }

  static Orientation all_forward(const Multigraph& g) {
    return Orientation(g, std::vector<bool>(g.edge_count(), true));
  }

  const Multigraph& base() const { return base_; }
  int edge_count() const { return base_.edge_count(); }

  // True when edge id points u -> v as constructed.
  bool forward(int id) const {
    base_.edge(id);
    return forward_[id - 1];
  }

  int tail(int id) const {
    const Edge& e = base_.edge(id);
    return forward_[id - 1] ? e.u : e.v;
  }
  int head(int id) const {
    const Edge& e = base_.edge(id);
    return forward_[id - 1] ? e.v : e.u;
  }

  Orientation reversed(const std::vector<int>& edge_ids) const {
    std::vector<bool> f = forward_;
    for (int id : edge_ids) {
      base_.edge(id);
      f[id - 1] = !f[id - 1];
    }
    return Orientation(base_, std::move(f));
  }

  // Arc ids equal edge ids.
  Digraph to_digraph() const {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(base_.edge_count());
    for (const Edge& e : base_.edges())
      arcs.emplace_back(tail(e.id), head(e.id));
    return Digraph(base_.vertex_count(), arcs);
  }

  std::vector<int> out_degrees() const {
    std::vector<int> d(base_.vertex_count() + 1, 0);
    for (const Edge& e : base_.edges()) ++d[tail(e.id)];
    return d;
  }

  const std::vector<bool>& direction_bits() const { return forward_; }

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  Multigraph base_;
  std::vector<bool> forward_;
};

// Visits all 2^m orientations in binary counter order (bit i-1 set = edge i
// reversed). fn returns false to stop early. Raises CapExceeded beyond
// edge_cap edges.
template <typename Fn>
void enumerate_orientations(const Multigraph& g, Fn&& fn, int edge_cap = 24) {
  int m = g.edge_count();
  if (m > edge_cap)
    throw CapExceeded("orientation enumeration over " + std::to_string(m) +
                      " edges exceeds cap " + std::to_string(edge_cap));
  std::vector<bool> forward(m, true);
  unsigned long long total = 1ULL << m;
  for (unsigned long long code = 0; code < total; ++code) {
    for (int i = 0; i < m; ++i) forward[i] = !((code >> i) & 1ULL);
    if (!fn(Orientation(g, forward))) return;
  }
}

inline std::vector<Orientation> all_orientations(const Multigraph& g, int edge_cap = 24) {
  std::vector<Orientation> out;
  enumerate_orientations(
      g,
      [&](const Orientation& o) {
        out.push_back(o);
        return true;
      },
      edge_cap);
  return out;
}

// Searches for an orientation with d+(v) <= cap[v] for every vertex.
// Starts from an arbitrary orientation and repeatedly reverses an augmenting
// path from the smallest overloaded vertex to a vertex with slack; this is
// exact (an orientation is found iff one exists). `frozen[id]` pins edge id
// to the given direction bit; augmenting paths never traverse frozen edges,
// and the search stays exact relative to the frozen constraints.
inline std::optional<Orientation> find_bounded_orientation(
    const Multigraph& g, const std::vector<int>& cap,
    const std::vector<std::optional<bool>>& frozen = {}) {
  int n = g.vertex_count();
  int m = g.edge_count();
  if (static_cast<int>(cap.size()) != n + 1)
    throw GraphError("cap vector must have one entry per vertex (1-indexed)");
  for (int v = 1; v <= n; ++v)
    if (cap[v] < 0) throw GraphError("negative out-degree cap");
  if (!frozen.empty() && static_cast<int>(frozen.size()) != m + 1)
    throw GraphError("frozen vector must have one entry per edge (1-indexed)");

  std::vector<bool> forward(m, true);
  if (!frozen.empty())
    for (int id = 1; id <= m; ++id)
      if (frozen[id]) forward[id - 1] = *frozen[id];

  auto inc = g.incidence();
  std::vector<int> outdeg(n + 1, 0);
  for (const Edge& e : g.edges()) ++outdeg[forward[e.id - 1] ? e.u : e.v];

  auto tail_of = [&](int id) {
    const Edge& e = g.edge(id);
    return forward[id - 1] ? e.u : e.v;
  };
  auto head_of = [&](int id) {
    const Edge& e = g.edge(id);
    return forward[id - 1] ? e.v : e.u;
  };

  while (true) {
    int over = 0;
    for (int v = 1; v <= n; ++v)
      if (outdeg[v] > cap[v]) {
        over = v;
        break;
      }
    if (over == 0) break;

    // BFS along current arc directions over non-frozen edges.
    std::vector<int> via_edge(n + 1, 0);
    std::vector<bool> seen(n + 1, false);
    seen[over] = true;
    std::queue<int> q;
    q.push(over);
    int target = 0;
    while (!q.empty() && target == 0) {
      int v = q.front();
      q.pop();
      for (int id : inc[v]) {
        if (!frozen.empty() && frozen[id]) continue;
        if (tail_of(id) != v) continue;
        int w = head_of(id);
        if (seen[w]) continue;
        seen[w] = true;
        via_edge[w] = id;
        if (outdeg[w] < cap[w]) {
          target = w;
          break;
        }
        q.push(w);
      }
    }
    if (target == 0) return std::nullopt;

    for (int v = target; v != over;) {
      int id = via_edge[v];
      forward[id - 1] = !forward[id - 1];
      v = head_of(id);  // after the flip, head is the previous tail
    }
    --outdeg[over];
    ++outdeg[target];
  }
  return Orientation(g, forward);
}

// Replaces each selected edge by a length-2 path through a fresh vertex.
// New vertices are numbered n+1.. in edge-id order of the selection; edge ids
// are renumbered sequentially in the derived graph.
inline Multigraph subdivide(const Multigraph& g, const std::vector<int>& edge_ids) {
  std::vector<bool> pick(g.edge_count() + 1, false);
  for (int id : edge_ids) {
    g.edge(id);
    pick[id] = true;
  }
  int next_vertex = g.vertex_count();
  std::vector<std::pair<int, int>> ends;
  for (const Edge& e : g.edges()) {
    if (!pick[e.id]) {
      ends.emplace_back(e.u, e.v);
    } else {
      ++next_vertex;
      ends.emplace_back(e.u, next_vertex);
      ends.emplace_back(next_vertex, e.v);
    }
  }
  return Multigraph(next_vertex, ends);
}

struct BipartiteCheck {
  bool bipartite = true;
  std::vector<int> side;      // 1-indexed, 0/1 per vertex; valid when bipartite
  std::vector<int> odd_walk;  // closed walk (vertex sequence, first == last) otherwise
};

inline BipartiteCheck is_bipartite(const Multigraph& g) {
  int n = g.vertex_count();
  auto inc = g.incidence();
  BipartiteCheck res;
  res.side.assign(n + 1, -1);
  std::vector<int> parent_edge(n + 1, 0), parent(n + 1, 0);

  for (int root = 1; root <= n; ++root) {
    if (res.side[root] != -1) continue;
    res.side[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int id : inc[v]) {
        const Edge& e = g.edge(id);
        int w = e.u == v ? e.v : e.u;
        if (res.side[w] == -1) {
          res.side[w] = 1 - res.side[v];
          parent[w] = v;
          parent_edge[w] = id;
          q.push(w);
        } else if (res.side[w] == res.side[v] && id != parent_edge[v]) {
          // Odd closed walk: root..v, then w, then back up w..root.
          res.bipartite = false;
          std::vector<int> down;
          for (int x = v; x != root; x = parent[x]) down.push_back(x);
          down.push_back(root);
          std::reverse(down.begin(), down.end());  // root..v
          res.odd_walk = down;
          for (int x = w; x != root; x = parent[x]) res.odd_walk.push_back(x);
          res.odd_walk.push_back(root);
          return res;
        }
      }
    }
  }
  return res;
}

}  // namespace dporient
