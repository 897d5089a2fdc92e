#pragma once
// Small brute-force reference implementations the fast code is checked
// against. Everything here enumerates exhaustively and is only usable at
// desk scale; the guards throw rather than silently truncate.

#include <stdexcept>
#include <vector>

#include "dporient/correspondence.hpp"
#include "dporient/decomposition.hpp"
#include "dporient/euler.hpp"
#include "dporient/graph.hpp"
#include "dporient/solver.hpp"

namespace oracles {

using namespace dporient;

// Even/odd spanning Eulerian subdigraph counts by trying all 2^m arc subsets.
inline EulerianCount naive_eulerian(const Digraph& d) {
  int m = d.arc_count();
  if (m > 20) throw std::runtime_error("naive_eulerian: too many arcs");
  int n = d.vertex_count();
  EulerianCount out;
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    std::vector<int> bal(n + 1, 0);
    int arcs = 0;
    for (int id = 1; id <= m; ++id)
      if (mask >> (id - 1) & 1) {
        ++arcs;
        ++bal[d.arc(id).tail];
        --bal[d.arc(id).head];
      }
    bool ok = true;
    for (int v = 1; v <= n && ok; ++v) ok = bal[v] == 0;
    if (!ok) continue;
    if (arcs % 2 == 0)
      ++out.even;
    else
      ++out.odd;
  }
  return out;
}

// Minimum number of blocks in a partition of the pairs whose every block
// classifies at or below `target` (read along the stored direction).
// Restricted-growth-string enumeration, pairs.size() <= 8.
inline int min_cover_partition(const FieldSpec& spec, const std::vector<ColorPair>& pairs,
                               EdgeClass target) {
  int n = static_cast<int>(pairs.size());
  if (n == 0) return 0;
  if (n > 8) throw std::runtime_error("min_cover_partition: too many pairs");
  std::vector<int> rgs(n, 0);
  int best = n;
  while (true) {
    int blocks = 0;
    for (int x : rgs) blocks = std::max(blocks, x + 1);
    if (blocks < best) {
      bool ok = true;
      for (int b = 0; b < blocks && ok; ++b) {
        std::vector<ColorPair> block;
        for (int i = 0; i < n; ++i)
          if (rgs[i] == b) block.push_back(pairs[i]);
        ok = classify_pairs(spec, block).tag <= target;
      }
      if (ok) best = blocks;
    }
    // next restricted growth string
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[j]);
      if (rgs[i] <= cap) {
        ++rgs[i];
        for (int j = i + 1; j < n; ++j) rgs[j] = 0;
        break;
      }
      rgs[i] = 0;
    }
    if (i == 0) break;
  }
  return best;
}

// Coloring existence by full product enumeration over the lists.
inline bool brute_colorable(const CorrespondenceAssignment& A) {
  int n = A.graph().vertex_count();
  long long space = 1;
  for (int v = 1; v <= n; ++v) {
    space *= std::max(1, A.lists().list_size(v));
    if (space > 2000000) throw std::runtime_error("brute_colorable: space too large");
    if (A.lists().list_size(v) == 0) return false;
  }
  std::vector<int> idx(n + 1, 0);
  while (true) {
    Coloring f;
    for (int v = 1; v <= n; ++v) f[v] = A.lists().list(v)[idx[v]];
    if (check_coloring(A, f).valid) return true;
    int v = n;
    for (; v >= 1; --v) {
      if (idx[v] + 1 < A.lists().list_size(v)) {
        ++idx[v];
        for (int w = v + 1; w <= n; ++w) idx[w] = 0;
        break;
      }
    }
    if (v == 0) return false;
  }
}

// Whether some orientation keeps out-degrees within cap, honoring frozen
// directions, by trying all 2^m orientations.
inline bool orientation_feasible(const Multigraph& g, const std::vector<int>& cap,
                                 const std::vector<std::optional<bool>>& frozen) {
  int m = g.edge_count();
  if (m > 16) throw std::runtime_error("orientation_feasible: too many edges");
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    bool ok = true;
    std::vector<int> out(g.vertex_count() + 1, 0);
    for (int id = 1; id <= m && ok; ++id) {
      bool forward = !(mask >> (id - 1) & 1);
      if (frozen[id] && *frozen[id] != forward) ok = false;
      ++out[forward ? g.edge(id).u : g.edge(id).v];
    }
    for (int v = 1; v <= g.vertex_count() && ok; ++v) ok = out[v] <= cap[v];
    if (ok) return true;
  }
  return false;
}

// Two-colorability by trying all side assignments.
inline bool brute_bipartite(const Multigraph& g) {
  int n = g.vertex_count();
  if (n > 16) throw std::runtime_error("brute_bipartite: too many vertices");
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    bool ok = true;
    for (const Edge& e : g.edges())
      if ((mask >> (e.u - 1) & 1) == (mask >> (e.v - 1) & 1)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace oracles
