#pragma once
// Brute-force (L, C)-coloring oracle: exact backtracking with forward
// checking. Colors are handled as list indices; each edge contributes a pair
// of partial injections (tail color -> forbidden head color and back), so an
// assignment prunes at most one color per incident edge.
//
// Absent is only reported when the full search space was exhausted within
// the decision budget; running out of budget is its own status.

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dporient/correspondence.hpp"

namespace dporient {

using Coloring = std::map<int, FieldElement>;  // vertex -> color

struct ColoringCheck {
  bool valid = true;
  int violated_edge = 0;  // first edge whose matched pair is hit, 0 if none
  std::string reason;
};

// Validity of a total coloring: every vertex colored from its list and no
// matched pair selected. Violations are reported, not thrown.
inline ColoringCheck check_coloring(const CorrespondenceAssignment& A, const Coloring& f) {
  ColoringCheck res;
  for (int v = 1; v <= A.graph().vertex_count(); ++v) {
    auto it = f.find(v);
    if (it == f.end()) {
      res.valid = false;
      res.reason = "vertex " + std::to_string(v) + " is uncolored";
      return res;
    }
    if (!A.lists().contains(v, it->second)) {
      res.valid = false;
      res.reason = "color " + to_string(it->second) + " is not in the list of vertex " +
                   std::to_string(v);
      return res;
    }
  }
  for (const Edge& e : A.graph().edges()) {
    const PartialMatching& pm = A.matching(e.id);
    const FieldElement& c1 = f.at(pm.tail);
    const FieldElement& c2 = f.at(pm.head);
    for (const auto& [a, b] : pm.pairs) {
      if (a == c1 && b == c2) {
        res.valid = false;
        res.violated_edge = e.id;
        res.reason = "edge " + std::to_string(e.id) + " matches " + to_string(c1) +
                     " with " + to_string(c2);
        return res;
      }
    }
  }
  return res;
}

enum class SolveStatus { Found, Absent, BudgetExhausted };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Found: return "found";
    case SolveStatus::Absent: return "absent";
    case SolveStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

struct SolveResult {
  SolveStatus status = SolveStatus::Absent;
  Coloring coloring;        // populated when Found
  long long decisions = 0;  // color choices tried
};

inline SolveResult solve(const CorrespondenceAssignment& A, long long budget = 10000000) {
  const Multigraph& g = A.graph();
  int n = g.vertex_count();
  SolveResult res;

  // Highest-degree vertices first, ids break ties.
  std::vector<int> order;
  for (int v = 1; v <= n; ++v) order.push_back(v);
  auto deg = g.degrees();
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (deg[a] != deg[b]) return deg[a] > deg[b];
    return a < b;
  });

  // Per edge, both partial injections as index maps.
  struct EdgeRule {
    int other;                  // the neighbor
    std::vector<int> forbid;    // forbid[my_color_index] = neighbor index or -1
  };
  std::vector<std::vector<EdgeRule>> rules(n + 1);
  auto index_of = [&](int v, const FieldElement& c) {
    const auto& list = A.lists().list(v);
    for (std::size_t i = 0; i < list.size(); ++i)
      if (list[i] == c) return static_cast<int>(i);
    throw FieldError("color " + to_string(c) + " missing from list of vertex " +
                     std::to_string(v));
  };
  for (const Edge& e : g.edges()) {
    const PartialMatching& pm = A.matching(e.id);
    EdgeRule fwd{pm.head, std::vector<int>(A.lists().list_size(pm.tail), -1)};
    EdgeRule bwd{pm.tail, std::vector<int>(A.lists().list_size(pm.head), -1)};
    for (const auto& [c1, c2] : pm.pairs) {
      int i = index_of(pm.tail, c1), j = index_of(pm.head, c2);
      fwd.forbid[i] = j;
      bwd.forbid[j] = i;
    }
    rules[pm.tail].push_back(std::move(fwd));
    rules[pm.head].push_back(std::move(bwd));
  }

  std::vector<std::vector<bool>> allowed(n + 1);
  std::vector<int> allowed_count(n + 1, 0);
  for (int v = 1; v <= n; ++v) {
    allowed[v].assign(A.lists().list_size(v), true);
    allowed_count[v] = A.lists().list_size(v);
  }
  std::vector<int> chosen(n + 1, -1);

  bool budget_hit = false;
  std::vector<std::pair<int, int>> trail;  // (vertex, color index) disabled

  std::function<bool(int)> go = [&](int pos) -> bool {
    if (pos == n) return true;
    int v = order[pos];
    int k = A.lists().list_size(v);
    for (int ci = 0; ci < k; ++ci) {
      if (!allowed[v][ci]) continue;
      if (++res.decisions > budget) {
        budget_hit = true;
        return false;
      }
      std::size_t mark = trail.size();
      bool dead = false;
      for (const EdgeRule& r : rules[v]) {
        if (chosen[r.other] != -1) continue;  // already enforced from the other side
        int j = r.forbid[ci];
        if (j == -1 || !allowed[r.other][j]) continue;
        allowed[r.other][j] = false;
        --allowed_count[r.other];
        trail.emplace_back(r.other, j);
        if (allowed_count[r.other] == 0) {
          dead = true;
          break;
        }
      }
      if (!dead) {
        chosen[v] = ci;
        if (go(pos + 1)) return true;
        if (budget_hit) return false;
        chosen[v] = -1;
      }
      while (trail.size() > mark) {
        auto [w, j] = trail.back();
        trail.pop_back();
        allowed[w][j] = true;
        ++allowed_count[w];
      }
    }
    return false;
  };

  if (go(0)) {
    res.status = SolveStatus::Found;
    for (int v = 1; v <= n; ++v) res.coloring[v] = A.lists().list(v)[chosen[v]];
  } else {
    res.status = budget_hit ? SolveStatus::BudgetExhausted : SolveStatus::Absent;
  }
  return res;
}

}  // namespace dporient
