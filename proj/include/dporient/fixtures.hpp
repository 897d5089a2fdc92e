#pragma once
// Named instance generators used by the CLI, the test suite, and the
// acceptance harness.
//
//   c4_figure         C4 over Q, lists {1,2}, one crossed edge; uncolorable.
//   c4_doubled        the doubled C4 with |L(4)| = 3 and a pinned orientation.
//   k2_signed         K2 over Q, lists {-1,1}, one cross pair.
//   w6_lists          wheel on 6 vertices, straight, hub list {0}; uncolorable.
//   w6_signable       the same wheel with three constant-sum edges, lists {0,1,2}.
//   cycle(n)          C_n, lists {0,1}, straight except one crossed edge.
//   wheel(n)          hub list {0}, rim lists {0,1,2}, straight.
//   toroidal_grid(k)  2k x 2k toroidal grid, seeded random conforming matchings.
//
// Only toroidal_grid consumes the seed; the others are deterministic.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "dporient/correspondence.hpp"
#include "dporient/pipeline.hpp"
#include "dporient/random_gen.hpp"

namespace dporient {

namespace detail {

inline std::vector<ColorPair> straight_pairs(const std::vector<FieldElement>& colors) {
  std::vector<ColorPair> out;
  for (const FieldElement& c : colors) out.push_back({c, c});
  return out;
}

}  // namespace detail

inline Instance fixture_c4_figure() {
  FieldSpec Q = FieldSpec::rationals();
  Multigraph g(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  std::vector<std::vector<FieldElement>> lists(5, {1, 2});
  std::vector<ColorPair> straight = detail::straight_pairs({1, 2});
  std::vector<PartialMatching> ms{
      {1, 1, 2, straight},
      {2, 2, 3, straight},
      {3, 3, 4, {{1, 2}, {2, 1}}},
      {4, 4, 1, straight},
  };
  return Instance{CorrespondenceAssignment(g, Q, ListAssignment(Q, lists), ms),
                  std::nullopt};
}

inline Instance fixture_c4_doubled() {
  FieldSpec Q = FieldSpec::rationals();
  Multigraph g(4, {{1, 2}, {2, 3}, {3, 4}, {3, 4}, {4, 1}});
  std::vector<std::vector<FieldElement>> lists{
      {}, {1, 2}, {1, 2}, {1, 2}, {1, 2, 3}};
  std::vector<ColorPair> straight = detail::straight_pairs({1, 2});
  std::vector<PartialMatching> ms{
      {1, 1, 2, straight},
      {2, 2, 3, straight},
      {3, 3, 4, {{1, 2}}},
      {4, 3, 4, {{2, 1}}},
      {5, 4, 1, straight},
  };
  CorrespondenceAssignment A(g, Q, ListAssignment(Q, lists), ms);
  // 1 -> 2 -> 3 -> 4 (edge 3), 4 -> 3 (edge 4), 4 -> 1.
  Orientation D(g, {true, true, true, false, true});
  return Instance{std::move(A), std::move(D)};
}

inline Instance fixture_k2_signed() {
  FieldSpec Q = FieldSpec::rationals();
  Multigraph g(2, {{1, 2}});
  std::vector<std::vector<FieldElement>> lists(3, {-1, 1});
  std::vector<PartialMatching> ms{{1, 1, 2, {{-1, 1}}}};
  return Instance{CorrespondenceAssignment(g, Q, ListAssignment(Q, lists), ms),
                  std::nullopt};
}

inline Multigraph wheel_graph(int n) {
  if (n < 4) throw GraphError("wheel needs at least 4 vertices");
  int rim = n - 1;
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= rim; ++i) edges.push_back({i, i % rim + 1});
  for (int i = 1; i <= rim; ++i) edges.push_back({i, n});
  return Multigraph(n, edges);
}

inline Instance fixture_wheel(int n) {
  FieldSpec Q = FieldSpec::rationals();
  Multigraph g = wheel_graph(n);
  std::vector<std::vector<FieldElement>> lists(n + 1);
  for (int v = 1; v < n; ++v) lists[v] = {0, 1, 2};
  lists[n] = {0};
  std::vector<PartialMatching> ms;
  for (const Edge& e : g.edges()) {
    bool spoke = e.v == n;
    ms.push_back({e.id, e.u, e.v,
                  spoke ? std::vector<ColorPair>{{0, 0}}
                        : detail::straight_pairs({0, 1, 2})});
  }
  CorrespondenceAssignment A(g, Q, ListAssignment(Q, lists), ms);
  // Rim cycle plus spokes into the hub; every stored pair is already
  // tail -> head, so the all-forward orientation is the pinned one.
  Orientation D = Orientation::all_forward(g);
  return Instance{std::move(A), std::move(D)};
}

inline Instance fixture_w6_lists() { return fixture_wheel(6); }

inline Instance fixture_w6_signable() {
  FieldSpec Q = FieldSpec::rationals();
  Multigraph g = wheel_graph(6);
  std::vector<std::vector<FieldElement>> lists(7, {0, 1, 2});
  lists[0].clear();
  std::vector<ColorPair> straight = detail::straight_pairs({0, 1, 2});
  std::vector<ColorPair> cross_sum{{0, 2}, {1, 1}, {2, 0}};
  std::vector<PartialMatching> ms;
  for (const Edge& e : g.edges()) {
    bool dashed = (e.u == 5 && e.v == 1) || (e.u == 2 && e.v == 6) ||
                  (e.u == 4 && e.v == 6);
    ms.push_back({e.id, e.u, e.v, dashed ? cross_sum : straight});
  }
  return Instance{CorrespondenceAssignment(g, Q, ListAssignment(Q, lists), ms),
                  std::nullopt};
}

inline Instance fixture_cycle(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  FieldSpec Q = FieldSpec::rationals();
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({i, i % n + 1});
  Multigraph g(n, edges);
  std::vector<std::vector<FieldElement>> lists(n + 1, {0, 1});
  lists[0].clear();
  std::vector<ColorPair> straight = detail::straight_pairs({0, 1});
  std::vector<PartialMatching> ms;
  for (const Edge& e : g.edges())
    ms.push_back({e.id, e.u, e.v,
                  e.id == n ? std::vector<ColorPair>{{0, 1}, {1, 0}} : straight});
  return Instance{CorrespondenceAssignment(g, Q, ListAssignment(Q, lists), ms),
                  std::nullopt};
}

// 2k x 2k toroidal grid, row-major ids. Vertical edges in even 0-indexed
// columns get two-class matchings (differences +a and -a); every other edge
// stays within a single random difference class. Even-index vertices list
// {0,1,2,3}, odd-index {0,1,2}, so the two-class edges always double under a
// good lift.
inline Instance fixture_toroidal_grid(int k, std::uint64_t seed) {
  if (k < 1) throw GraphError("toroidal_grid needs k >= 1");
  FieldSpec Q = FieldSpec::rationals();
  int side = 2 * k;
  int n = side * side;
  auto id = [&](int r, int c) {
    return ((r % side + side) % side) * side + ((c % side + side) % side) + 1;
  };
  std::vector<std::pair<int, int>> edges;
  std::vector<bool> dashed;
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) {
      edges.push_back({id(r, c), id(r, c + 1)});
      dashed.push_back(false);
    }
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) {
      edges.push_back({id(r, c), id(r + 1, c)});
      dashed.push_back(c % 2 == 0);
    }
  Multigraph g(n, edges);

  std::vector<std::vector<FieldElement>> lists(n + 1);
  for (int v = 1; v <= n; ++v)
    lists[v] = (v - 1) % 2 == 0 ? std::vector<FieldElement>{0, 1, 2, 3}
                                : std::vector<FieldElement>{0, 1, 2};
  ListAssignment L(Q, lists);

  Rng rng(seed);
  auto class_pairs = [&](const Edge& e, const FieldElement& d) {
    std::vector<ColorPair> out;
    for (const FieldElement& a : L.list(e.u))
      for (const FieldElement& b : L.list(e.v))
        if (a - b == d) out.push_back({a, b});
    return out;
  };
  auto random_nonempty_subset = [&](std::vector<ColorPair> pool) {
    std::vector<ColorPair> out;
    for (const ColorPair& p : pool)
      if (rng.coin()) out.push_back(p);
    if (out.empty()) out.push_back(pool[rng.range(0, static_cast<int>(pool.size()) - 1)]);
    return out;
  };

  std::vector<PartialMatching> ms;
  for (const Edge& e : g.edges()) {
    std::vector<ColorPair> pairs;
    if (dashed[e.id - 1]) {
      // One pair from each of the -a and +a classes, then random
      // conflict-free extensions, so the union stays a matching and covers
      // exactly two difference classes.
      int a = rng.range(1, 3);
      std::vector<ColorPair> minus = class_pairs(e, -a);
      std::vector<ColorPair> plus = class_pairs(e, a);
      rng.shuffle(minus);
      rng.shuffle(plus);
      auto conflicts = [&](const ColorPair& p) {
        for (const ColorPair& q : pairs)
          if (q.first == p.first || q.second == p.second) return true;
        return false;
      };
      pairs.push_back(minus.front());
      for (const ColorPair& p : plus)
        if (!conflicts(p)) {
          pairs.push_back(p);
          break;
        }
      for (std::size_t i = 1; i < minus.size(); ++i)
        if (rng.coin() && !conflicts(minus[i])) pairs.push_back(minus[i]);
      for (const ColorPair& p : plus)
        if (rng.coin() && !conflicts(p)) pairs.push_back(p);
    } else {
      std::vector<FieldElement> diffs;
      for (const FieldElement& a : L.list(e.u))
        for (const FieldElement& b : L.list(e.v))
          if (std::find(diffs.begin(), diffs.end(), a - b) == diffs.end())
            diffs.push_back(a - b);
      pairs = random_nonempty_subset(
          class_pairs(e, diffs[rng.range(0, static_cast<int>(diffs.size()) - 1)]));
    }
    ms.push_back({e.id, e.u, e.v, pairs});
  }
  return Instance{CorrespondenceAssignment(g, Q, L, ms), std::nullopt};
}

// Parses "name" or "name(arg)". toroidal_grid is the only seed consumer.
inline Instance gen_fixture(const std::string& name, std::uint64_t seed = 0) {
  std::string base = name;
  int arg = 0;
  bool has_arg = false;
  auto open = name.find('(');
  if (open != std::string::npos) {
    if (name.back() != ')') throw Error("malformed fixture name '" + name + "'");
    base = name.substr(0, open);
    std::string inside = name.substr(open + 1, name.size() - open - 2);
    try {
      arg = std::stoi(inside);
    } catch (...) {
      throw Error("malformed fixture argument in '" + name + "'");
    }
    has_arg = true;
  }
  if (base == "c4_figure") return fixture_c4_figure();
  if (base == "c4_doubled") return fixture_c4_doubled();
  if (base == "k2_signed") return fixture_k2_signed();
  if (base == "w6_lists") return fixture_w6_lists();
  if (base == "w6_signable") return fixture_w6_signable();
  if (base == "cycle") return fixture_cycle(has_arg ? arg : 5);
  if (base == "wheel") return fixture_wheel(has_arg ? arg : 6);
  if (base == "toroidal_grid") return fixture_toroidal_grid(has_arg ? arg : 2, seed);
  throw Error("unknown fixture '" + name + "'");
}

// Every name parses in gen_fixture; cycle, wheel, and toroidal_grid also
// accept an argument, e.g. "cycle(7)".
inline std::vector<std::string> fixture_names() {
  return {"c4_figure", "c4_doubled", "k2_signed",     "w6_lists",
          "w6_signable", "cycle",    "wheel",         "toroidal_grid"};
}

}  // namespace dporient
