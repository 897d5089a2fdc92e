#pragma once
// Seeded random instance generators. Randomness goes through a thin wrapper
// around mt19937_64 with hand-rolled range reduction so the same seed yields
// the same instance on every platform (std::uniform_int_distribution is not
// portable across standard libraries).

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "dporient/correspondence.hpp"
#include "dporient/field.hpp"
#include "dporient/graph.hpp"

namespace dporient {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
  int range(int lo, int hi) {
    if (hi < lo) throw Error("empty range");
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool coin() { return next() & 1; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
      std::swap(v[i], v[range(0, i)]);
  }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    if (v.empty()) throw Error("pick from empty vector");
    return v[range(0, static_cast<int>(v.size()) - 1)];
  }

 private:
  std::mt19937_64 eng_;
};

// Connected-ish loopless multigraph: a random spanning tree first (when the
// edge budget allows), then random pairs; parallel edges allowed.
inline Multigraph random_multigraph(Rng& rng, int min_n, int max_n, int min_m, int max_m) {
  int n = rng.range(min_n, max_n);
  if (n < 2) n = 2;
  int m = rng.range(min_m, max_m);
  std::vector<std::pair<int, int>> ends;
  for (int v = 2; v <= n && static_cast<int>(ends.size()) < m; ++v)
    ends.emplace_back(rng.range(1, v - 1), v);
  while (static_cast<int>(ends.size()) < m) {
    int u = rng.range(1, n), v = rng.range(1, n);
    if (u == v) continue;
    ends.emplace_back(u, v);
  }
  return Multigraph(n, ends);
}

// Random bipartite multigraph: vertices split into two classes by parity of a
// random assignment; edges only across the split.
inline Multigraph random_bipartite_multigraph(Rng& rng, int min_n, int max_n, int min_m,
                                              int max_m) {
  int n = rng.range(std::max(2, min_n), max_n);
  std::vector<int> side(n + 1);
  side[1] = 0;
  side[2] = 1;
  for (int v = 3; v <= n; ++v) side[v] = rng.coin();
  std::vector<int> left, right;
  for (int v = 1; v <= n; ++v) (side[v] == 0 ? left : right).push_back(v);
  int m = rng.range(min_m, max_m);
  std::vector<std::pair<int, int>> ends;
  for (int i = 0; i < m; ++i) ends.emplace_back(rng.pick(left), rng.pick(right));
  return Multigraph(n, ends);
}

inline Orientation random_orientation(Rng& rng, const Multigraph& g) {
  std::vector<bool> forward(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) forward[i] = rng.coin();
  return Orientation(g, forward);
}

// Sign data on D with sigma in {+1,-1} and integer phi_plus in
// [1, min(max_phi_plus, p-1)] (so phi never vanishes over GF(p)).
inline SignData random_sign_data(Rng& rng, const Orientation& D, const FieldSpec& spec,
                                 int max_phi_plus) {
  int hi = max_phi_plus;
  if (spec.is_prime_field())
    hi = static_cast<int>(std::min<long long>(hi, spec.modulus() - 1));
  if (hi < 1) throw Error("no admissible phi_plus");
  SignData S{spec, D, std::vector<SignEntry>(D.base().edge_count() + 1)};
  for (const Edge& e : D.base().edges()) {
    int sigma = rng.coin() ? 1 : -1;
    int k = rng.range(1, hi);
    FieldElement phi = spec.canonical(FieldElement(sigma) * FieldElement(k));
    FieldElement a = spec.canonical(FieldElement(
        rng.range(0, spec.is_prime_field() ? static_cast<int>(spec.modulus()) - 1 : 4)));
    S.entries[e.id] = make_sign_entry(spec, phi, a, sigma);
  }
  return S;
}

// Random lists: sizes in [min_size, max_size], values distinct small
// elements of the field.
inline ListAssignment random_lists(Rng& rng, const FieldSpec& spec, int n, int min_size,
                                   int max_size) {
  int pool_max = spec.is_prime_field()
                     ? static_cast<int>(spec.modulus()) - 1
                     : std::max(5, max_size + 2);
  std::vector<std::vector<FieldElement>> lists(n + 1);
  for (int v = 1; v <= n; ++v) {
    std::vector<int> pool;
    for (int c = 0; c <= pool_max; ++c) pool.push_back(c);
    rng.shuffle(pool);
    int size = std::min(rng.range(min_size, max_size), static_cast<int>(pool.size()));
    for (int i = 0; i < size; ++i) lists[v].emplace_back(pool[i]);
  }
  return ListAssignment(spec, std::move(lists));
}

// Random partial matching between two lists: a random injection on a random
// subset.
inline std::vector<ColorPair> random_matching_pairs(Rng& rng,
                                                    const std::vector<FieldElement>& lu,
                                                    const std::vector<FieldElement>& lv) {
  int k = rng.range(0, static_cast<int>(std::min(lu.size(), lv.size())));
  std::vector<int> iu(lu.size()), iv(lv.size());
  for (std::size_t i = 0; i < iu.size(); ++i) iu[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < iv.size(); ++i) iv[i] = static_cast<int>(i);
  rng.shuffle(iu);
  rng.shuffle(iv);
  std::vector<ColorPair> pairs;
  for (int i = 0; i < k; ++i) pairs.emplace_back(lu[iu[i]], lv[iv[i]]);
  return pairs;
}

// Fully random correspondence assignment.
inline CorrespondenceAssignment random_assignment(Rng& rng, const FieldSpec& spec,
                                                  int max_n, int max_m, int max_list) {
  Multigraph g = random_multigraph(rng, 2, max_n, 1, max_m);
  ListAssignment lists = random_lists(rng, spec, g.vertex_count(), 1, max_list);
  std::vector<PartialMatching> matchings;
  for (const Edge& e : g.edges()) {
    PartialMatching pm{e.id, e.u, e.v,
                       random_matching_pairs(rng, lists.list(e.u), lists.list(e.v))};
    matchings.push_back(std::move(pm));
  }
  return CorrespondenceAssignment(std::move(g), spec, std::move(lists),
                                  std::move(matchings));
}

}  // namespace dporient
