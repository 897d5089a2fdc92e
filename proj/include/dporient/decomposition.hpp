#pragma once
// Minimal covers of a partial matching by parts drawn from a class, and the
// lift construction that replaces each edge by one parallel edge per part.
//
//   omega_good      parts are constant-difference classes; the count of
//                   distinct differences is already optimal.
//   omega_signable  parts are constant-difference or constant-sum classes;
//                   the minimum is a vertex cover in the bipartite graph
//                   (difference classes) x (sum classes) with one edge per
//                   pair, computed exactly via maximum matching.
//   omega_zsignable parts lie on lines c1 = phi*c2 + a with phi in <1>\{0}
//                   (read along the stored tail); exact branch-and-bound
//                   set cover over maximal candidate lines plus singletons.
//
// Parts partition the pair set (every pair goes to exactly one part), parts
// are nonempty, and each part carries its classification witness. All three
// are deterministic: parts come out in first-occurrence order.

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dporient/correspondence.hpp"

namespace dporient {

enum class CoverMode { Good, Signable, ZSignable };

inline char to_char(CoverMode m) {
  switch (m) {
    case CoverMode::Good: return 'g';
    case CoverMode::Signable: return 's';
    case CoverMode::ZSignable: return 'z';
  }
  return '?';
}

inline CoverMode cover_mode_from_char(const std::string& s) {
  if (s == "g" || s == "good") return CoverMode::Good;
  if (s == "s" || s == "signable") return CoverMode::Signable;
  if (s == "z" || s == "zsignable") return CoverMode::ZSignable;
  throw Error("unknown cover mode '" + s + "' (want g, s, or z)");
}

inline EdgeClass mode_class(CoverMode m) {
  switch (m) {
    case CoverMode::Good: return EdgeClass::Good;
    case CoverMode::Signable: return EdgeClass::Signable;
    case CoverMode::ZSignable: return EdgeClass::ZSignable;
  }
  return EdgeClass::Irregular;
}

struct CoverPart {
  std::vector<ColorPair> pairs;
  EdgeClassification witness;
};

struct MatchingCover {
  CoverMode mode = CoverMode::Good;
  std::vector<CoverPart> parts;
  int k() const { return static_cast<int>(parts.size()); }
};

// Groups pairs by their difference c1 - c2.
inline MatchingCover omega_good(const FieldSpec& spec, const std::vector<ColorPair>& pairs) {
  MatchingCover cover;
  cover.mode = CoverMode::Good;
  std::map<FieldElement, int> index;
  for (const auto& [c1, c2] : pairs) {
    FieldElement d = spec.sub(c1, c2);
    auto it = index.find(d);
    if (it == index.end()) {
      index.emplace(d, cover.parts.size());
      cover.parts.push_back(CoverPart{});
      it = index.find(d);
    }
    cover.parts[it->second].pairs.emplace_back(c1, c2);
  }
  for (CoverPart& p : cover.parts) p.witness = classify_pairs(spec, p.pairs);
  return cover;
}

namespace detail {

// Kuhn's augmenting-path maximum matching plus Koenig's construction of a
// minimum vertex cover. adj[l] lists right neighbors of left node l.
struct KoenigCover {
  std::vector<bool> left_in_cover, right_in_cover;
  int size = 0;
};

inline KoenigCover koenig_vertex_cover(int nl, int nr,
                                       const std::vector<std::vector<int>>& adj) {
  std::vector<int> match_l(nl, -1), match_r(nr, -1);
  std::vector<bool> used(nr, false);
  std::function<bool(int)> try_augment = [&](int l) -> bool {
    for (int r : adj[l]) {
      if (used[r]) continue;
      used[r] = true;
      if (match_r[r] == -1 || try_augment(match_r[r])) {
        match_l[l] = r;
        match_r[r] = l;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (int l = 0; l < nl; ++l) {
    used.assign(nr, false);
    if (try_augment(l)) ++matched;
  }
  // Alternating reachability from unmatched left nodes.
  std::vector<bool> vis_l(nl, false), vis_r(nr, false);
  std::vector<int> stack;
  for (int l = 0; l < nl; ++l)
    if (match_l[l] == -1) {
      vis_l[l] = true;
      stack.push_back(l);
    }
  while (!stack.empty()) {
    int l = stack.back();
    stack.pop_back();
    for (int r : adj[l]) {
      if (vis_r[r]) continue;
      vis_r[r] = true;
      int l2 = match_r[r];
      if (l2 != -1 && !vis_l[l2]) {
        vis_l[l2] = true;
        stack.push_back(l2);
      }
    }
  }
  KoenigCover kc;
  kc.left_in_cover.assign(nl, false);
  kc.right_in_cover.assign(nr, false);
  for (int l = 0; l < nl; ++l)
    if (!vis_l[l]) {
      kc.left_in_cover[l] = true;
      ++kc.size;
    }
  for (int r = 0; r < nr; ++r)
    if (vis_r[r]) {
      kc.right_in_cover[r] = true;
      ++kc.size;
    }
  return kc;
}

}  // namespace detail

// Minimum cover by constant-difference and constant-sum classes. Over GF(2)
// sums and differences coincide, so this degenerates to omega_good.
inline MatchingCover omega_signable(const FieldSpec& spec,
                                    const std::vector<ColorPair>& pairs) {
  if (spec.is_prime_field() && spec.modulus() == 2) {
    MatchingCover cover = omega_good(spec, pairs);
    cover.mode = CoverMode::Signable;
    return cover;
  }
  MatchingCover cover;
  cover.mode = CoverMode::Signable;
  if (pairs.empty()) return cover;

  std::map<FieldElement, int> diff_index, sum_index;
  std::vector<FieldElement> diff_vals, sum_vals;
  std::vector<int> pair_diff(pairs.size()), pair_sum(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    FieldElement d = spec.sub(pairs[i].first, pairs[i].second);
    FieldElement s = spec.add(pairs[i].first, pairs[i].second);
    auto [dit, dnew] = diff_index.emplace(d, diff_vals.size());
    if (dnew) diff_vals.push_back(d);
    pair_diff[i] = dit->second;
    auto [sit, snew] = sum_index.emplace(s, sum_vals.size());
    if (snew) sum_vals.push_back(s);
    pair_sum[i] = sit->second;
  }
  int nl = static_cast<int>(diff_vals.size());
  int nr = static_cast<int>(sum_vals.size());
  std::vector<std::vector<int>> adj(nl);
  for (std::size_t i = 0; i < pairs.size(); ++i) adj[pair_diff[i]].push_back(pair_sum[i]);

  auto kc = detail::koenig_vertex_cover(nl, nr, adj);

  // Parts: covered difference classes first (first-occurrence order), then
  // covered sum classes; a pair with both classes covered goes to its
  // difference class.
  std::vector<int> diff_part(nl, -1), sum_part(nr, -1);
  for (int l = 0; l < nl; ++l)
    if (kc.left_in_cover[l]) {
      diff_part[l] = cover.k();
      cover.parts.push_back(CoverPart{});
    }
  for (int r = 0; r < nr; ++r)
    if (kc.right_in_cover[r]) {
      sum_part[r] = cover.k();
      cover.parts.push_back(CoverPart{});
    }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    int part = diff_part[pair_diff[i]];
    if (part == -1) part = sum_part[pair_sum[i]];
    cover.parts[part].pairs.push_back(pairs[i]);
  }
  // A minimum cover is irredundant, so no part is empty; keep a guard anyway.
  for (const CoverPart& p : cover.parts)
    if (p.pairs.empty()) throw Error("internal: empty part in signable cover");
  for (CoverPart& p : cover.parts) p.witness = classify_pairs(spec, p.pairs);
  return cover;
}

// Minimum cover by lines c1 = phi*c2 + a with phi in <1>\{0}, exact
// branch-and-bound over maximal candidate lines plus singletons (a single
// pair always fits the phi = 1 line through it). Raises CapExceeded beyond
// pair_cap pairs (bitmask search).
inline MatchingCover omega_zsignable(const FieldSpec& spec,
                                     const std::vector<ColorPair>& pairs,
                                     int pair_cap = 12) {
  MatchingCover cover;
  cover.mode = CoverMode::ZSignable;
  int n = static_cast<int>(pairs.size());
  if (n == 0) return cover;
  if (n > pair_cap)
    throw CapExceeded("zsignable cover over " + std::to_string(n) +
                      " pairs exceeds cap " + std::to_string(pair_cap));

  using Mask = unsigned int;
  const Mask full = n == 32 ? ~0u : (1u << n) - 1;

  // Maximal candidate lines, discovery order: all point pairs i<j in lex
  // order; slopes are forced and nonzero by the matching property.
  std::vector<Mask> sets;
  std::map<std::pair<FieldElement, FieldElement>, bool> seen_lines;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      FieldElement dq = spec.sub(pairs[i].second, pairs[j].second);
      FieldElement phi = spec.div(spec.sub(pairs[i].first, pairs[j].first), dq);
      if (!spec.in_unit_subgroup(phi)) continue;
      FieldElement a = spec.sub(pairs[i].first, spec.mul(phi, pairs[i].second));
      if (!seen_lines.emplace(std::make_pair(phi, a), true).second) continue;
      Mask mask = 0;
      for (int t = 0; t < n; ++t)
        if (spec.sub(pairs[t].first, spec.mul(phi, pairs[t].second)) == a)
          mask |= Mask(1) << t;
      sets.push_back(mask);
    }
  }
  for (int t = 0; t < n; ++t) sets.push_back(Mask(1) << t);

  auto largest_gain = [&](Mask uncovered) {
    int best = 1;
    for (Mask s : sets) best = std::max(best, __builtin_popcount(s & uncovered));
    return best;
  };

  // Greedy upper bound (most new points, then lowest set id).
  std::vector<int> greedy;
  {
    Mask uncovered = full;
    while (uncovered) {
      int best = -1, gain = 0;
      for (std::size_t s = 0; s < sets.size(); ++s) {
        int g = __builtin_popcount(sets[s] & uncovered);
        if (g > gain) {
          gain = g;
          best = static_cast<int>(s);
        }
      }
      greedy.push_back(best);
      uncovered &= ~sets[best];
    }
  }
  std::vector<int> best_sol = greedy;

  // Branch on the lowest uncovered point; try its sets by descending gain.
  std::vector<int> chosen;
  std::function<void(Mask)> search = [&](Mask uncovered) {
    if (!uncovered) {
      if (chosen.size() < best_sol.size()) best_sol = chosen;
      return;
    }
    int lower = static_cast<int>(chosen.size()) +
                (__builtin_popcount(uncovered) + largest_gain(uncovered) - 1) /
                    largest_gain(uncovered);
    if (lower >= static_cast<int>(best_sol.size())) return;
    int p = __builtin_ctz(uncovered);
    std::vector<std::pair<int, int>> candidates;  // (-gain, id)
    for (std::size_t s = 0; s < sets.size(); ++s)
      if (sets[s] & (Mask(1) << p))
        candidates.emplace_back(-__builtin_popcount(sets[s] & uncovered),
                                static_cast<int>(s));
    std::sort(candidates.begin(), candidates.end());
    for (auto [neg_gain, s] : candidates) {
      (void)neg_gain;
      chosen.push_back(s);
      search(uncovered & ~sets[s]);
      chosen.pop_back();
    }
  };
  search(full);

  // Partition: assign each point to the first chosen set containing it,
  // sets ordered by id (line discovery order, singletons last).
  std::sort(best_sol.begin(), best_sol.end());
  std::vector<std::vector<int>> members(best_sol.size());
  for (int t = 0; t < n; ++t) {
    for (std::size_t s = 0; s < best_sol.size(); ++s) {
      if (sets[best_sol[s]] & (Mask(1) << t)) {
        members[s].push_back(t);
        break;
      }
    }
  }
  for (std::size_t s = 0; s < best_sol.size(); ++s) {
    if (members[s].empty()) throw Error("internal: empty part in zsignable cover");
    CoverPart part;
    for (int t : members[s]) part.pairs.push_back(pairs[t]);
    part.witness = classify_pairs(spec, part.pairs);
    cover.parts.push_back(std::move(part));
  }
  return cover;
}

inline MatchingCover matching_cover(const FieldSpec& spec, const std::vector<ColorPair>& pairs,
                                    CoverMode mode, int zsign_pair_cap = 12) {
  switch (mode) {
    case CoverMode::Good: return omega_good(spec, pairs);
    case CoverMode::Signable: return omega_signable(spec, pairs);
    case CoverMode::ZSignable: return omega_zsignable(spec, pairs, zsign_pair_cap);
  }
  throw Error("unknown cover mode");
}

struct LiftResult {
  CorrespondenceAssignment assignment;
  // provenance[lifted_edge_id - 1] = (original edge id, part index, 1-based).
  std::vector<std::pair<int, int>> provenance;
  std::vector<MatchingCover> covers;  // [0] unused, per original edge
};

// The mode-m lift: each edge is replaced by one parallel edge per cover
// part (edges with empty matchings vanish: omega = 0). Lists are unchanged;
// lifted matchings keep the original tail.
inline LiftResult lift(const CorrespondenceAssignment& A, CoverMode mode,
                       int zsign_pair_cap = 12) {
  const Multigraph& g = A.graph();
  LiftResult out;
  out.covers.resize(g.edge_count() + 1);
  std::vector<std::pair<int, int>> ends;
  std::vector<PartialMatching> matchings;
  for (const Edge& e : g.edges()) {
    const PartialMatching& pm = A.matching(e.id);
    MatchingCover cover = matching_cover(A.field(), pm.pairs, mode, zsign_pair_cap);
    for (int part = 0; part < cover.k(); ++part) {
      ends.emplace_back(e.u, e.v);
      int lifted_id = static_cast<int>(ends.size());
      matchings.push_back(PartialMatching{lifted_id, pm.tail, pm.head,
                                          cover.parts[part].pairs});
      out.provenance.emplace_back(e.id, part + 1);
    }
    out.covers[e.id] = std::move(cover);
  }
  Multigraph lifted(g.vertex_count(), ends);
  out.assignment = CorrespondenceAssignment(std::move(lifted), A.field(), A.lists(),
                                            std::move(matchings));
  return out;
}

}  // namespace dporient
