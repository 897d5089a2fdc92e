#pragma once
// The certification pipeline.
//
// certify(instance, mode, strategy, caps) tries to certify that every
// coloring instance with these lists and matchings is colorable, by
//   1. resolving mode auto to the cover mode with the smallest total lift,
//   2. lifting the assignment into the class unless it is already there,
//   3. searching orientations with out-degree(v) < |L(v)| everywhere
//      (mode z freezes edge directions whose slope leaves <1>),
//   4. evaluating each candidate: build the mode's auxiliary digraph and
//      certify on a nonzero even/odd Eulerian difference in the field.
//      Over Q a bipartite underlying graph short-circuits (odd count zero,
//      even count at least one).
//
// A Certified verdict carries a replayable certificate; Inconclusive
// verdicts carry a reason and never assert uncolorability.
//
// replay(json) re-derives every claim in a certificate from its inputs.
// cross_validate(...) stress-tests certify against the brute-force solver
// and the coefficient identity on seeded random instances.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dporient/aux_digraph.hpp"
#include "dporient/caps.hpp"
#include "dporient/correspondence.hpp"
#include "dporient/decomposition.hpp"
#include "dporient/euler.hpp"
#include "dporient/json_io.hpp"
#include "dporient/polynomial.hpp"
#include "dporient/random_gen.hpp"
#include "dporient/solver.hpp"

namespace dporient {

struct Instance {
  CorrespondenceAssignment assignment;
  std::optional<Orientation> orientation;  // honored when no lift is needed
};

inline json instance_to_json(const Instance& I) {
  json out = assignment_to_json(I.assignment);
  if (I.orientation) out["orientation"] = orientation_to_json(*I.orientation);
  return out;
}

inline Instance instance_from_json(const json& j) {
  Instance I{assignment_from_json(j), std::nullopt};
  if (j.contains("orientation"))
    I.orientation = orientation_from_json(j.at("orientation"), I.assignment.graph());
  return I;
}

// The orientation reading every matching tail -> head.
inline Orientation stored_orientation(const CorrespondenceAssignment& A) {
  std::vector<bool> forward(A.graph().edge_count());
  for (const Edge& e : A.graph().edges())
    forward[e.id - 1] = A.matching(e.id).tail == e.u;
  return Orientation(A.graph(), forward);
}

enum class CertifyMode { Auto, Good, Signable, ZSignable };

inline const char* to_string(CertifyMode m) {
  switch (m) {
    case CertifyMode::Auto: return "auto";
    case CertifyMode::Good: return "good";
    case CertifyMode::Signable: return "signable";
    case CertifyMode::ZSignable: return "zsignable";
  }
  return "?";
}

inline CertifyMode certify_mode_from_string(const std::string& s) {
  if (s == "auto") return CertifyMode::Auto;
  if (s == "good" || s == "g") return CertifyMode::Good;
  if (s == "signable" || s == "s") return CertifyMode::Signable;
  if (s == "zsignable" || s == "z") return CertifyMode::ZSignable;
  throw Error("unknown certify mode '" + s + "'");
}

enum class SearchStrategy { BoundedFirst, Exhaustive };

inline const char* to_string(SearchStrategy s) {
  return s == SearchStrategy::BoundedFirst ? "bounded-first" : "exhaustive";
}

inline SearchStrategy strategy_from_string(const std::string& s) {
  if (s == "bounded-first" || s == "bounded_first" || s == "bounded")
    return SearchStrategy::BoundedFirst;
  if (s == "exhaustive") return SearchStrategy::Exhaustive;
  throw Error("unknown strategy '" + s + "'");
}

enum class InconclusiveReason {
  NoFeasibleOrientation,
  AllZeroResidue,
  ClassNotApplicable,
  CapsExceeded,
};

inline const char* to_string(InconclusiveReason r) {
  switch (r) {
    case InconclusiveReason::NoFeasibleOrientation: return "no feasible orientation";
    case InconclusiveReason::AllZeroResidue:
      return "all feasible orientations have zero residue";
    case InconclusiveReason::ClassNotApplicable: return "class not applicable";
    case InconclusiveReason::CapsExceeded: return "caps exceeded";
  }
  return "?";
}

struct EulerEvidence {
  bool bipartite_shortcut = false;   // Q only: EO = 0 and EE >= 1 structurally
  std::optional<EulerianDifference> counted;
};

struct Certificate {
  CoverMode mode = CoverMode::Good;
  bool lifted = false;
  CorrespondenceAssignment original;
  CorrespondenceAssignment worked;  // equals original unless lifted
  std::vector<std::pair<int, int>> provenance;
  Orientation orientation;          // over worked.graph()
  std::vector<int> sigma;           // per edge, modes s and z
  std::optional<SignData> sign_data;  // mode z
  EulerEvidence evidence;
};

struct Verdict {
  bool certified = false;
  std::optional<Certificate> certificate;
  std::optional<InconclusiveReason> reason;
  std::string note;
  SearchStrategy strategy = SearchStrategy::BoundedFirst;
  CertifyMode requested_mode = CertifyMode::Auto;
};

namespace detail {

struct Evaluation {
  bool certified = false;
  bool cap_hit = false;
  EulerEvidence evidence;
  std::vector<int> sigma;
  std::optional<SignData> sign_data;
};

// Builds the mode's auxiliary digraph on D and decides whether its Eulerian
// difference is nonzero in the field.
inline Evaluation evaluate_orientation(const CorrespondenceAssignment& work,
                                       const Orientation& D, CoverMode mode,
                                       const Caps& caps) {
  const FieldSpec& spec = work.field();
  Evaluation ev;
  Digraph aux;
  if (mode == CoverMode::Good) {
    aux = D.to_digraph();
  } else {
    AssignmentClassification ac = classify_assignment(work, D);
    if (!ac.sign_data) throw Error("internal: sign data missing during evaluation");
    ev.sigma.assign(work.graph().edge_count() + 1, 1);
    for (const Edge& e : work.graph().edges())
      ev.sigma[e.id] = ac.sign_data->entries[e.id].sigma;
    if (mode == CoverMode::Signable) {
      // Sigma from the matching shape: -1 exactly on constant-sum edges.
      for (const Edge& e : work.graph().edges())
        ev.sigma[e.id] = ac.per_edge[e.id].tag == EdgeClass::Signable ? -1 : 1;
      aux = build_d_sigma(D, ev.sigma).digraph();
    } else {
      ev.sign_data = ac.sign_data;
      aux = build_d_sigma_phi(D, *ac.sign_data).digraph();
    }
  }
  if (spec.is_rationals() && is_bipartite(underlying_graph(aux)).bipartite) {
    ev.certified = true;
    ev.evidence.bipartite_shortcut = true;
    return ev;
  }
  try {
    EulerianDifference diff = eulerian_difference(aux, spec, caps.euler_arcs);
    ev.evidence.counted = diff;
    ev.certified = !diff.is_zero;
  } catch (const CapExceeded&) {
    ev.cap_hit = true;
  }
  return ev;
}

// Mode z over Q: edge directions whose slope leaves <1> are frozen out.
inline std::vector<std::optional<bool>> frozen_directions(
    const CorrespondenceAssignment& work, CoverMode mode) {
  int m = work.graph().edge_count();
  std::vector<std::optional<bool>> frozen(m + 1, std::nullopt);
  if (mode != CoverMode::ZSignable || !work.field().is_rationals()) return frozen;
  const FieldSpec& spec = work.field();
  for (const Edge& e : work.graph().edges()) {
    const PartialMatching& pm = work.matching(e.id);
    if (pm.pairs.size() < 2) continue;  // slope 1 either way
    EdgeClassification ec = classify_pairs(spec, pm.pairs);
    if (ec.tag == EdgeClass::Irregular)
      throw Error("internal: irregular edge survived into mode z search");
    bool stored_ok = spec.in_unit_subgroup(ec.phi);
    bool reversed_ok = spec.in_unit_subgroup(spec.inv(ec.phi));
    if (stored_ok && reversed_ok) continue;
    if (!stored_ok && !reversed_ok)
      throw Error("internal: edge " + std::to_string(e.id) + " has no <1> direction");
    bool stored_forward = pm.tail == e.u;
    frozen[e.id] = stored_ok ? stored_forward : !stored_forward;
  }
  return frozen;
}

}  // namespace detail

inline Verdict certify(const Instance& I, CertifyMode mode, SearchStrategy strategy,
                       const Caps& caps = Caps::defaults()) {
  const CorrespondenceAssignment& A = I.assignment;
  const FieldSpec& spec = A.field();
  Verdict verdict;
  verdict.strategy = strategy;
  verdict.requested_mode = mode;
  auto inconclusive = [&](InconclusiveReason r, const std::string& note) {
    verdict.certified = false;
    verdict.reason = r;
    if (!verdict.note.empty() && !note.empty()) verdict.note += "; ";
    verdict.note += note;
    return verdict;
  };

  // Resolve auto: smallest total lifted edge count, ties prefer good, then
  // signable, then zsignable.
  CoverMode cover_mode = CoverMode::Good;
  if (mode == CertifyMode::Auto) {
    long long total_g = 0, total_s = 0, total_z = 0;
    bool z_ok = true;
    for (const Edge& e : A.graph().edges()) {
      const auto& pairs = A.matching(e.id).pairs;
      total_g += omega_good(spec, pairs).k();
      total_s += omega_signable(spec, pairs).k();
      if (z_ok) {
        try {
          total_z += omega_zsignable(spec, pairs, caps.zsign_pairs).k();
        } catch (const CapExceeded&) {
          z_ok = false;
        }
      }
    }
    cover_mode = CoverMode::Good;
    long long best = total_g;
    if (total_s < best) {
      best = total_s;
      cover_mode = CoverMode::Signable;
    }
    if (z_ok && total_z < best) {
      best = total_z;
      cover_mode = CoverMode::ZSignable;
    }
  } else {
    cover_mode = mode == CertifyMode::Good      ? CoverMode::Good
                 : mode == CertifyMode::Signable ? CoverMode::Signable
                                                 : CoverMode::ZSignable;
  }

  // Lift unless the assignment is already in class.
  AssignmentClassification cls0 = classify_assignment(A, stored_orientation(A));
  bool need_lift = cls0.cls > mode_class(cover_mode);
  Certificate cert;
  cert.mode = cover_mode;
  cert.original = A;
  if (need_lift) {
    try {
      LiftResult lr = lift(A, cover_mode, caps.zsign_pairs);
      cert.worked = std::move(lr.assignment);
      cert.provenance = std::move(lr.provenance);
      cert.lifted = true;
    } catch (const CapExceeded& e) {
      return inconclusive(InconclusiveReason::CapsExceeded,
                          std::string("lift: ") + e.what());
    }
  } else {
    cert.worked = A;
    cert.lifted = false;
  }
  const CorrespondenceAssignment& work = cert.worked;
  const Multigraph& g = work.graph();
  int m = g.edge_count();

  // Out-degree caps |L(v)| - 1.
  std::vector<int> degree_cap(g.vertex_count() + 1, 0);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    int size = work.lists().list_size(v);
    if (size == 0)
      return inconclusive(InconclusiveReason::NoFeasibleOrientation,
                          "vertex " + std::to_string(v) + " has an empty list");
    degree_cap[v] = size - 1;
  }

  std::vector<std::optional<bool>> frozen = detail::frozen_directions(work, cover_mode);

  bool caps_hit = false;
  bool truncated = false;
  auto try_orientation = [&](const Orientation& D) -> bool {
    detail::Evaluation ev = detail::evaluate_orientation(work, D, cover_mode, caps);
    if (ev.cap_hit) caps_hit = true;
    if (!ev.certified) return false;
    cert.orientation = D;
    cert.sigma = std::move(ev.sigma);
    cert.sign_data = std::move(ev.sign_data);
    cert.evidence = std::move(ev.evidence);
    verdict.certified = true;
    verdict.certificate = std::move(cert);
    return true;
  };

  // A fixed orientation pins the search when the edge set is unchanged.
  if (I.orientation && !cert.lifted) {
    const Orientation& D = *I.orientation;
    if (!(D.base() == g))
      return inconclusive(InconclusiveReason::NoFeasibleOrientation,
                          "fixed orientation is over a different graph");
    auto out = D.out_degrees();
    for (int v = 1; v <= g.vertex_count(); ++v)
      if (out[v] > degree_cap[v])
        return inconclusive(
            InconclusiveReason::NoFeasibleOrientation,
            "fixed orientation violates the list bound at vertex " + std::to_string(v));
    for (int id = 1; id <= m; ++id)
      if (frozen[id] && D.forward(id) != *frozen[id])
        return inconclusive(InconclusiveReason::ClassNotApplicable,
                            "fixed orientation reverses edge " + std::to_string(id) +
                                " out of <1>");
    if (try_orientation(D)) return verdict;
    return inconclusive(caps_hit ? InconclusiveReason::CapsExceeded
                                 : InconclusiveReason::AllZeroResidue,
                        "the fixed orientation evaluated to zero");
  }
  if (I.orientation && cert.lifted)
    verdict.note = "fixed orientation ignored: the lift changed the edge set";

  if (strategy == SearchStrategy::Exhaustive) {
    if (m > caps.exhaustive_edges)
      return inconclusive(InconclusiveReason::CapsExceeded,
                          "exhaustive search over " + std::to_string(m) +
                              " edges exceeds cap " +
                              std::to_string(caps.exhaustive_edges));
    bool any_feasible = false;
    bool found = false;
    enumerate_orientations(
        g,
        [&](const Orientation& D) {
          for (int id = 1; id <= m; ++id)
            if (frozen[id] && D.forward(id) != *frozen[id]) return true;
          auto out = D.out_degrees();
          for (int v = 1; v <= g.vertex_count(); ++v)
            if (out[v] > degree_cap[v]) return true;
          any_feasible = true;
          if (try_orientation(D)) {
            found = true;
            return false;
          }
          return true;
        },
        std::max(caps.orientation_edges, caps.exhaustive_edges));
    if (found) return verdict;
    if (!any_feasible)
      return inconclusive(InconclusiveReason::NoFeasibleOrientation, "");
    return inconclusive(caps_hit ? InconclusiveReason::CapsExceeded
                                 : InconclusiveReason::AllZeroResidue,
                        "");
  }

  // Bounded-first: flow start, then a breadth-first walk over
  // feasibility-preserving reversals (shortest directed paths into slack
  // vertices, shortest directed cycles), capped by caps.walk_visits.
  std::optional<Orientation> start = find_bounded_orientation(g, degree_cap, frozen);
  if (!start)
    return inconclusive(InconclusiveReason::NoFeasibleOrientation, "");

  std::set<std::vector<bool>> seen;
  std::vector<Orientation> queue;
  queue.push_back(*start);
  seen.insert(start->direction_bits());
  std::size_t head = 0;
  int visits = 0;
  auto inc = g.incidence();

  auto push_neighbor = [&](const Orientation& o) {
    if (seen.insert(o.direction_bits()).second) queue.push_back(o);
  };
  // Shortest directed path from s to t along o (non-frozen edges); empty if
  // none. Returns edge ids.
  auto shortest_path = [&](const Orientation& o, int s, int t,
                           int skip_edge) -> std::vector<int> {
    std::vector<int> via(g.vertex_count() + 1, 0);
    std::vector<bool> vis(g.vertex_count() + 1, false);
    std::vector<int> bfs{s};
    vis[s] = true;
    for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
      int v = bfs[qi];
      for (int id : inc[v]) {
        if (id == skip_edge || frozen[id]) continue;
        if (o.tail(id) != v) continue;
        int w = o.head(id);
        if (vis[w]) continue;
        vis[w] = true;
        via[w] = id;
        if (w == t) {
          std::vector<int> path;
          for (int x = t; x != s;) {
            path.push_back(via[x]);
            x = o.tail(via[x]);
          }
          return path;
        }
        bfs.push_back(w);
      }
    }
    return {};
  };

  while (head < queue.size()) {
    if (visits >= caps.walk_visits) {
      truncated = true;
      break;
    }
    Orientation D = queue[head++];
    ++visits;
    if (try_orientation(D)) return verdict;

    auto out = D.out_degrees();
    // Degree-shifting moves: reverse a shortest path v -> w into slack at w.
    for (int w = 1; w <= g.vertex_count(); ++w) {
      if (out[w] >= degree_cap[w]) continue;
      for (int v = 1; v <= g.vertex_count(); ++v) {
        if (v == w || out[v] == 0) continue;
        std::vector<int> path = shortest_path(D, v, w, 0);
        if (!path.empty()) push_neighbor(D.reversed(path));
      }
    }
    // Degree-preserving moves: close each arc into a shortest cycle.
    for (int id = 1; id <= m; ++id) {
      if (frozen[id]) continue;
      std::vector<int> back = shortest_path(D, D.head(id), D.tail(id), id);
      if (!back.empty()) {
        back.push_back(id);
        push_neighbor(D.reversed(back));
      }
    }
  }
  return inconclusive((caps_hit || truncated) ? InconclusiveReason::CapsExceeded
                                              : InconclusiveReason::AllZeroResidue,
                      truncated ? "walk budget exhausted" : "");
}

// ---- serialization ----------------------------------------------------------

inline json evidence_to_json(const EulerEvidence& ev) {
  if (ev.bipartite_shortcut) return json{{"bipartite", true}, {"odd", 0}};
  if (!ev.counted) return json{{"bipartite", false}};
  return eulerian_difference_to_json(*ev.counted);
}

inline json certificate_to_json(const Certificate& c) {
  json prov = json::array();
  for (std::size_t i = 0; i < c.provenance.size(); ++i)
    prov.push_back(json{{"edge", static_cast<int>(i) + 1},
                        {"from", c.provenance[i].first},
                        {"part", c.provenance[i].second}});
  json out{{"mode", std::string(1, to_char(c.mode))},
           {"lifted", c.lifted},
           {"original", assignment_to_json(c.original)},
           {"worked", assignment_to_json(c.worked)},
           {"provenance", std::move(prov)},
           {"orientation", orientation_to_json(c.orientation)},
           {"evidence", evidence_to_json(c.evidence)}};
  json degrees = json::array();
  auto outdeg = c.orientation.out_degrees();
  for (int v = 1; v <= c.worked.graph().vertex_count(); ++v)
    degrees.push_back(json{{"v", v},
                           {"out", outdeg[v]},
                           {"list", c.worked.lists().list_size(v)}});
  out["degrees"] = std::move(degrees);
  if (!c.sigma.empty()) {
    json sig = json::array();
    for (std::size_t id = 1; id < c.sigma.size(); ++id) sig.push_back(c.sigma[id]);
    out["sigma"] = std::move(sig);
  }
  if (c.sign_data) out["sign_data"] = sign_data_to_json(*c.sign_data);
  return out;
}

inline json verdict_to_json(const Verdict& v) {
  json out{{"outcome", v.certified ? "certified" : "inconclusive"},
           {"mode", to_string(v.requested_mode)},
           {"strategy", to_string(v.strategy)}};
  if (!v.note.empty()) out["note"] = v.note;
  if (v.reason) out["reason"] = to_string(*v.reason);
  if (v.certificate) out["certificate"] = certificate_to_json(*v.certificate);
  return out;
}

struct ReplayReport {
  bool reproduced = false;
  std::vector<std::string> failures;
};

// Recomputes every claim in a certificate: the lift, the class, the degree
// bounds, and the Eulerian evidence.
// Accepts either a bare certificate or a whole verdict (the certificate is
// then taken from its "certificate" member).
inline ReplayReport replay(const json& certificate_or_verdict,
                           const Caps& caps = Caps::defaults()) {
  ReplayReport rep;
  auto fail = [&](const std::string& s) { rep.failures.push_back(s); };
  if (certificate_or_verdict.contains("outcome") &&
      !certificate_or_verdict.contains("certificate")) {
    fail("verdict carries no certificate");
    return rep;
  }
  const json& certificate = certificate_or_verdict.contains("certificate")
                                ? certificate_or_verdict.at("certificate")
                                : certificate_or_verdict;
  try {
    CoverMode mode;
    std::string ms = certificate.at("mode").get<std::string>();
    if (ms == "g")
      mode = CoverMode::Good;
    else if (ms == "s")
      mode = CoverMode::Signable;
    else if (ms == "z")
      mode = CoverMode::ZSignable;
    else
      throw JsonError("unknown cover mode '" + ms + "'");

    CorrespondenceAssignment original = assignment_from_json(certificate.at("original"));
    CorrespondenceAssignment worked = assignment_from_json(certificate.at("worked"));
    bool lifted = certificate.at("lifted").get<bool>();

    if (lifted) {
      LiftResult lr = lift(original, mode, caps.zsign_pairs);
      if (!(lr.assignment == worked)) fail("lift does not reproduce the worked assignment");
      json prov = json::array();
      for (std::size_t i = 0; i < lr.provenance.size(); ++i)
        prov.push_back(json{{"edge", static_cast<int>(i) + 1},
                            {"from", lr.provenance[i].first},
                            {"part", lr.provenance[i].second}});
      if (prov != certificate.at("provenance")) fail("provenance mismatch");
    } else if (!(original == worked)) {
      fail("certificate claims no lift but original and worked differ");
    }

    Orientation D = orientation_from_json(certificate.at("orientation"), worked.graph());
    AssignmentClassification ac = classify_assignment(worked, D);
    if (ac.cls > mode_class(mode))
      fail("worked assignment is not in class " + std::string(1, to_char(mode)));

    auto outdeg = D.out_degrees();
    for (int v = 1; v <= worked.graph().vertex_count(); ++v)
      if (outdeg[v] + 1 > worked.lists().list_size(v))
        fail("degree bound fails at vertex " + std::to_string(v));
    for (const json& row : certificate.at("degrees")) {
      int v = row.at("v").get<int>();
      if (row.at("out").get<int>() != outdeg[v]) fail("claimed out-degree mismatch");
      if (row.at("list").get<int>() != worked.lists().list_size(v))
        fail("claimed list size mismatch");
    }

    detail::Evaluation ev = detail::evaluate_orientation(worked, D, mode, caps);
    const json& evidence = certificate.at("evidence");
    if (evidence.contains("bipartite") && evidence.at("bipartite").get<bool>()) {
      if (!worked.field().is_rationals())
        fail("bipartite shortcut claimed over a prime field");
      Digraph aux;
      if (mode == CoverMode::Good) {
        aux = D.to_digraph();
      } else if (mode == CoverMode::Signable) {
        aux = build_d_sigma(D, ev.sigma).digraph();
      } else {
        if (!ev.sign_data) throw Error("sign data missing on replay");
        aux = build_d_sigma_phi(D, *ev.sign_data).digraph();
      }
      if (!is_bipartite(underlying_graph(aux)).bipartite)
        fail("underlying auxiliary graph is not bipartite");
    } else {
      if (ev.cap_hit) {
        fail("recount exceeds caps");
      } else if (!ev.evidence.counted) {
        fail("no counted evidence on replay");
      } else {
        const EulerianDifference& d = *ev.evidence.counted;
        if (integer_from_json(evidence.at("even")) != d.counts.even ||
            integer_from_json(evidence.at("odd")) != d.counts.odd)
          fail("eulerian counts do not replay");
        if (d.is_zero) fail("replayed residue is zero");
      }
    }
  } catch (const std::exception& e) {
    fail(std::string("replay error: ") + e.what());
  }
  rep.reproduced = rep.failures.empty();
  return rep;
}

inline json replay_report_to_json(const ReplayReport& r) {
  return json{{"reproduced", r.reproduced}, {"failures", r.failures}};
}

// ---- cross validation --------------------------------------------------------

struct CrossValidateReport {
  int trials = 0;
  int certified = 0;
  int solver_agreements = 0;
  int identity_checks = 0;
  int cor45_checks = 0;
  int factorization_checks = 0;
  int replays = 0;
  std::vector<std::string> discrepancies;
};

inline json cross_validate_report_to_json(const CrossValidateReport& r) {
  return json{{"trials", r.trials},
              {"certified", r.certified},
              {"solver_agreements", r.solver_agreements},
              {"identity_checks", r.identity_checks},
              {"cor45_checks", r.cor45_checks},
              {"factorization_checks", r.factorization_checks},
              {"replays", r.replays},
              {"discrepancies", r.discrepancies}};
}

// Seeded random stress test. Per trial (fields rotate):
//   - certify(auto, bounded-first); when certified the brute-force solver
//     must find a coloring and the certificate must replay;
//   - the coefficient identity on a random orientation and sign data
//     (exact over Q, mod p otherwise), plus the sigma-digraph comparison
//     when every phi_plus is 1;
//   - over GF(p), the Eulerian residue must not depend on the sigma
//     factorization choice.
inline CrossValidateReport cross_validate(std::uint64_t seed, int trials,
                                          const std::vector<FieldSpec>& fields,
                                          const Caps& caps = Caps::defaults()) {
  if (fields.empty()) throw Error("cross_validate needs at least one field");
  CrossValidateReport rep;
  rep.trials = trials;
  // Gadget digraphs on <= 7 edges with phi_plus <= 3 stay tiny even when the
  // arc count exceeds the CLI default, so counting gets a wider cap here.
  Caps wide = caps;
  wide.euler_arcs = std::max(wide.euler_arcs, 64);

  for (int t = 0; t < trials; ++t) {
    const FieldSpec& spec = fields[t % fields.size()];
    Rng rng(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(t + 1));
    auto complain = [&](const std::string& what) {
      rep.discrepancies.push_back("trial " + std::to_string(t) + " (" + spec.describe() +
                                  "): " + what);
    };

    CorrespondenceAssignment A = random_assignment(rng, spec, 5, 7, 3);

    Caps certify_caps = caps;
    certify_caps.euler_arcs = std::max(caps.euler_arcs, 40);
    Verdict v = certify(Instance{A, std::nullopt}, CertifyMode::Auto,
                        SearchStrategy::BoundedFirst, certify_caps);
    if (v.certified) {
      ++rep.certified;
      SolveResult s = solve(A, caps.solver_budget);
      if (s.status != SolveStatus::Found) {
        complain("certified but solver reports " + std::string(to_string(s.status)));
      } else if (!check_coloring(A, s.coloring).valid) {
        complain("solver coloring fails validation");
      } else {
        ++rep.solver_agreements;
      }
      ReplayReport rr = replay(certificate_to_json(*v.certificate), certify_caps);
      if (!rr.reproduced)
        complain("certificate replay failed: " + rr.failures.front());
      else
        ++rep.replays;
    }

    // Identity spot check on an independent orientation and sign data.
    bool unit_only = t % 2 == 0;
    Orientation D = random_orientation(rng, A.graph());
    SignData S = random_sign_data(rng, D, spec, unit_only ? 1 : 3);
    IdentityReport ir = verify_identity(D, S, spec, wide);
    ++rep.identity_checks;
    if (spec.is_rationals() ? !ir.equal_exact : !ir.equal_in_field)
      complain("coefficient identity fails");

    if (unit_only) {
      std::vector<int> sigma(A.graph().edge_count() + 1, 1);
      for (const Edge& e : A.graph().edges()) sigma[e.id] = S.entries[e.id].sigma;
      EulerianCount via_sigma =
          count_eulerian(build_d_sigma(D, sigma).digraph(), wide.euler_arcs);
      if (!(via_sigma == ir.counts))
        complain("sigma digraph counts disagree with gadget digraph");
      else
        ++rep.cor45_checks;
    }

    if (spec.is_prime_field()) {
      SignData S2{spec, D, std::vector<SignEntry>(A.graph().edge_count() + 1)};
      for (const Edge& e : A.graph().edges()) {
        const SignEntry& old = S.entries[e.id];
        int flip = rng.coin() ? old.sigma : -old.sigma;
        S2.entries[e.id] = make_sign_entry(spec, old.phi, old.a, flip);
      }
      EulerianDifference d2 = eulerian_difference(
          build_d_sigma_phi(D, S2).digraph(), spec, wide.euler_arcs);
      ++rep.factorization_checks;
      if (d2.residue != spec.reduce_integer(ir.difference))
        complain("residue depends on the sigma factorization");
    }
  }
  return rep;
}

}  // namespace dporient
