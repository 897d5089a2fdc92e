// Acceptance harness: one line per criterion, exit code = number of
// failures. Each criterion is self-contained and seeded, so a failure
// reproduces exactly.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dporient/dporient.hpp"
#include "oracles.hpp"

using namespace dporient;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  std::string name;
  double limit_seconds;  // 0 = no stated limit
  std::function<bool(std::string&)> run;
};

Caps wide_caps() {
  Caps caps = Caps::defaults();
  caps.euler_arcs = 64;
  return caps;
}

bool crit_solve_c4(std::string& why) {
  SolveResult r = solve(fixture_c4_figure().assignment);
  if (r.status != SolveStatus::Absent) {
    why = std::string("expected absent, got ") + to_string(r.status);
    return false;
  }
  return true;
}

bool crit_solve_w6(std::string& why) {
  SolveResult r = solve(fixture_w6_lists().assignment);
  if (r.status != SolveStatus::Absent) {
    why = std::string("expected absent, got ") + to_string(r.status);
    return false;
  }
  return true;
}

bool crit_identity(std::string& why) {
  Caps caps = wide_caps();
  for (const FieldSpec& spec :
       {FieldSpec::rationals(), FieldSpec::prime(3), FieldSpec::prime(5)}) {
    Rng rng(30001 + (spec.is_rationals() ? 0 : spec.modulus()));
    for (int t = 0; t < 200; ++t) {
      Multigraph g = random_multigraph(rng, 2, 5, 1, 7);
      Orientation D = random_orientation(rng, g);
      SignData S = random_sign_data(rng, D, spec, 3);
      IdentityReport rep = verify_identity(D, S, spec, caps);
      if (!rep.equal_exact || !rep.equal_in_field) {
        why = "trial " + std::to_string(t) + " over " + spec.describe() +
              ": coefficient " + to_string(rep.coefficient_raw) + " vs EE-EO " +
              to_string(rep.difference);
        return false;
      }
    }
  }
  return true;
}

bool crit_unit_slopes(std::string& why) {
  FieldSpec q = FieldSpec::rationals();
  Rng rng(30100);
  for (int t = 0; t < 100; ++t) {
    Multigraph g = random_multigraph(rng, 2, 5, 1, 7);
    Orientation D = random_orientation(rng, g);
    SignData S = random_sign_data(rng, D, q, 1);
    std::vector<int> sigma(g.edge_count() + 1, 1);
    for (const Edge& e : g.edges()) sigma[e.id] = S.entry(e.id).sigma;
    EulerianCount a = count_eulerian(build_d_sigma(D, sigma).digraph(), 64);
    EulerianCount b = count_eulerian(build_d_sigma_phi(D, S).digraph(), 64);
    if (!(a == b)) {
      why = "trial " + std::to_string(t) + ": sigma digraph (" +
            to_string(a.even) + "," + to_string(a.odd) + ") vs gadgets (" +
            to_string(b.even) + "," + to_string(b.odd) + ")";
      return false;
    }
  }
  return true;
}

bool crit_all_good_collapse(std::string& why) {
  Rng rng(30200);
  for (int t = 0; t < 100; ++t) {
    Multigraph g = random_multigraph(rng, 2, 6, 1, 9);
    Orientation D = random_orientation(rng, g);
    std::vector<int> sigma(g.edge_count() + 1, 1);
    if (!(build_d_sigma(D, sigma).digraph() == D.to_digraph())) {
      why = "trial " + std::to_string(t) + ": arc sets differ";
      return false;
    }
  }
  return true;
}

bool crit_bipartite(std::string& why) {
  Rng rng(30300);
  for (int t = 0; t < 100; ++t) {
    Multigraph g = random_bipartite_multigraph(rng, 2, 7, 1, 16);
    Digraph d = random_orientation(rng, g).to_digraph();
    EulerianCount c = count_eulerian(d);
    if (c.odd != 0 || c.even < 1) {
      why = "trial " + std::to_string(t) + ": EE=" + to_string(c.even) +
            " EO=" + to_string(c.odd);
      return false;
    }
  }
  return true;
}

bool crit_omega_oracles(std::string& why) {
  for (const FieldSpec& spec : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
    Rng rng(30400 + (spec.is_rationals() ? 0 : 5));
    for (int t = 0; t < 200; ++t) {
      int nl = rng.range(2, 8), nr = rng.range(2, 8);
      std::vector<FieldElement> lu, lv;
      int pool = spec.is_prime_field() ? 4 : 9;
      for (int c = 0; c <= pool && static_cast<int>(lu.size()) < nl; ++c)
        lu.emplace_back(c);
      for (int c = 0; c <= pool && static_cast<int>(lv.size()) < nr; ++c)
        lv.emplace_back(c);
      std::vector<ColorPair> pairs = random_matching_pairs(rng, lu, lv);
      if (static_cast<int>(pairs.size()) > 8) pairs.resize(8);

      struct Case {
        CoverMode mode;
        EdgeClass target;
      };
      for (Case c : {Case{CoverMode::Good, EdgeClass::Good},
                     Case{CoverMode::Signable, EdgeClass::Signable},
                     Case{CoverMode::ZSignable, EdgeClass::ZSignable}}) {
        MatchingCover mc = matching_cover(spec, pairs, c.mode);
        int want = oracles::min_cover_partition(spec, pairs, c.target);
        if (mc.k() != want) {
          why = "trial " + std::to_string(t) + " over " + spec.describe() +
                " mode " + std::string(1, to_char(c.mode)) + ": omega " +
                std::to_string(mc.k()) + " vs partition minimum " +
                std::to_string(want);
          return false;
        }
      }
    }
  }
  return true;
}

bool crit_lift_transport(std::string& why) {
  FieldSpec q = FieldSpec::rationals();
  Rng rng(30500);
  for (int t = 0; t < 100; ++t) {
    CorrespondenceAssignment A = random_assignment(rng, q, 5, 6, 3);
    bool base = solve(A).status == SolveStatus::Found;
    for (CoverMode mode :
         {CoverMode::Good, CoverMode::Signable, CoverMode::ZSignable}) {
      LiftResult lr = lift(A, mode);
      bool lifted = solve(lr.assignment).status == SolveStatus::Found;
      if (base != lifted) {
        why = "trial " + std::to_string(t) + " mode " +
              std::string(1, to_char(mode)) + ": original " +
              (base ? "colorable" : "uncolorable") + ", lift disagrees";
        return false;
      }
    }
  }
  return true;
}

bool crit_toroidal(std::string& why) {
  Verdict v = certify(fixture_toroidal_grid(2, 30601), CertifyMode::Good,
                      SearchStrategy::BoundedFirst, wide_caps());
  if (!v.certified || !v.certificate) {
    why = "toroidal_grid(2) did not certify in mode good";
    return false;
  }
  const Certificate& cert = *v.certificate;
  auto out = cert.orientation.out_degrees();
  int n = cert.worked.graph().vertex_count();
  for (int vert = 1; vert <= n; ++vert) {
    int cap = (vert - 1) % 2 == 0 ? 3 : 2;
    if (out[vert] > cap) {
      why = "vertex " + std::to_string(vert) + " has out-degree " +
            std::to_string(out[vert]) + " > " + std::to_string(cap);
      return false;
    }
  }
  bool no_odd = cert.evidence.bipartite_shortcut ||
                (cert.evidence.counted && cert.evidence.counted->counts.odd == 0);
  if (!no_odd) {
    why = "certificate evidence admits odd Eulerian subdigraphs";
    return false;
  }
  for (std::uint64_t s = 1; s <= 25; ++s) {
    Instance inst = fixture_toroidal_grid(2, s);
    SolveResult r = solve(inst.assignment);
    if (r.status != SolveStatus::Found ||
        !check_coloring(inst.assignment, r.coloring).valid) {
      why = "seed " + std::to_string(s) + ": solver found no valid coloring";
      return false;
    }
  }
  return true;
}

bool crit_cross_validate(std::string& why) {
  for (const FieldSpec& spec : {FieldSpec::rationals(), FieldSpec::prime(3)}) {
    CrossValidateReport rep = cross_validate(
        30700 + (spec.is_rationals() ? 0 : 3), 200, {spec}, Caps::defaults());
    if (!rep.discrepancies.empty()) {
      why = "over " + spec.describe() + ": " + rep.discrepancies.front();
      return false;
    }
    if (rep.trials != 200) {
      why = "over " + spec.describe() + ": ran " + std::to_string(rep.trials) +
            " trials";
      return false;
    }
  }
  return true;
}

bool crit_euler_oracle(std::string& why) {
  Rng rng(30800);
  for (int t = 0; t < 100; ++t) {
    Multigraph g = random_multigraph(rng, 2, 5, 1, 12);
    Digraph d = random_orientation(rng, g).to_digraph();
    EulerianCount fast = count_eulerian(d);
    EulerianCount naive = oracles::naive_eulerian(d);
    if (!(fast == naive)) {
      why = "trial " + std::to_string(t) + ": pruned (" + to_string(fast.even) +
            "," + to_string(fast.odd) + ") vs naive (" + to_string(naive.even) +
            "," + to_string(naive.odd) + ")";
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"solve(c4_figure) reports absent", 1.0, crit_solve_c4},
      {"solve(w6_lists) reports absent", 1.0, crit_solve_w6},
      {"coefficient identity on 200 random instances per field (Q, GF(3), GF(5))",
       120.0, crit_identity},
      {"unit slopes: sigma digraph counts match gadget counts, 100 instances",
       60.0, crit_unit_slopes},
      {"all-positive sign data leaves the digraph unchanged, 100 instances", 0,
       crit_all_good_collapse},
      {"bipartite orientations: EO = 0 and EE >= 1, 100 instances", 0,
       crit_bipartite},
      {"cover numbers match set-partition minima, 200 matchings per field (Q, GF(5))",
       0, crit_omega_oracles},
      {"lifts preserve colorability in all three modes, 100 instances", 0,
       crit_lift_transport},
      {"toroidal_grid(2): certified in mode good, degree bounds, no odd part, "
       "25 seeds colorable",
       120.0, crit_toroidal},
      {"cross-validation: 200 clean trials per field family (Q, GF(3))", 0,
       crit_cross_validate},
      {"eulerian counts match the 2^m oracle, 100 digraphs", 0,
       crit_euler_oracle},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    std::string why;
    auto t0 = Clock::now();
    bool ok = false;
    try {
      ok = c.run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (ok && c.limit_seconds > 0 && secs > c.limit_seconds) {
      ok = false;
      why = "over time limit of " + std::to_string(c.limit_seconds) + "s";
    }
    std::printf("%s | %2zu | %-85s | %7.2fs%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                c.name.c_str(), secs, why.empty() ? "" : " | ", why.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures == 0)
    std::printf("all %zu acceptance criteria hold\n", criteria.size());
  else
    std::printf("%d of %zu acceptance criteria failed\n", failures,
                criteria.size());
  return failures;
}
