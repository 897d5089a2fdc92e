#include <catch2/catch_amalgamated.hpp>

#include "dporient/pipeline.hpp"
#include "dporient/fixtures.hpp"
#include "dporient/random_gen.hpp"
#include "dporient/solver.hpp"

using namespace dporient;

namespace {

Caps wide_caps() {
  Caps caps = Caps::defaults();
  caps.euler_arcs = 64;
  return caps;
}

// Stored reading 1 -> 2 has slope 2; the reverse reading has slope 1/2,
// outside <1> over Q, so mode z must keep the edge pointing 1 -> 2.
CorrespondenceAssignment slope_two_edge() {
  FieldSpec Q = FieldSpec::rationals();
  Multigraph g(2, {{1, 2}});
  ListAssignment lists(Q, {{}, {FieldElement(0), FieldElement(2)},
                           {FieldElement(0), FieldElement(1)}});
  std::vector<PartialMatching> ms{{1, 1, 2, {{0, 0}, {2, 1}}}};
  return CorrespondenceAssignment(g, Q, lists, ms);
}

}  // namespace

TEST_CASE("certify fixtures") {
  Caps caps = wide_caps();

  Verdict c4 = certify(fixture_c4_figure(), CertifyMode::Auto,
                       SearchStrategy::BoundedFirst, caps);
  CHECK(!c4.certified);
  REQUIRE(c4.reason.has_value());
  CHECK(*c4.reason == InconclusiveReason::AllZeroResidue);

  Verdict w6 = certify(fixture_w6_lists(), CertifyMode::Auto,
                       SearchStrategy::BoundedFirst, caps);
  CHECK(!w6.certified);
  REQUIRE(w6.reason.has_value());
  CHECK(*w6.reason == InconclusiveReason::AllZeroResidue);

  Verdict sig = certify(fixture_w6_signable(), CertifyMode::Signable,
                        SearchStrategy::BoundedFirst, caps);
  REQUIRE(sig.certified);
  REQUIRE(sig.certificate.has_value());
  CHECK(sig.certificate->mode == CoverMode::Signable);
  CHECK(sig.certificate->evidence.bipartite_shortcut);
  int negatives = 0;
  for (std::size_t e = 1; e < sig.certificate->sigma.size(); ++e)
    if (sig.certificate->sigma[e] == -1) ++negatives;
  CHECK(negatives == 3);

  Verdict dbl = certify(fixture_c4_doubled(), CertifyMode::Auto,
                        SearchStrategy::BoundedFirst, caps);
  REQUIRE(dbl.certified);
  CHECK(dbl.certificate->evidence.bipartite_shortcut);
  CHECK(!dbl.certificate->lifted);
  // the pinned orientation is honored
  CHECK(dbl.certificate->orientation.direction_bits() ==
        std::vector<bool>{true, true, true, false, true});

  Verdict k2 = certify(fixture_k2_signed(), CertifyMode::Auto,
                       SearchStrategy::BoundedFirst, caps);
  CHECK(k2.certified);

  Verdict tor = certify(fixture_toroidal_grid(2, 5), CertifyMode::Good,
                        SearchStrategy::BoundedFirst, caps);
  REQUIRE(tor.certified);
  CHECK(tor.certificate->lifted);
  CHECK(tor.certificate->worked.graph().edge_count() == 40);
  CHECK(tor.certificate->evidence.bipartite_shortcut);
}

TEST_CASE("certified instances are colorable") {
  // certification is sound: spot it on the fixtures that certify
  for (const char* name : {"k2_signed", "w6_signable", "c4_doubled"}) {
    Instance inst = gen_fixture(name);
    Verdict v = certify(inst, CertifyMode::Auto, SearchStrategy::BoundedFirst,
                        wide_caps());
    REQUIRE(v.certified);
    SolveResult r = solve(inst.assignment);
    REQUIRE(r.status == SolveStatus::Found);
    CHECK(check_coloring(inst.assignment, r.coloring).valid);
  }
}

TEST_CASE("bounded first never certifies what exhaustive rejects") {
  Caps caps = wide_caps();
  for (const FieldSpec& spec : {FieldSpec::rationals(), FieldSpec::prime(3)}) {
    Rng rng(9106 + (spec.is_rationals() ? 0 : 3));
    int certified = 0;
    for (int t = 0; t < 40; ++t) {
      CorrespondenceAssignment A = random_assignment(rng, spec, 4, 5, 3);
      Instance inst{A, std::nullopt};
      Verdict bounded =
          certify(inst, CertifyMode::Auto, SearchStrategy::BoundedFirst, caps);
      Verdict exhaustive =
          certify(inst, CertifyMode::Auto, SearchStrategy::Exhaustive, caps);
      if (bounded.certified) {
        CHECK(exhaustive.certified);
        ++certified;
      }
      if (exhaustive.certified) {
        // soundness against the solver on every certified case
        CHECK(solve(A).status == SolveStatus::Found);
      }
    }
    CHECK(certified > 5);
  }
}

TEST_CASE("mode z freezes non unit slopes") {
  CorrespondenceAssignment A = slope_two_edge();
  Instance inst{A, std::nullopt};
  Verdict v = certify(inst, CertifyMode::ZSignable, SearchStrategy::BoundedFirst,
                      wide_caps());
  REQUIRE(v.certified);
  REQUIRE(v.certificate.has_value());
  CHECK(!v.certificate->lifted);
  // only the tail-1 reading has an integral slope, so the edge is frozen 1 -> 2
  CHECK(v.certificate->orientation.tail(1) == 1);
  REQUIRE(v.certificate->sign_data.has_value());
  CHECK(v.certificate->sign_data->entry(1).phi_plus == FieldElement(2));
  REQUIRE(v.certificate->sigma.size() == 2);
  CHECK(v.certificate->sigma[1] == 1);

  // a stored orientation against the frozen direction is not usable in mode z
  Orientation flipped = Orientation::all_forward(A.graph()).reversed({1});
  Verdict bad = certify(Instance{A, flipped}, CertifyMode::ZSignable,
                        SearchStrategy::BoundedFirst, wide_caps());
  CHECK(!bad.certified);
  REQUIRE(bad.reason.has_value());
  CHECK(*bad.reason == InconclusiveReason::ClassNotApplicable);
}

TEST_CASE("prime fields certify with counted evidence") {
  FieldSpec f3 = FieldSpec::prime(3);
  Multigraph g(3, {{1, 2}, {2, 3}, {3, 1}});
  std::vector<FieldElement> colors{0, 1, 2};
  std::vector<PartialMatching> ms;
  for (const Edge& e : g.edges())
    ms.push_back({e.id, e.u, e.v, detail::straight_pairs(colors)});
  CorrespondenceAssignment A(
      g, f3,
      ListAssignment(f3, {{}, colors, colors, colors}), ms);

  Verdict v = certify(Instance{A, std::nullopt}, CertifyMode::Auto,
                      SearchStrategy::BoundedFirst, wide_caps());
  REQUIRE(v.certified);
  REQUIRE(v.certificate.has_value());
  CHECK(!v.certificate->evidence.bipartite_shortcut);
  REQUIRE(v.certificate->evidence.counted.has_value());
  CHECK(v.certificate->evidence.counted->residue != 0);
}

TEST_CASE("degree caps can rule out every orientation") {
  FieldSpec Q = FieldSpec::rationals();
  Multigraph g(2, {{1, 2}});
  ListAssignment lists(Q, {{}, {FieldElement(0)}, {FieldElement(0)}});
  std::vector<PartialMatching> ms{{1, 1, 2, {{0, 0}}}};
  CorrespondenceAssignment A(g, Q, lists, ms);

  Verdict free = certify(Instance{A, std::nullopt}, CertifyMode::Good,
                         SearchStrategy::BoundedFirst, wide_caps());
  CHECK(!free.certified);
  CHECK(*free.reason == InconclusiveReason::NoFeasibleOrientation);

  Verdict pinned = certify(Instance{A, Orientation::all_forward(g)},
                           CertifyMode::Good, SearchStrategy::BoundedFirst,
                           wide_caps());
  CHECK(!pinned.certified);
  CHECK(*pinned.reason == InconclusiveReason::NoFeasibleOrientation);
}

TEST_CASE("replay reproduces and catches tampering") {
  Caps caps = wide_caps();
  Verdict sig = certify(fixture_w6_signable(), CertifyMode::Signable,
                        SearchStrategy::BoundedFirst, caps);
  REQUIRE(sig.certified);
  json verdict_json = verdict_to_json(sig);
  CHECK(replay(verdict_json, caps).reproduced);
  // a bare certificate is accepted too
  json cert = certificate_to_json(*sig.certificate);
  CHECK(replay(cert, caps).reproduced);

  json bad_degrees = cert;
  bad_degrees["degrees"][0]["out"] = 9;
  ReplayReport r1 = replay(bad_degrees, caps);
  CHECK(!r1.reproduced);
  CHECK(!r1.failures.empty());

  json bad_orientation = cert;
  int old_tail = bad_orientation["orientation"]["tails"][0];
  bad_orientation["orientation"]["tails"][0] = old_tail == 1 ? 2 : 1;
  CHECK(!replay(bad_orientation, caps).reproduced);
}

TEST_CASE("replay rechecks counted evidence") {
  FieldSpec f3 = FieldSpec::prime(3);
  Multigraph g(3, {{1, 2}, {2, 3}, {3, 1}});
  std::vector<FieldElement> colors{0, 1, 2};
  std::vector<PartialMatching> ms;
  for (const Edge& e : g.edges())
    ms.push_back({e.id, e.u, e.v, detail::straight_pairs(colors)});
  CorrespondenceAssignment A(
      g, f3, ListAssignment(f3, {{}, colors, colors, colors}), ms);
  Verdict v = certify(Instance{A, std::nullopt}, CertifyMode::Auto,
                      SearchStrategy::BoundedFirst, wide_caps());
  REQUIRE(v.certified);
  json cert = certificate_to_json(*v.certificate);
  CHECK(replay(cert, wide_caps()).reproduced);

  json tampered = cert;
  tampered["evidence"]["even"] =
      tampered["evidence"]["even"].get<long long>() + 3;
  CHECK(!replay(tampered, wide_caps()).reproduced);
}

TEST_CASE("instance json round trip") {
  for (const char* name : {"c4_figure", "c4_doubled", "w6_signable"}) {
    Instance inst = gen_fixture(name);
    json j = instance_to_json(inst);
    Instance back = instance_from_json(j);
    CHECK(instance_to_json(back) == j);
    CHECK(back.orientation.has_value() == inst.orientation.has_value());
  }
}

TEST_CASE("cross validation stays clean on small runs") {
  CrossValidateReport q =
      cross_validate(424242, 12, {FieldSpec::rationals()}, Caps::defaults());
  CHECK(q.trials == 12);
  CHECK(q.discrepancies.empty());
  CHECK(q.identity_checks == 12);
  CHECK(q.replays == q.certified);

  CrossValidateReport f3 =
      cross_validate(515151, 10, {FieldSpec::prime(3)}, Caps::defaults());
  CHECK(f3.trials == 10);
  CHECK(f3.discrepancies.empty());
  CHECK(f3.factorization_checks > 0);
}
