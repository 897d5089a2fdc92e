#include <catch2/catch_amalgamated.hpp>

#include "dporient/euler.hpp"
#include "dporient/aux_digraph.hpp"
#include "dporient/random_gen.hpp"
#include "oracles.hpp"

using namespace dporient;

TEST_CASE("closed form counts") {
  // empty digraph: the empty selection only
  CHECK(count_eulerian(Digraph(1, {})) == EulerianCount{1, 0});
  // a single arc can never balance
  CHECK(count_eulerian(Digraph(2, {{1, 2}})) == EulerianCount{1, 0});
  // 2-cycle: empty and the full cycle, both even
  CHECK(count_eulerian(Digraph(2, {{1, 2}, {2, 1}})) == EulerianCount{2, 0});
  // directed triangle: empty (even) and the 3-cycle (odd)
  CHECK(count_eulerian(Digraph(3, {{1, 2}, {2, 3}, {3, 1}})) == EulerianCount{1, 1});
  // two disjoint 2-cycles multiply
  CHECK(count_eulerian(Digraph(4, {{1, 2}, {2, 1}, {3, 4}, {4, 3}})) ==
        EulerianCount{4, 0});
  // doubled 2-cycle: pick i arcs each way, sum of C(2,i)^2 = 6, all even
  CHECK(count_eulerian(Digraph(2, {{1, 2}, {1, 2}, {2, 1}, {2, 1}})) ==
        EulerianCount{6, 0});
}

TEST_CASE("oracle agreement on random digraphs") {
  Rng rng(90210);
  for (int t = 0; t < 100; ++t) {
    Multigraph g = random_multigraph(rng, 2, 5, 1, 12);
    Digraph d = random_orientation(rng, g).to_digraph();
    CHECK(count_eulerian(d) == oracles::naive_eulerian(d));
  }
}

TEST_CASE("arc cap") {
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < 31; ++i) arcs.push_back({1, 2});
  CHECK_THROWS_AS(count_eulerian(Digraph(2, arcs)), CapExceeded);

  Digraph small(2, {{1, 2}, {2, 1}, {1, 2}, {2, 1}, {1, 2}});
  CHECK_THROWS_AS(count_eulerian(small, 4), CapExceeded);
  CHECK_NOTHROW(count_eulerian(small, 5));
}

TEST_CASE("difference residues") {
  Digraph two_cycle(2, {{1, 2}, {2, 1}});
  auto dq = eulerian_difference(two_cycle, FieldSpec::rationals());
  CHECK(dq.difference == 2);
  CHECK(!dq.is_zero);
  auto d2 = eulerian_difference(two_cycle, FieldSpec::prime(2));
  CHECK(d2.difference == 2);
  CHECK(d2.residue == 0);
  CHECK(d2.is_zero);
  auto d3 = eulerian_difference(two_cycle, FieldSpec::prime(3));
  CHECK(d3.residue == 2);
  CHECK(!d3.is_zero);

  Digraph triangle(3, {{1, 2}, {2, 3}, {3, 1}});
  CHECK(eulerian_difference(triangle, FieldSpec::rationals()).is_zero);
}

namespace {

SignData plain_sign_data(const FieldSpec& spec, const Orientation& D,
                         const std::vector<std::pair<int, int>>& sigma_phi) {
  SignData S{spec, D, std::vector<SignEntry>(sigma_phi.size() + 1)};
  for (std::size_t i = 0; i < sigma_phi.size(); ++i) {
    auto [sigma, phi_plus] = sigma_phi[i];
    FieldElement phi = spec.canonical(FieldElement(sigma) * FieldElement(phi_plus));
    S.entries[i + 1] = make_sign_entry(spec, phi, FieldElement(0), sigma);
  }
  return S;
}

}  // namespace

TEST_CASE("identity on hand checked cases") {
  FieldSpec q = FieldSpec::rationals();
  Multigraph g(2, {{1, 2}, {1, 2}});
  Orientation D(g, {true, false});  // a 2-cycle

  // (x1 - x2)(x2 - x1): [x1 x2] = 2, gadgets give EE=2 EO=0
  auto rep = verify_identity(D, plain_sign_data(q, D, {{1, 1}, {1, 1}}), q);
  CHECK(rep.coefficient_raw == 2);
  CHECK(rep.counts == EulerianCount{2, 0});
  CHECK(rep.equal_exact);
  CHECK(rep.equal_in_field);

  // flip edge 2 negative: (x1 - x2)(x2 + x1), [x1 x2] = 0, odd gamma-path
  auto rep2 = verify_identity(D, plain_sign_data(q, D, {{1, 1}, {-1, 1}}), q);
  CHECK(rep2.coefficient_raw == 0);
  CHECK(rep2.counts == EulerianCount{1, 1});
  CHECK(rep2.equal_exact);

  // multiplicity 2: (x1 - 2 x2)(x2 - x1), [x1 x2] = 1 + 2 = 3
  auto rep3 = verify_identity(D, plain_sign_data(q, D, {{1, 2}, {1, 1}}), q);
  CHECK(rep3.coefficient_raw == 3);
  CHECK(rep3.difference == 3);
  CHECK(rep3.equal_exact);
}

TEST_CASE("identity on random sign data") {
  Caps caps;
  caps.euler_arcs = 64;
  for (const FieldSpec& spec :
       {FieldSpec::rationals(), FieldSpec::prime(3), FieldSpec::prime(5)}) {
    Rng rng(1400 + (spec.is_rationals() ? 0 : spec.modulus()));
    for (int t = 0; t < 60; ++t) {
      Multigraph g = random_multigraph(rng, 2, 5, 1, 6);
      Orientation D = random_orientation(rng, g);
      SignData S = random_sign_data(rng, D, spec, 2);
      IdentityReport rep = verify_identity(D, S, spec, caps);
      CHECK(rep.equal_exact);
      CHECK(rep.equal_in_field);
    }
  }
}

TEST_CASE("unit slopes collapse gadget counts to the sigma digraph") {
  FieldSpec q = FieldSpec::rationals();
  Rng rng(7215);
  for (int t = 0; t < 60; ++t) {
    Multigraph g = random_multigraph(rng, 2, 5, 1, 7);
    Orientation D = random_orientation(rng, g);
    SignData S = random_sign_data(rng, D, q, 1);
    std::vector<int> sigma(g.edge_count() + 1, 1);
    for (const Edge& e : g.edges()) sigma[e.id] = S.entry(e.id).sigma;
    EulerianCount via_sigma = count_eulerian(build_d_sigma(D, sigma).digraph(), 64);
    EulerianCount via_gadgets = count_eulerian(build_d_sigma_phi(D, S).digraph(), 64);
    CHECK(via_sigma == via_gadgets);
  }
}

TEST_CASE("bipartite orientations have no odd eulerian part") {
  Rng rng(66012);
  for (int t = 0; t < 40; ++t) {
    Multigraph g = random_bipartite_multigraph(rng, 2, 6, 1, 10);
    Digraph d = random_orientation(rng, g).to_digraph();
    EulerianCount c = count_eulerian(d);
    CHECK(c.odd == 0);
    CHECK(c.even >= 1);
  }
}
