#include <catch2/catch_amalgamated.hpp>

#include "dporient/field.hpp"

using namespace dporient;

TEST_CASE("rational parsing and printing round trip") {
  CHECK(to_string(parse_rational("3/4")) == "3/4");
  CHECK(to_string(parse_rational("-7")) == "-7");
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-6/-4")) == "3/2");
  CHECK(to_string(FieldElement(0)) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), FieldError);
  CHECK_THROWS_AS(parse_rational("abc"), FieldError);
  CHECK_THROWS_AS(parse_rational(""), FieldError);
}

TEST_CASE("integer helpers") {
  CHECK(is_integral(FieldElement(5)));
  CHECK(!is_integral(parse_rational("5/2")));
  CHECK(numerator(parse_rational("-6/4")) == -3);
  CHECK(denominator(parse_rational("-6/4")) == 2);
}

TEST_CASE("field spec construction") {
  FieldSpec q = FieldSpec::rationals();
  CHECK(q.is_rationals());
  CHECK(!q.is_prime_field());
  CHECK(q.describe() == "Q");

  FieldSpec f5 = FieldSpec::prime(5);
  CHECK(f5.is_prime_field());
  CHECK(f5.modulus() == 5);
  CHECK(f5.describe() == "GF(5)");
  CHECK(FieldSpec::prime(2).modulus() == 2);
  CHECK(FieldSpec::prime(31).modulus() == 31);

  CHECK_THROWS_AS(FieldSpec::prime(1), FieldError);
  CHECK_THROWS_AS(FieldSpec::prime(4), FieldError);
  CHECK_THROWS_AS(FieldSpec::prime(91), FieldError);  // 7 * 13
  CHECK_THROWS_AS(FieldSpec::prime(-3), FieldError);
}

TEST_CASE("canonical elements") {
  FieldSpec q = FieldSpec::rationals();
  CHECK(q.is_element(parse_rational("22/7")));
  CHECK(q.canonical(parse_rational("-9/6")) == parse_rational("-3/2"));

  FieldSpec f7 = FieldSpec::prime(7);
  CHECK(f7.is_element(FieldElement(0)));
  CHECK(f7.is_element(FieldElement(6)));
  CHECK(!f7.is_element(FieldElement(7)));
  CHECK(!f7.is_element(FieldElement(-1)));
  CHECK(!f7.is_element(parse_rational("1/2")));
  CHECK(f7.canonical(FieldElement(9)) == FieldElement(2));
  CHECK(f7.canonical(FieldElement(-1)) == FieldElement(6));
  CHECK_THROWS_AS(f7.canonical(parse_rational("1/2")), FieldError);
}

TEST_CASE("field arithmetic") {
  FieldSpec q = FieldSpec::rationals();
  CHECK(q.add(parse_rational("1/2"), parse_rational("1/3")) == parse_rational("5/6"));
  CHECK(q.inv(parse_rational("-2/3")) == parse_rational("-3/2"));
  CHECK_THROWS_AS(q.inv(FieldElement(0)), FieldError);

  FieldSpec f7 = FieldSpec::prime(7);
  CHECK(f7.add(FieldElement(5), FieldElement(4)) == FieldElement(2));
  CHECK(f7.sub(FieldElement(2), FieldElement(5)) == FieldElement(4));
  CHECK(f7.mul(FieldElement(3), FieldElement(5)) == FieldElement(1));
  CHECK(f7.neg(FieldElement(0)) == FieldElement(0));
  CHECK(f7.neg(FieldElement(3)) == FieldElement(4));
  for (int a = 1; a < 7; ++a)
    CHECK(f7.mul(FieldElement(a), f7.inv(FieldElement(a))) == FieldElement(1));
  CHECK_THROWS_AS(f7.inv(FieldElement(0)), FieldError);
  CHECK(f7.div(FieldElement(1), FieldElement(3)) == FieldElement(5));
}

TEST_CASE("residue reduction") {
  FieldSpec f5 = FieldSpec::prime(5);
  CHECK(f5.reduce_integer(Integer(12)) == FieldElement(2));
  CHECK(f5.reduce_integer(Integer(-1)) == FieldElement(4));
  CHECK(f5.is_zero_residue(Integer(10)));
  CHECK(!f5.is_zero_residue(Integer(11)));
  // 3/7 mod 5: 7 = 2, inv(2) = 3, so 3 * 3 = 4.
  CHECK(f5.reduce_rational(parse_rational("3/7")) == FieldElement(4));
  // denominator divisible by p is not a field element
  CHECK_THROWS_AS(f5.reduce_rational(parse_rational("1/5")), FieldError);

  FieldSpec q = FieldSpec::rationals();
  CHECK(q.reduce_rational(parse_rational("3/7")) == parse_rational("3/7"));
  CHECK(q.is_zero_residue(Integer(0)));
  CHECK(!q.is_zero_residue(Integer(3)));
}

TEST_CASE("unit subgroup membership") {
  FieldSpec q = FieldSpec::rationals();
  CHECK(q.in_unit_subgroup(FieldElement(-3)));
  CHECK(q.in_unit_subgroup(FieldElement(0)));
  CHECK(!q.in_unit_subgroup(parse_rational("1/2")));

  FieldSpec f5 = FieldSpec::prime(5);
  for (int a = 0; a < 5; ++a) CHECK(f5.in_unit_subgroup(FieldElement(a)));
}

TEST_CASE("positive factorization over the rationals") {
  FieldSpec q = FieldSpec::rationals();
  auto f = q.positive_factorization(FieldElement(7), std::nullopt);
  CHECK(f.sigma == 1);
  CHECK(f.phi_plus == Integer(7));

  f = q.positive_factorization(FieldElement(-4), std::nullopt);
  CHECK(f.sigma == -1);
  CHECK(f.phi_plus == Integer(4));

  // the sign is forced; a matching override is fine, a contradiction is not
  CHECK(q.positive_factorization(FieldElement(-4), -1).phi_plus == Integer(4));
  CHECK_THROWS_AS(q.positive_factorization(FieldElement(-4), 1), FieldError);
  CHECK_THROWS_AS(q.positive_factorization(FieldElement(0), std::nullopt), FieldError);
  // only <1> members factor here
  CHECK_THROWS_AS(q.positive_factorization(parse_rational("3/2"), std::nullopt),
                  FieldError);
}

TEST_CASE("positive factorization over prime fields") {
  FieldSpec f5 = FieldSpec::prime(5);
  // phi = 3: representatives 3 and -2; the default picks the smaller magnitude
  auto f = f5.positive_factorization(FieldElement(3), std::nullopt);
  CHECK(f.sigma == -1);
  CHECK(f.phi_plus == Integer(2));
  // override selects the other representative
  f = f5.positive_factorization(FieldElement(3), 1);
  CHECK(f.sigma == 1);
  CHECK(f.phi_plus == Integer(3));
  // phi = 2 prefers sigma = 1
  f = f5.positive_factorization(FieldElement(2), std::nullopt);
  CHECK(f.sigma == 1);
  CHECK(f.phi_plus == Integer(2));
  // sigma * phi_plus reduces back to phi in both cases
  for (int phi = 1; phi < 5; ++phi)
    for (int s : {-1, 1}) {
      auto g = f5.positive_factorization(FieldElement(phi), s);
      CHECK(f5.reduce_rational(FieldElement(g.sigma) * FieldElement(g.phi_plus)) ==
            FieldElement(phi));
    }
  CHECK_THROWS_AS(f5.positive_factorization(FieldElement(0), std::nullopt), FieldError);
  // p = 2: the only nonzero element factors with sigma = +1
  auto h = FieldSpec::prime(2).positive_factorization(FieldElement(1), std::nullopt);
  CHECK(h.sigma == 1);
  CHECK(h.phi_plus == Integer(1));
}
