#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "parkfn/core.hpp"
#include "parkfn/errors.hpp"
#include "parkfn/serialize.hpp"
#include "oracles.hpp"

using namespace parkfn;

TEST_CASE("permutation construction validates one-line notation") {
  CHECK(Permutation({2, 0, 1}).size() == 3);
  CHECK(Permutation::identity(4).values() == std::vector<int>{0, 1, 2, 3});
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), InvalidInputError);
  CHECK_THROWS_AS(Permutation({0, 0}), InvalidInputError);
  CHECK_THROWS_AS(Permutation({0, 2}), InvalidInputError);
  CHECK_THROWS_AS(Permutation({-1, 0}), InvalidInputError);
}

TEST_CASE("permutation inverse") {
  CHECK(Permutation::identity(5).inverse() == Permutation::identity(5));
  CHECK(Permutation({1, 2, 0}).inverse() == Permutation({2, 0, 1}));
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    do {
      Permutation sigma(v);
      Permutation inv = sigma.inverse();
      for (int i = 0; i < n; ++i) CHECK(inv(sigma(i)) == i);
      CHECK(inv.inverse() == sigma);
    } while (std::next_permutation(v.begin(), v.end()));
  }
}

TEST_CASE("validate_parking_function basic examples") {
  CHECK(validate_parking_function({0, 0, 0}));
  CHECK(validate_parking_function({1, 0}));
  CHECK_FALSE(validate_parking_function({1, 1}));
  CHECK_THROWS_AS(validate_parking_function({}), InvalidInputError);
  CHECK_THROWS_AS(validate_parking_function({0, -1}), InvalidInputError);
}

TEST_CASE("exactly 16 of the 27 length-3 sequences over {0,1,2} park") {
  int count = 0;
  oracles::for_each_tuple(3, 3, [&](const std::vector<int>& t) {
    if (validate_parking_function(t)) ++count;
  });
  CHECK(count == 16);
}

TEST_CASE("validate_parking_function agrees with the majoration definition") {
  for (int n = 1; n <= 5; ++n) {
    oracles::for_each_tuple(n, n + 1, [&](const std::vector<int>& t) {
      CHECK(validate_parking_function(t) == oracles::parks_by_majoration(t));
    });
  }
}

TEST_CASE("parking function type enforces the sorted condition") {
  CHECK(ParkingFunction({1, 0}).values() == std::vector<int>{1, 0});
  CHECK_THROWS_AS(ParkingFunction({9, 9}), InvalidInputError);
}

TEST_CASE("hl pair type enforces u <= k <= index") {
  CHECK_NOTHROW(HLPair(Permutation({1, 0}), {0, 1}));
  CHECK_THROWS_AS(HLPair(Permutation({1, 0}), {0, 0}), InvalidInputError);
  CHECK_THROWS_AS(HLPair(Permutation({0, 1}), {0, 2}), InvalidInputError);
  CHECK_THROWS_AS(HLPair(Permutation({0, 1}), {0}), InvalidInputError);
}

TEST_CASE("admissible pair type enforces both conditions") {
  CHECK_NOTHROW(AdmissiblePair({0, 1}, {0, 0}));
  // l_1 > k_1 violates 0 <= l_i <= k_i.
  CHECK_THROWS_AS(AdmissiblePair({0, 0}, {0, 1}), InvalidInputError);
  // l_1 > l_2 but k_2 = 0 < 2 violates the inversion condition.
  CHECK_THROWS_AS(AdmissiblePair({0, 1, 0}, {0, 1, 0}), InvalidInputError);
  CHECK_NOTHROW(AdmissiblePair({0, 1, 2}, {0, 1, 0}));
  CHECK_THROWS_AS(AdmissiblePair({0, 1}, {0}), InvalidInputError);
}

TEST_CASE("polynomial add, coeff, and zero elimination") {
  BivariatePolynomial p;
  CHECK(p.empty());
  p.add(1, 2, 5);
  p.add(1, 2, -5);
  CHECK(p.empty());
  CHECK(p.coeff(1, 2) == 0);
  p.add(0, 0, 3);
  CHECK(p.coeff(0, 0) == 3);
  CHECK_THROWS_AS(p.add(-1, 0, 1), InvalidInputError);
  CHECK_THROWS_AS(p.add(0, -2, 1), InvalidInputError);
}

TEST_CASE("polynomial merge is associative and commutative on samples") {
  BivariatePolynomial a, b, c;
  a.add(0, 0, 1);
  a.add(2, 1, 4);
  b.add(2, 1, 7);
  b.add(1, 0, 2);
  c.add(0, 3, 9);

  BivariatePolynomial ab = a;
  ab.merge(b);
  BivariatePolynomial ba = b;
  ba.merge(a);
  CHECK(ab == ba);

  BivariatePolynomial ab_c = ab;
  ab_c.merge(c);
  BivariatePolynomial bc = b;
  bc.merge(c);
  BivariatePolynomial a_bc = a;
  a_bc.merge(bc);
  CHECK(ab_c == a_bc);
}

TEST_CASE("polynomial evaluation and overflow detection") {
  BivariatePolynomial p;
  p.add(1, 1, 2);
  p.add(0, 0, 1);
  CHECK(p.evaluate(3, 5) == 31);
  CHECK(p.evaluate(1, 1) == 3);

  BivariatePolynomial big;
  big.add(0, 0, std::numeric_limits<long long>::max());
  CHECK_THROWS_AS(big.add(0, 0, 1), OverflowError);
  BivariatePolynomial twice;
  twice.add(1, 0, std::numeric_limits<long long>::max());
  CHECK_THROWS_AS(twice.evaluate(2, 1), OverflowError);
}

TEST_CASE("json round-trip for every core type") {
  Permutation sigma({2, 0, 1});
  CHECK(permutation_from_json(to_json(sigma)) == sigma);

  ParkingFunction q({1, 0, 1});
  CHECK(parking_function_from_json(to_json(q)) == q);

  HLPair pair(Permutation({1, 0}), {0, 1});
  CHECK(hl_pair_from_json(to_json(pair)) == pair);

  AdmissiblePair adm({0, 1}, {0, 0});
  CHECK(admissible_pair_from_json(to_json(adm)) == adm);

  BivariatePolynomial p = oracles::frozen_r3();
  CHECK(polynomial_from_json(to_json(p)) == p);
}

TEST_CASE("json shapes match the wire format") {
  CHECK(canonical_dump(to_json(ParkingFunction({1, 0}))) == "[1,0]");
  CHECK(canonical_dump(to_json(HLPair(Permutation({1, 0}), {0, 1}))) ==
        R"({"sigma":[1,0],"k":[0,1]})");
  CHECK(canonical_dump(to_json(AdmissiblePair({0, 1}, {0, 0}))) ==
        R"({"k":[0,1],"l":[0,0]})");
  // Polynomial terms are sorted lexicographically by (a, b).
  CHECK(canonical_dump(to_json(oracles::frozen_r2())) ==
        R"([{"a":0,"b":0,"c":1},{"a":0,"b":1,"c":1},{"a":1,"b":0,"c":1}])");
}

TEST_CASE("text rendering of sequences") {
  CHECK(render_sequence({2, 0, 1}) == "[2,0,1]");
  CHECK(parse_sequence("[2,0,1]") == std::vector<int>{2, 0, 1});
  CHECK(parse_sequence(" [ 2 , 0 , 1 ] ") == std::vector<int>{2, 0, 1});
  CHECK_THROWS_AS(parse_sequence("2,0,1"), ParseError);
  CHECK_THROWS_AS(parse_sequence("[2,0,"), ParseError);
}

TEST_CASE("text rendering of polynomials") {
  CHECK(polynomial_to_text(oracles::frozen_r2()) == "1 + 1 q^1 + 1 t^1");
  BivariatePolynomial zero;
  CHECK(polynomial_to_text(zero) == "0");
  BivariatePolynomial one;
  one.add(0, 0, 1);
  CHECK(polynomial_to_text(one) == "1");
  CHECK(polynomial_to_csv(oracles::frozen_r2()) == "a/b,0,1\n0,1,1\n1,1,0\n");
}

TEST_CASE("malformed json is a parse error") {
  CHECK_THROWS_AS(parse_json_text("{nope"), ParseError);
  CHECK_THROWS_AS(permutation_from_json(parse_json_text("\"x\"")), ParseError);
  CHECK_THROWS_AS(hl_pair_from_json(parse_json_text("{\"sigma\":[0]}")),
                  ParseError);
  CHECK_THROWS_AS(polynomial_from_json(parse_json_text("[{\"a\":0}]")),
                  ParseError);
}

TEST_CASE("shape descriptor names and equality") {
  ShapeDescriptor a{1, ShapeVariant::OneCycleTail, {2}};
  ShapeDescriptor b{1, ShapeVariant::OneCycleTail, {2}};
  ShapeDescriptor c{1, ShapeVariant::OneCycleTail, {3}};
  CHECK(a == b);
  CHECK_FALSE(a == c);
  CHECK(variant_name(ShapeVariant::Identity) == "identity");
  CHECK(variant_name(ShapeVariant::FourTailS3S1S2) == "four-tail-s3s1s2");
}
