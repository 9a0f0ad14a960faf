#include "doctest.h"

#include "affsp/linalg.hpp"
#include "affsp/ring.hpp"
#include "test_util.hpp"

using namespace affsp;

TEST_CASE("render and parse agree") {
  Ring R = a_ring(2, {"zh1", "zh2"});
  CoeffPoly p = parse_poly(R, "zh1^2 - 2*zh2 + 2*(a1+a2)*zh1*zh2 - 3/2");
  CHECK(p.to_string() == "2*a1*zh1*zh2 + 2*a2*zh1*zh2 + zh1^2 - 2*zh2 - 3/2");
  CHECK(parse_poly(R, p.to_string()) == p);
  CHECK(CoeffPoly(R).to_string() == "0");
  CHECK(parse_poly(R, "-a1").to_string() == "-a1");
  CHECK_THROWS_AS(parse_poly(R, "a3"), ParseError);
}

TEST_CASE("json round trip") {
  Ring R = a_ring(3);
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    CoeffPoly p = testutil::random_poly(R, rng, 6, 4);
    CHECK(CoeffPoly::from_json(R, p.to_json()) == p);
  }
  CHECK(parse_poly(R, "3*a1^2*a3 - 1/2").to_json().dump() ==
        R"({"[0,0,0]":"-1/2","[2,0,1]":"3"})");
}

TEST_CASE("ring axioms on random polynomials") {
  Ring R = a_ring(3);
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    auto f = testutil::random_poly(R, rng, 5, 3);
    auto g = testutil::random_poly(R, rng, 5, 3);
    auto h = testutil::random_poly(R, rng, 5, 3);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == g * f);
    CHECK(f - f == CoeffPoly(R));
  }
}

TEST_CASE("exact division") {
  Ring R = a_ring(3);
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    auto f = testutil::random_poly(R, rng, 4, 3);
    auto g = testutil::random_poly(R, rng, 3, 2);
    if (g.is_zero()) continue;
    CHECK(exact_divide(f * g, g) == f);
  }
  auto a1 = CoeffPoly::var(R, 0), a2 = CoeffPoly::var(R, 1);
  CHECK_THROWS_AS(exact_divide(a1 * a1 + a2, a1), DivisionInexact);
}

TEST_CASE("substitution") {
  Ring R = a_ring(2);
  auto p = parse_poly(R, "a1^2*a2 - a2 + 4");
  auto q = substitute_named(p, {{"a1", parse_poly(R, "a1+a2")}});
  CHECK(q == parse_poly(R, "(a1+a2)^2*a2 - a2 + 4"));
  // a1 -> -a2, a2 -> a1
  CHECK(signed_rename(p, {1, 0}, {-1, 1}) == parse_poly(R, "a2^2*a1 - a1 + 4"));
  Ring S = make_ring({"x"});
  CHECK(parse_poly(S, "x^2").embed(a_ring(1, {"x"})) == parse_poly(a_ring(1, {"x"}), "x^2"));
}

TEST_CASE("h and e generating functions invert") {
  // sum_k (-1)^k e_k h_{m-k} = 0 for m > 0
  Ring R = a_ring(4);
  std::vector<CoeffPoly> xs;
  for (int i = 0; i < 4; ++i) xs.push_back(CoeffPoly::var(R, i));
  for (int m = 1; m <= 6; ++m) {
    CoeffPoly s(R);
    for (int k = 0; k <= m; ++k) {
      auto t = elementary_e(R, k, xs) * complete_h(R, m - k, xs);
      if (k & 1) s -= t; else s += t;
    }
    CHECK(s.is_zero());
  }
  CHECK(complete_h(R, 2, {xs[0], xs[1]}) == parse_poly(R, "a1^2+a1*a2+a2^2"));
  CHECK(elementary_e(R, 5, xs).is_zero());
  CHECK(complete_h(R, 0, {}) == CoeffPoly(R, 1));
}

TEST_CASE("super_h and pleth_e") {
  Ring R = a_ring(3, {"b", "c"});
  auto b = CoeffPoly::var(R, "b"), c = CoeffPoly::var(R, "c");
  std::vector<CoeffPoly> a = {CoeffPoly::var(R, 0), CoeffPoly::var(R, 1), CoeffPoly::var(R, 2)};
  // one x-variable, k-1 z-variables gives b(b-a_1)...(b-a_{k-1})
  for (int k = 1; k <= 4; ++k) {
    std::vector<CoeffPoly> zs(a.begin(), a.begin() + (k - 1));
    CHECK(super_h(R, k, {b}, zs) * Rational(2) == factorial_power(b, k, a));
  }
  CHECK(factorial_power(b, 3, a) == parse_poly(R, "2*b*(b-a1)*(b-a2)"));
  // super_h with equal alphabets cancels
  CHECK(super_h(R, 2, {b, c}, {b, c}).is_zero());
  CHECK(super_h(R, 0, {b, c}, {b, c}) == CoeffPoly(R, 1));
  // pleth_e(r, A, B) is e_r of A - B; at A = B only r = 0 survives
  CHECK(pleth_e(R, 2, {b, c}, {b, c}).is_zero());
  CHECK(pleth_e(R, 1, {b}, {c}) == b - c);
  CHECK(pleth_e(R, 2, {b, c}, {}) == b * c);
}

TEST_CASE("gcd recovers common factors") {
  Ring R = a_ring(3);
  std::mt19937 rng(5);
  for (int t = 0; t < 15; ++t) {
    auto f = testutil::random_poly(R, rng, 3, 2);
    auto g = testutil::random_poly(R, rng, 3, 2);
    auto h = testutil::random_poly(R, rng, 3, 2);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    auto d = poly_gcd(f * g, f * h);
    CHECK(try_divide(d, poly_gcd(f, f)).has_value());
    CHECK(try_divide(f * g, d).has_value());
    CHECK(try_divide(f * h, d).has_value());
    // f divides the gcd
    CHECK(try_divide(d, f).has_value());
  }
  auto p = parse_poly(R, "a1^2 - a2^2"), q = parse_poly(R, "a1*a3 + a2*a3");
  CHECK(poly_gcd(p, q) == parse_poly(R, "a1 + a2"));
}

TEST_CASE("rational functions normalise") {
  Ring R = a_ring(2);
  RationalFunction x(parse_poly(R, "1"), parse_poly(R, "a1-a2"));
  RationalFunction y(parse_poly(R, "1"), parse_poly(R, "a1+a2"));
  auto s = x + y;
  CHECK(s == RationalFunction(parse_poly(R, "2*a1"), parse_poly(R, "a1^2-a2^2")));
  CHECK(x * RationalFunction(parse_poly(R, "a1-a2")) == RationalFunction(R, 1));
  CHECK(RationalFunction(parse_poly(R, "2*a1-2*a2"), parse_poly(R, "4*a1^2-4*a2^2")) == y * RationalFunction(R, Rational(1, 2)));
}

TEST_CASE("echelon solver") {
  EchelonSolver s(3);
  CHECK(s.add_row({{0, 1}, {1, 1}}, 3));
  CHECK(s.add_row({{1, 1}, {2, -1}}, 1));
  CHECK(s.add_row({{0, 1}, {2, 2}}, 2));
  auto x = s.unique_solution();
  CHECK(x[0] == 2);
  CHECK(x[1] == 1);
  CHECK(x[2] == 0);
  CHECK_FALSE(s.add_row({{0, 1}}, 5));
  EchelonSolver t(2);
  t.add_row({{0, 1}, {1, 1}}, 1);
  CHECK_THROWS_AS(t.unique_solution(), NonUnique);
}
