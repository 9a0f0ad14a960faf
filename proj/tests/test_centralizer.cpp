#include "doctest.h"

#include "affsp/centralizer.hpp"
#include "affsp/factorial.hpp"
#include "affsp/nilhecke.hpp"

using namespace affsp;

namespace {

void check_all(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs) CHECK_MESSAGE(r.ok, (r.name + " " + r.detail));
}

CoeffPoly P(const Ring& R, const std::string& s) { return parse_poly(R, s); }

}  // namespace

TEST_CASE("J, L0 and the Lie algebra") {
  Ring R = a_ring(2);
  PolyMatrix J = build_J(2, R);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      CHECK(J(i, j) == CoeffPoly(R, i + j == 4 ? (i % 2 ? -1 : 1) : 0));
  PolyMatrix L = build_L0(2, R);
  CHECK(in_so(L, 2));
  CHECK(so_entry_condition(L, 2));
  auto b = b_sequence(R, 2);
  for (int i = 0; i < 5; ++i) CHECK(L(i, i) == b[i]);
  CHECK(b[0] == P(R, "a1"));
  CHECK(b[4] == P(R, "-a1"));
  for (int n = 1; n <= 4; ++n) {
    Ring Rn = a_ring(n);
    CHECK(in_so(build_L0(n, Rn), n));
    for (int i = 1; i <= n; ++i) {
      CHECK(in_so(chevalley_f(i, n, Rn), n));
      CHECK(so_entry_condition(chevalley_f(i, n, Rn), n));
    }
  }
  // a non-member
  PolyMatrix x = PolyMatrix(5, 5, CoeffPoly(R));
  x(1, 0) = CoeffPoly(R, 1);
  CHECK_FALSE(in_so(x, 2));
  CHECK_FALSE(so_entry_condition(x, 2));
}

TEST_CASE("defining relations at n = 2") {
  Ring R = centralizer_ring(2);
  auto rel = centralizer_relations(2, R);
  CHECK(rel.typeA.size() == 10);
  CHECK(rel.typeA.at({1, 2}) == P(R, "(a1-a2)*z12 + z11 - z22"));
  CHECK(rel.typeA.at({2, 3}) == P(R, "a2*z23 + z22 - z33"));
  CHECK(rel.typeA.at({4, 5}) == P(R, "(a1-a2)*z45 + z44 - z55"));
  // antidiagonal
  CHECK(rel.R.at({1, 5}) == P(R, "1 - z11*z55"));
  CHECK(rel.R.at({2, 4}) == P(R, "z22*z44 - 1"));
  CHECK(rel.R.at({3, 3}) == P(R, "1 - z33^2"));
  CHECK(rel.R.at({1, 1}).is_zero());
  CHECK(rel.R.at({2, 3}).is_zero());
  CHECK(rel.R.at({3, 4}) == P(R, "z23*z44 - z33*z34"));
  CHECK(rel.center == P(R, "z33 - 1"));
  CHECK_THROWS_AS(centralizer_ring(5), InvalidArgument);
}

TEST_CASE("reduced presentation at n = 2") {
  Ring R = centralizer_ring(2);
  auto pres = reduced_presentation(2, R);
  const auto& y = pres.y;
  CHECK(y(1, 1) == P(R, "z11 + (a1-a2)*z12"));
  CHECK(y(1, 2) == P(R, "z12 + a1*z13"));
  CHECK(y(2, 2) == P(R, "z11 + a1*z12 + a1*a2*z13"));
  CHECK(y(2, 3) == P(R, "z12 + (a1+2*a2)*z13 + 2*(a1+a2)*a2*z14"));
  CHECK(y(3, 3) == P(R, "z11 + (a1+a2)*z12 + 2*(a1+a2)*a2*z13 + 2*(a1+a2)*a2^2*z14"));
  for (int i = 1; i <= 5; ++i)
    for (int j = i; j <= 5; ++j) CHECK(y(i - 1, j - 1) == y_closed_form(i, j, 2, R));

  const auto& w = pres.w;
  CHECK(w(0, 0) == P(R, "1 - a1*zh1 - a1*a2*zh2"));
  CHECK(w(1, 1) == P(R, "1 - a2*zh1 - a1*a2*zh2"));
  CHECK(w(2, 2) == CoeffPoly(R, 1));
  CHECK(w(3, 3) == P(R, "1 + a2*zh1 + a2*(a1+2*a2)*zh2 + 2*a2^2*(a1+a2)*zh3"));
  CHECK(w(2, 4) == P(R, "zh2 + 2*(a1+a2)*zh3 + 2*a1*(a1+a2)*zh4"));
  CHECK(w(3, 4) ==
        P(R, "zh1 + 2*(a1+a2)*zh2 + 2*(a1+a2)^2*zh3 + 2*a1^2*(a1+a2)*zh4"));
  CHECK(w(0, 1) == zhat_var(R, 1));

  REQUIRE(pres.Rhat.size() == 2);
  CHECK(pres.Rhat[0] == P(R, "zh1^2 - 2*zh2 + 2*(a1+a2)*zh1*zh2 + a1*(a1+2*a2)*zh2^2 + "
                             "2*a2*(a1+a2)*zh1*zh3 + 2*a1*a2*(a1+a2)*zh2*zh3 - 2*(a1+a2)*zh3"));
  CHECK(pres.Rhat[1] ==
        P(R, "zh2^2 - 2*zh1*zh3 + 2*zh4 - 2*a1*zh1*zh4 - 2*a1*a2*zh2*zh4"));
  CHECK(render(pres.Rhat[1]) == pres.Rhat[1].to_string());
}

TEST_CASE("identities among the relations") {
  check_all(verify_relation_identities(1));
  check_all(verify_relation_identities(2));
  check_all(verify_relation_identities(3));
  CHECK(leading_terms_symbolic(4));
}

TEST_CASE("Groebner basis of the reduced presentation") {
  for (int n = 1; n <= 3; ++n) {
    auto specs = groebner_specializations(n, 6, 17 + n);
    CHECK(specs.size() == 6);
    CHECK(specs[0] == std::vector<Rational>(n, 0));
    for (const auto& a : specs) {
      GroebnerReport rep = groebner_check(n, a, n == 3 ? 4 : 5);
      CHECK(rep.leading_ok);
      CHECK(rep.standard_counts == rep.quotient_dims);
      CHECK(rep.relations_reduce);
      CHECK(rep.ok());
      CHECK(rep.quotient_dims[0] == 1);
      for (int d = 1; d < int(rep.quotient_dims.size()); ++d)
        CHECK(rep.quotient_dims[d] > 0);
    }
  }
  GroebnerReport rep = groebner_check(2, {0, 0}, 3);
  CHECK(rep.leading == std::vector<std::string>{"zh1^2", "zh2^2"});
  CHECK_THROWS_AS(groebner_check(2, {1}, 3), InvalidArgument);
}

TEST_CASE("u matrices") {
  Ring R = a_ring(2);
  PolyMatrix u1 = u_simple(1, 2, R), u2 = u_simple(2, 2, R);
  PolyMatrix I = PolyMatrix::identity(5, CoeffPoly(R), CoeffPoly(R, 1));
  PolyMatrix e1 = I, e2 = I;
  e1(1, 0) = e1(4, 3) = P(R, "-a1+a2");
  CHECK(u1 == e1);
  e2(2, 1) = e2(3, 2) = P(R, "-2*a2");
  e2(3, 1) = P(R, "2*a2^2");
  CHECK(u2 == e2);
  CHECK(u_matrix(AffineWeylElt::identity(2), R) == I);

  const char* rows[5][5] = {
      {"1", "0", "0", "0", "0"},
      {"-2*a1", "1", "0", "0", "0"},
      {"2*a1*(a1-a2)", "-2*a1", "1", "0", "0"},
      {"-2*a1^2*(a1-a2)", "2*a1^2", "-2*a1", "1", "0"},
      {"2*a1^2*(a1-a2)*(a1+a2)", "-2*a1^2*(a1+a2)", "2*a1*(a1+a2)", "-2*a1", "1"}};
  PolyMatrix ut = u_matrix_word({1, 2, 1}, 2, R);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK_MESSAGE(ut(i, j) == P(R, rows[i][j]), ut(i, j).to_string());
  CHECK(u_matrix_word({2, 1, 2}, 2, R) != ut);
  CHECK(in_SO(ut, 2));

  CHECK(verify_uw(1));
  CHECK(verify_uw(2));
  CHECK(verify_uw(3));
}

TEST_CASE("diagonalizing L0") {
  Ring R = a_ring(2);
  RatMatrix M = m_matrix(2, R);
  auto rf = [&](const std::string& num, const std::string& den) {
    return RationalFunction(P(R, num), P(R, den));
  };
  RationalFunction zero(R, 0), one(R, 1);
  CHECK(M(0, 0) == one);
  CHECK(M(0, 1) == rf("-1", "a1-a2"));
  CHECK(M(0, 2) == rf("1", "a1*(a1-a2)"));
  CHECK(M(0, 3) == rf("-1", "a1*(a1-a2)*(a1+a2)"));
  CHECK(M(0, 4) == rf("1", "2*a1^2*(a1-a2)*(a1+a2)"));
  CHECK(M(1, 2) == rf("-1", "a2"));
  CHECK(M(1, 3) == rf("1", "2*a2^2"));
  CHECK(M(1, 4) == rf("-1", "2*a2^2*(a1+a2)"));
  CHECK(M(2, 3) == rf("-1", "a2"));
  CHECK(M(2, 4) == rf("1", "a1*a2"));
  CHECK(M(3, 4) == rf("-1", "a1-a2"));
  CHECK(M(4, 4) == one);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < i; ++j) CHECK(M(i, j) == zero);
  CHECK(verify_M(1));
  CHECK(verify_M(2));
  CHECK(verify_M(3));
}

TEST_CASE("beta at n = 2") {
  const int N = 8;
  check_all(beta_substitute(2, N));

  Ring R = a_ring(2);
  auto a = a_values(R, 2);
  CoeffPoly a1 = a[0], a2 = a[1];
  SeriesMatrix G = beta_matrix(2, N);
  using L = std::vector<CoeffPoly>;
  std::vector<std::vector<L>> args = {
      {{a1}, {a1, a2}, {a1, a2}, {a1, a2, -a2}, {a1, a2, -a2, -a1}},
      {{a2}, {a2}, {a2, -a2}, {-a1, -a2, a2}},
      {{}, {-a2}, {-a1, -a2}},
      {{-a2}, {-a1, -a2}},
      {{-a1}}};
  for (int i = 0; i < 5; ++i)
    for (int j = i; j < 5; ++j) {
      PSeries q = qhat(j - i, args[i][j - i], R, N);
      if (i == 2 && j == 2) q = PSeries::one(R, N);
      CHECK_MESSAGE(G(i, j) == ((j - i) % 2 ? -q : q), ("(" + std::to_string(i + 1) + "," +
                                                         std::to_string(j + 1) + ")"));
    }
}

TEST_CASE("beta at n = 1 and n = 3") {
  check_all(beta_substitute(1, 8));
  check_all(beta_substitute(3, 5));
}

TEST_CASE("beta of the diagonal matches the translation action") {
  const int n = 2, N = 7;
  Ring R = a_ring(n);
  SeriesAction act(R, n, N);
  SeriesMatrix G = beta_matrix(n, N);
  PSeries one = PSeries::one(R, N);
  for (int i = 1; i <= n; ++i) {
    CHECK(act.act(t_eps(i, n), one) == G(i - 1, i - 1));
    CHECK(act.act(t_eps(i, n, -1), one) == G(2 * n + 1 - i, 2 * n + 1 - i));
    // z_ii z_{ibar,ibar} = 1
    CHECK(multiply(G(i - 1, i - 1), G(2 * n + 1 - i, 2 * n + 1 - i)) == one);
  }
}
