#include "doctest.h"

#include <random>

#include "affsp/factorial.hpp"
#include "test_util.hpp"

using namespace affsp;
using SP = StrictPartition;

namespace {

CoeffPoly P(const Ring& R, const std::string& s) { return parse_poly(R, s); }

// Schubert polynomial by divided differences from the longest element.
CoeffPoly schubert(const std::vector<int>& w, const Ring& R) {
  int m = int(w.size());
  std::vector<int> cur(m);
  for (int i = 0; i < m; ++i) cur[i] = m - i;
  CoeffPoly f(R, 1);
  for (int i = 0; i < m - 1; ++i) f = f * CoeffPoly::var(R, i).pow(m - 1 - i);
  // walk from w0 down to w along right descents of w^{-1} cur
  std::vector<int> winv(m);
  for (int i = 0; i < m; ++i) winv[w[i] - 1] = i + 1;
  while (cur != w) {
    int i = 0;
    for (; i < m - 1; ++i)
      if (winv[cur[i] - 1] > winv[cur[i + 1] - 1]) break;
    REQUIRE(i < m - 1);
    std::vector<int> target(R->size()), sign(R->size(), 1);
    for (size_t k = 0; k < target.size(); ++k) target[k] = int(k);
    std::swap(target[i], target[i + 1]);
    f = exact_divide(f - signed_rename(f, target, sign),
                     CoeffPoly::var(R, i) - CoeffPoly::var(R, i + 1));
    std::swap(cur[i], cur[i + 1]);
  }
  return f;
}

}  // namespace

TEST_CASE("dual_P at a = 0 is P_lambda") {
  Ring R = a_ring(8);
  std::vector<CoeffPoly> zero(8, CoeffPoly(R));
  for (const auto& lam : strict_partitions_upto(7))
    CHECK(dual_P(lam, zero, R, 8) == PSeries::basis(R, 8, lam));
}

TEST_CASE("dual_P is unitriangular over P") {
  Ring R = a_ring(8);
  auto a = a_values(R, 8);
  for (const auto& lam : strict_partitions_upto(6)) {
    auto f = dual_P(lam, a, R, 8);
    CHECK(f.coeff(lam) == CoeffPoly(R, 1));
    for (const auto& [mu, c] : f.terms()) {
      CHECK(componentwise_ge(mu, lam));
      // coefficient has degree |mu| - |lambda|
      CHECK(c.homogeneous_part(mu.size() - lam.size()) == c);
    }
  }
}

TEST_CASE("one-row dual_P is sum h_i(a_1..a_r) P_{r+i}") {
  Ring R = a_ring(8);
  auto a = a_values(R, 8);
  for (int r = 1; r <= 8; ++r) {
    PSeries expect(R, 8);
    std::vector<CoeffPoly> ar(a.begin(), a.begin() + r);
    for (int i = 0; r + i <= 8; ++i) expect.add(SP({r + i}), complete_h(R, i, ar));
    CHECK(dual_P(SP({r}), a, R, 8) == expect);
  }
}

TEST_CASE("determinant coefficient is a Schubert polynomial") {
  Ring R = a_ring(5);
  auto a = a_values(R, 5);
  CoeffPoly det = dual_P(SP({3, 1}), a, R, 8).coeff(SP({5, 3}));
  CHECK(det == P(R, "a1^2*(a2^2 + a3^2 + a1*a2 + a1*a3 + a2*a3)"));
  // s2 s1 s4 s3 in one-line notation
  CHECK(det == schubert({3, 1, 5, 2, 4}, R));
  CHECK(det != schubert({2, 4, 1, 5, 3}, R));
}

TEST_CASE("Omega(b) expands in the dual basis") {
  const int N = 8;
  Ring R = a_ring(N, {"b"});
  auto a = a_values(R, N);
  CoeffPoly b = CoeffPoly::var(R, "b");
  PSeries rhs = PSeries::one(R, N);
  for (int k = 1; k <= N; ++k) rhs += dual_P(SP({k}), a, R, N) * factorial_power(b, k, a);
  CHECK(omega_series(b, N) == rhs);
  CHECK(multiply(omega_series(b, N), omega_series(-b, N)) == PSeries::one(R, N));

  // at b = a_i the sum stops at k = i
  for (int i = 1; i <= 4; ++i) {
    PSeries s = PSeries::one(R, N);
    for (int k = 1; k <= i; ++k) s += dual_P(SP({k}), a, R, N) * factorial_power(a[i - 1], k, a);
    CHECK(omega_series(a[i - 1], N) == s);
  }
}

TEST_CASE("square of the first dual function") {
  const int N = 8;
  Ring R = a_ring(N);
  auto a = a_values(R, N);
  auto P1 = dual_P(SP({1}), a, R, N);
  PSeries sq = multiply(P1, P1);

  auto prod_diff = [&](int i) {
    CoeffPoly c(R, 1);
    for (int j = 2; j <= i + 1; ++j) c = c * (a[0] - a[j - 1]);
    return c;
  };
  PSeries corrected = dual_P(SP({2}), a, R, N);
  PSeries literal = dual_P(SP({2}), a, R, N);
  // terms with i > N - 2 lie above the truncation
  for (int i = 1; i <= N - 2; ++i) {
    corrected += dual_P(SP({i + 2}), a, R, N) * prod_diff(i);
    corrected += dual_P(SP({i + 1, 1}), a, R, N) * (a[0] * prod_diff(i - 1) * Rational(2));
    literal += dual_P(SP({i + 1}), a, R, N) * prod_diff(i);
    literal += dual_P(SP({i + 1, 1}), a, R, N) * factorial_power(a[0], i, a);
  }
  CHECK(sq == corrected);
  // as printed: the first summand is indexed by i+1 (not homogeneous) and
  // ((a1|a))^i vanishes for i >= 2, so it does not hold
  CHECK(sq != literal);

  auto ex = expand_in_dualP(sq, a);
  CHECK(ex.at(SP({2})) == CoeffPoly(R, 1));
  CHECK(ex.at(SP({3})) == P(R, "a1 - a2"));
  CHECK(ex.at(SP({2, 1})) == P(R, "2*a1"));
}

TEST_CASE("expand_in_dualP inverts the basis") {
  const int N = 7;
  Ring R = a_ring(N);
  auto a = a_values(R, N);
  std::mt19937 rng(11);
  std::map<SP, CoeffPoly> want;
  PSeries f(R, N);
  for (const auto& lam : strict_partitions_upto(N)) {
    if (rng() % 2) continue;
    CoeffPoly c = testutil::random_poly(R, rng, 2, 1, 4);
    if (c.is_zero()) continue;
    want.emplace(lam, c);
    f += dual_P(lam, a, R, N) * c;
  }
  CHECK(expand_in_dualP(f, a) == want);
}

TEST_CASE("q-hat series in the dual basis") {
  const int N = 8;
  Ring R = a_ring(N, {"c1", "c2", "c3"});
  auto a = a_values(R, N);
  std::vector<CoeffPoly> cs = {CoeffPoly::var(R, "c1"), CoeffPoly::var(R, "c2"),
                               CoeffPoly::var(R, "c3")};
  for (int len = 0; len <= 3; ++len) {
    std::vector<CoeffPoly> c(cs.begin(), cs.begin() + len);
    for (int i = 0; i <= 4; ++i) CHECK(qhat(i, c, R, N) == qhat_to_dualP(i, c, a, R, N));
  }
}

TEST_CASE("q-hat at n = 2 with b4, b5") {
  const int N = 8;
  Ring R = a_ring(2);
  auto a = a_periodic(R, 2, N);
  std::vector<CoeffPoly> c = {-a[1], -a[0]};
  auto ex = expand_in_dualP(qhat(1, c, R, N), a);
  std::map<SP, CoeffPoly> want = {
      {SP({1}), P(R, "2")},
      {SP({2}), P(R, "-2*(2*a1 + a2)")},
      {SP({3}), P(R, "4*(a1 + a2)^2")},
      {SP({4}), P(R, "-4*a1^2*(a1 + a2)")},
  };
  CHECK(ex == want);
}

TEST_CASE("factorial Q at a = 0 is Schur Q") {
  Ring R = make_ring({"x1", "x2", "x3", "x4", "a1", "a2", "a3", "a4", "a5", "a6"});
  std::vector<CoeffPoly> zero(6, CoeffPoly(R));
  for (int m = 1; m <= 4; ++m) {
    std::vector<size_t> xs;
    std::vector<CoeffPoly> xv;
    for (int i = 0; i < m; ++i) xs.push_back(i), xv.push_back(CoeffPoly::var(R, i));
    for (const auto& lam : strict_partitions_upto(m <= 2 ? 6 : 5)) {
      CoeffPoly q = factorial_Q(lam, xs, zero, R);
      CHECK(q == evaluate_powersums(q_powersum(lam), xv, R));
    }
  }
}

TEST_CASE("factorial Q vanishing and stability") {
  Ring R = make_ring({"x1", "x2", "x3", "a1", "a2", "a3", "a4", "a5"});
  std::vector<CoeffPoly> a;
  for (int i = 1; i <= 5; ++i) a.push_back(CoeffPoly::var(R, "a" + std::to_string(i)));
  for (const auto& lam : strict_partitions_upto(5)) {
    if (lam.length() > 2) continue;
    CoeffPoly q3 = factorial_Q(lam, {0, 1, 2}, a, R);
    CoeffPoly q2 = factorial_Q(lam, {0, 1}, a, R);
    // setting the last variable to 0 drops it
    CHECK(substitute(q3, {{2, CoeffPoly(R)}}) == q2);
  }
  // Q_(2)(a1, 0, 0 | a) = ((a1|a))^2 = 0
  CoeffPoly q = factorial_Q(SP({2}), {0, 1, 2}, a, R);
  CHECK(substitute(q, {{0, a[0]}, {1, CoeffPoly(R)}, {2, CoeffPoly(R)}}).is_zero());
}

TEST_CASE("equivariant Cauchy identity in three variables") {
  const int N = 8;
  std::vector<std::string> names = {"x1", "x2", "x3"};
  Ring R = a_ring(N, names);
  auto a = a_values(R, N);
  std::vector<size_t> xs = {R->require("x1"), R->require("x2"), R->require("x3")};
  PSeries lhs = PSeries::one(R, N);
  for (size_t v : xs) lhs = multiply(lhs, omega_series(CoeffPoly::var(R, v), N));
  PSeries rhs(R, N);
  for (const auto& lam : strict_partitions_upto(N)) {
    if (lam.length() > 3) continue;
    rhs += dual_P(lam, a, R, N) * factorial_Q(lam, xs, a, R);
  }
  CHECK(lhs == rhs);
}
