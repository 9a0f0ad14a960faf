#include "doctest.h"

#include <random>
#include <set>

#include "affsp/weyl.hpp"

using namespace affsp;
using W = AffineWeylElt;

namespace {

W power(const W& x, int k) {
  W r = W::identity(x.n());
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

int coxeter_m(int i, int j, int n) {
  if (i == j) return 1;
  if (i > j) std::swap(i, j);
  if ((i == 0 && j == 1) || (i == n - 1 && j == n)) return 4;
  if (j == i + 1) return 3;
  return 2;
}

}  // namespace

TEST_CASE("Coxeter relations") {
  for (int n = 2; n <= 4; ++n) {
    W id = W::identity(n);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        W x = W::simple(i, n) * W::simple(j, n);
        int m = coxeter_m(i, j, n);
        CHECK(power(x, m) == id);
        for (int k = 1; k < m; ++k) CHECK(power(x, k) != id);
      }
  }
}

TEST_CASE("length agrees with reduced words and inversions") {
  std::mt19937 rng(1);
  for (int n = 2; n <= 3; ++n) {
    std::uniform_int_distribution<int> letter(0, n);
    for (int t = 0; t < 200; ++t) {
      std::vector<int> word;
      int len = std::uniform_int_distribution<int>(0, 12)(rng);
      for (int k = 0; k < len; ++k) word.push_back(letter(rng));
      W w = W::from_word(word, n);
      auto red = w.reduced_word();
      CHECK(int(red.size()) == w.length());
      CHECK(W::from_word(red, n) == w);
      // descents by root positivity match length drops
      for (int i = 0; i <= n; ++i) {
        W ws = w * W::simple(i, n);
        CHECK(w.has_right_descent(i) == (ws.length() < w.length()));
        W sw = W::simple(i, n) * w;
        CHECK(w.has_left_descent(i) == (sw.length() < w.length()));
      }
      CHECK(w.inverse() * w == W::identity(n));
      CHECK(W::from_json(w.to_json()) == w);
    }
  }
}

TEST_CASE("translations") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> expect;
    for (int j = 0; j < n; ++j) expect.push_back(j);
    for (int j = n; j >= 1; --j) expect.push_back(j);
    expect.pop_back();
    auto t1 = t_eps(1, n);
    CHECK(t1.length() == 2 * n);
    std::vector<int> want;
    for (int j = 0; j <= n; ++j) want.push_back(j);
    for (int j = n - 1; j >= 1; --j) want.push_back(j);
    CHECK(t1.reduced_word() == want);
    for (int i = 1; i <= n; ++i) {
      std::vector<int> word;
      for (int j = i - 1; j >= 0; --j) word.push_back(j);
      for (int j = 1; j <= n; ++j) word.push_back(j);
      for (int j = n - 1; j >= i; --j) word.push_back(j);
      CHECK(W::from_word(word, n) == t_eps(i, n));
      CHECK(t_eps(i, n).length() == 2 * n);
    }
    // s_0 is the affine reflection t_{theta^vee} s_theta
    W stheta = W::identity(n);
    {
      SignedPerm u = SignedPerm::identity(n);
      u.sign[0] = -1;
      stheta = W::classical(u);
    }
    CHECK(W::simple(0, n) == t_eps(1, n) * stheta);
  }
}

TEST_CASE("pi and u_n") {
  for (int n = 2; n <= 4; ++n) {
    W p = W::pi(n);
    CHECK(p.sigma());
    CHECK(p.length() == 0);
    CHECK(p * p == W::identity(n));
    for (int i = 0; i <= n; ++i) CHECK(conj_pi(W::simple(i, n)) == W::simple(n - i, n));
    // u_n = s_n (s_{n-1} s_n) ... (s_1 ... s_n)
    std::vector<int> word;
    for (int start = n; start >= 1; --start)
      for (int j = start; j <= n; ++j) word.push_back(j);
    CHECK(W::from_word(word, n) == W::classical(u_n(n)));
    // pi acts on the a-variables as u_n: a_i -> -a_{n+1-i}
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(n, 0);
      e[i] = 1;
      auto img = p.act_weight(e);
      CHECK(img[n - 1 - i] == -1);
    }
    CHECK(W::from_json(p.to_json()) == p);
  }
}

TEST_CASE("named elements for C_2") {
  int n = 2;
  CHECK(W::translation_doubled({-1, -1}) == W::pi(2) * W::from_word({0, 1, 0}, 2));
  CHECK(kappa(1, n) == W::from_word({1, 2, 1, 0}, 2));
  CHECK(kappa(2, n) == W::from_word({0, 1, 0}, 2));
  CHECK(kappa(2, n).to_string() == "s0 s1 s0");
  CHECK(rho(2, n).to_string() == "s1 s0");
  CHECK(rho(3, n).to_string() == "s2 s1 s0");
  CHECK(rho(4, n).to_string() == "s1 s2 s1 s0");
  for (int i = 1; i <= 4; ++i) {
    CHECK(rho(i, n).is_grassmannian());
    CHECK(rho(i, n).length() == i);
  }
  CHECK(W::from_word(parse_word("s3 s1 s0"), 3).to_string() == "s3 s1 s0");
}

TEST_CASE("Grassmannian enumeration") {
  auto g2 = enumerate_grassmannian(2, 6);
  CHECK(g2.size() == 12);
  int upto4 = 0;
  for (auto& w : g2) upto4 += w.length() <= 4;
  CHECK(upto4 == 7);
  CHECK(enumerate_grassmannian(3, 6).size() == 14);
  for (auto& w : g2) {
    CHECK(w.is_grassmannian());
    if (w.length()) CHECK(w.reduced_word().back() == 0);
  }
  CHECK(enumerate_finite(2).size() == 8);
  CHECK(enumerate_finite(3).size() == 48);
  // Poincare series (1+q)(1+q+q^2+q^3)/((1-q)(1-q^3)) through q^4
  auto all = enumerate_affine(2, 4);
  std::vector<int> counts(5, 0);
  for (auto& w : all) counts[w.length()]++;
  CHECK(counts == std::vector<int>{1, 3, 5, 8, 11});
}

TEST_CASE("Bruhat order by subwords") {
  int n = 2;
  auto all = enumerate_affine(n, 5);
  std::mt19937 rng(4);
  for (int t = 0; t < 60; ++t) {
    const W& w = all[rng() % all.size()];
    // brute force: elements obtained from subwords of a reduced word
    auto word = w.reduced_word();
    std::set<W> below;
    for (unsigned mask = 0; mask < (1u << word.size()); ++mask) {
      std::vector<int> sub;
      for (size_t k = 0; k < word.size(); ++k)
        if (mask >> k & 1) sub.push_back(word[k]);
      below.insert(W::from_word(sub, n));
    }
    for (const auto& v : all) CHECK(bruhat_le(v, w) == (below.count(v) > 0));
  }
}

TEST_CASE("all reduced words") {
  auto words = all_reduced_words(W::from_word({1, 2, 1, 2}, 2));
  CHECK(words.size() == 2);
  for (auto& wd : all_reduced_words(t_eps(1, 3))) CHECK(W::from_word(wd, 3) == t_eps(1, 3));
}
