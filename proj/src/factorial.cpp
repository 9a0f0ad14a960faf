#include "affsp/factorial.hpp"

#include <algorithm>
#include <numeric>

namespace affsp {

std::vector<CoeffPoly> a_values(const Ring& ring, int count) {
  std::vector<CoeffPoly> a;
  for (int i = 1; i <= count; ++i) a.push_back(CoeffPoly::var(ring, "a" + std::to_string(i)));
  return a;
}

std::vector<CoeffPoly> a_periodic(const Ring& ring, int n, int count) {
  std::vector<CoeffPoly> base = a_values(ring, n), out;
  for (int i = 0; i < count; ++i) {
    int r = i % (2 * n);
    out.push_back(r < n ? base[r] : -base[2 * n - 1 - r]);
  }
  return out;
}

CoeffPoly small_det(const std::vector<std::vector<CoeffPoly>>& m, const Ring& ring) {
  size_t k = m.size();
  if (k == 0) return CoeffPoly(ring, 1);
  std::vector<size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  CoeffPoly det(ring);
  do {
    int inv = 0;
    for (size_t i = 0; i < k; ++i)
      for (size_t j = i + 1; j < k; ++j) inv += perm[i] > perm[j];
    CoeffPoly t(ring, inv & 1 ? -1 : 1);
    for (size_t i = 0; i < k && !t.is_zero(); ++i) t = t * m[i][perm[i]];
    det += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

namespace {

// h[m][k] = h_k(a_1..a_m)
std::vector<std::vector<CoeffPoly>> h_table(const std::vector<CoeffPoly>& a, int maxm, int maxk,
                                            const Ring& ring) {
  if (int(a.size()) < maxm) throw InvalidArgument("a-list too short");
  std::vector<std::vector<CoeffPoly>> h(maxm + 1, std::vector<CoeffPoly>(maxk + 1, CoeffPoly(ring)));
  h[0][0] = CoeffPoly(ring, 1);
  for (int m = 1; m <= maxm; ++m) {
    h[m][0] = CoeffPoly(ring, 1);
    for (int k = 1; k <= maxk; ++k) h[m][k] = h[m - 1][k] + a[m - 1] * h[m][k - 1];
  }
  return h;
}

}  // namespace

PSeries dual_P(const StrictPartition& lambda, const std::vector<CoeffPoly>& a, const Ring& ring,
               int order) {
  PSeries f(ring, order);
  if (lambda.size() > order) return f;
  if (lambda.empty()) return PSeries::one(ring, order);
  int l = lambda.length();
  auto h = h_table(a, lambda.parts[0], order, ring);
  for (const auto& mu : strict_partitions_upto(order)) {
    if (!componentwise_ge(mu, lambda)) continue;
    std::vector<std::vector<CoeffPoly>> m(l, std::vector<CoeffPoly>(l, CoeffPoly(ring)));
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) {
        int k = mu.parts[i] - lambda.parts[j];
        if (k >= 0) m[i][j] = h[lambda.parts[j]][k];
      }
    f.add(mu, small_det(m, ring));
  }
  return f;
}

PSeries qhat(int i, const std::vector<CoeffPoly>& c, const Ring& ring, int order) {
  PSeries f(ring, order);
  for (int k = 0; i + k <= order; ++k) {
    CoeffPoly hk = complete_h(ring, k, c);
    if (hk.is_zero()) continue;
    if (i + k == 0) f.add(StrictPartition(), hk);
    else f.add(StrictPartition({i + k}), hk * Rational(2));
  }
  return f;
}

PSeries qhat_to_dualP(int i, const std::vector<CoeffPoly>& c, const std::vector<CoeffPoly>& a,
                      const Ring& ring, int order) {
  PSeries f(ring, order);
  if (i == 0) f += PSeries::one(ring, order);
  for (int k = 0; i + k <= order; ++k) {
    if (i + k < 1) continue;
    std::vector<CoeffPoly> zs(a.begin(), a.begin() + (i + k - 1));
    CoeffPoly coef = super_h(ring, k, c, zs);
    if (coef.is_zero()) continue;
    f += dual_P(StrictPartition({i + k}), a, ring, order) * (coef * Rational(2));
  }
  return f;
}

std::map<StrictPartition, CoeffPoly> expand_in_dualP(const PSeries& f,
                                                     const std::vector<CoeffPoly>& a) {
  std::map<StrictPartition, CoeffPoly> out;
  PSeries rest = f;
  while (!rest.is_zero()) {
    // the smallest partition in the series order has minimal degree
    auto [mu, c] = *rest.terms().begin();
    out.emplace(mu, c);
    rest -= dual_P(mu, a, f.ring(), f.order()) * c;
  }
  return out;
}

CoeffPoly factorial_Q(const StrictPartition& lambda, const std::vector<size_t>& xs,
                      const std::vector<CoeffPoly>& a, const Ring& ring) {
  int m = int(xs.size());
  int l = lambda.length();
  if (m > 6) throw InvalidArgument("factorial_Q: at most 6 variables");
  if (l > m) return CoeffPoly(ring);
  std::vector<CoeffPoly> x;
  for (size_t v : xs) x.push_back(CoeffPoly::var(ring, v));
  CoeffPoly F(ring, 1);
  for (int i = 0; i < l; ++i) F = F * factorial_power(x[i], lambda.parts[i], a);
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < m; ++j) F = F * (x[i] + x[j]);
  for (int i = l; i < m; ++i)
    for (int j = i + 1; j < m; ++j) F = F * (x[i] - x[j]);
  CoeffPoly V(ring, 1);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) V = V * (x[i] - x[j]);
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> target(ring->size()), sign(ring->size(), 1);
  CoeffPoly sum(ring);
  do {
    std::iota(target.begin(), target.end(), 0);
    for (int i = 0; i < m; ++i) target[xs[i]] = int(xs[perm[i]]);
    int inv = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) inv += perm[i] > perm[j];
    CoeffPoly t = signed_rename(F, target, sign);
    if (inv & 1) sum -= t; else sum += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  auto q = try_divide(sum, V);
  if (!q) throw InexactSymmetrization("antisymmetrisation not divisible by the Vandermonde");
  Rational fact = 1;
  for (int i = 2; i <= m - l; ++i) fact *= i;
  return *q * Rational(1 / fact);
}

}  // namespace affsp
