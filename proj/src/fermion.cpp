#include "affsp/fermion.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "affsp/factorial.hpp"

namespace affsp {

int state_degree(const FockState& s) { return std::accumulate(s.begin(), s.end(), 0); }

FockState ket_state(const StrictPartition& lambda) {
  FockState s = lambda.parts;
  if (s.size() % 2) s.push_back(0);
  return s;
}

FockVector FockVector::vacuum(const Ring& ring) { return state(ring, {}); }

FockVector FockVector::state(const Ring& ring, const FockState& s) {
  FockVector v(ring);
  v.add(s, CoeffPoly(ring, 1));
  return v;
}

CoeffPoly FockVector::coeff(const FockState& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? CoeffPoly(ring_) : it->second;
}

void FockVector::add(const FockState& s, const CoeffPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(s, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockVector FockVector::truncate(int d) const {
  FockVector out(ring_);
  for (const auto& [s, c] : terms_)
    if (state_degree(s) <= d) out.terms_.emplace(s, c);
  return out;
}

FockVector& FockVector::operator+=(const FockVector& o) {
  if (!ring_) ring_ = o.ring_;
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  if (!ring_) ring_ = o.ring_;
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

FockVector operator*(const CoeffPoly& c, const FockVector& v) {
  FockVector out(v.ring());
  if (c.is_zero()) return out;
  for (const auto& [s, x] : v.terms()) out.add(s, c * x);
  return out;
}

Fermion Fermion::gen(const Ring& ring, int m) {
  Fermion f(ring);
  f.add(m, CoeffPoly(ring, 1));
  return f;
}

void Fermion::add(int m, const CoeffPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Fermion Fermion::star() const {
  Fermion f(ring_);
  for (const auto& [m, c] : terms_) f.add(-m, m % 2 ? -c : c);
  return f;
}

CoeffPoly anticommutator(const Fermion& x, const Fermion& y) {
  CoeffPoly out(x.ring());
  for (const auto& [m, c] : x.terms()) {
    auto it = y.terms().find(-m);
    if (it == y.terms().end()) continue;
    out += c * it->second * Rational(m % 2 ? -2 : 2);
  }
  return out;
}

namespace {

// phi_m on one canonical state; false when the result is zero
bool apply_state(int m, const FockState& s, FockState& out, int& coeff) {
  if (m > 0) {
    size_t p = 0;
    while (p < s.size() && s[p] > m) ++p;
    if (p < s.size() && s[p] == m) return false;
    out = s;
    out.insert(out.begin() + p, m);
    coeff = p % 2 ? -1 : 1;
    return true;
  }
  if (m == 0) {
    bool has0 = !s.empty() && s.back() == 0;
    size_t p = s.size() - (has0 ? 1 : 0);
    out = s;
    if (has0) out.pop_back();
    else out.push_back(0);
    coeff = p % 2 ? -1 : 1;
    return true;
  }
  int k = -m;
  auto it = std::find(s.begin(), s.end(), k);
  if (it == s.end()) return false;
  size_t p = it - s.begin();
  out = s;
  out.erase(out.begin() + p);
  coeff = 2 * (k % 2 ? -1 : 1) * (p % 2 ? -1 : 1);
  return true;
}

}  // namespace

FockVector apply(int m, const FockVector& v) {
  FockVector out(v.ring());
  FockState t;
  int sgn = 0;
  for (const auto& [s, c] : v.terms())
    if (apply_state(m, s, t, sgn)) out.add(t, c * Rational(sgn));
  return out;
}

FockVector apply(const Fermion& x, const FockVector& v, int max_degree) {
  FockVector out(v.ring());
  FockState t;
  int sgn = 0;
  for (const auto& [m, a] : x.terms())
    for (const auto& [s, c] : v.terms()) {
      if (max_degree >= 0 && state_degree(s) + m > max_degree) continue;
      if (apply_state(m, s, t, sgn)) out.add(t, a * c * Rational(sgn));
    }
  return out;
}

FockVector straighten(const std::vector<int>& word, const Ring& ring) {
  FockVector v = FockVector::vacuum(ring);
  for (auto it = word.rbegin(); it != word.rend() && !v.is_zero(); ++it) v = apply(*it, v);
  return v;
}

CoeffPoly vev(const std::vector<int>& word, const Ring& ring) {
  return straighten(word, ring).coeff({});
}

namespace {

Rational two_point(int i, int j) {
  if (i == 0 && j == 0) return 1;
  if (j > 0 && i == -j) return j % 2 ? -2 : 2;
  return 0;
}

Rational pfaffian(const std::vector<int>& w) {
  if (w.empty()) return 1;
  if (w.size() % 2) return 0;
  Rational out = 0;
  for (size_t b = 1; b < w.size(); ++b) {
    Rational p = two_point(w[0], w[b]);
    if (p == 0) continue;
    std::vector<int> rest;
    for (size_t k = 1; k < w.size(); ++k)
      if (k != b) rest.push_back(w[k]);
    out += (b % 2 ? p : Rational(-p)) * pfaffian(rest);
  }
  return out;
}

}  // namespace

CoeffPoly wick_vev(const std::vector<int>& word, const Ring& ring) {
  return CoeffPoly(ring, 1) * pfaffian(word);
}

CoeffPoly project(const FockVector& v) { return v.coeff({}) + v.coeff({0}); }

CoeffPoly bra_pairing(const StrictPartition& mu, const FockVector& v) {
  FockVector x = v;
  for (int m : ket_state(mu)) x = apply(Fermion::gen(v.ring(), m).star(), x);
  return project(x);
}

namespace {

std::vector<CoeffPoly> prefix(const std::vector<CoeffPoly>& a, int len) {
  if (int(a.size()) < len) throw InvalidArgument("a-list too short");
  return std::vector<CoeffPoly>(a.begin(), a.begin() + len);
}

}  // namespace

Fermion phi_a(int j, const std::vector<CoeffPoly>& a, const Ring& ring, int K) {
  if (std::abs(j) > K) throw CutoffTooSmall("index " + std::to_string(j));
  Fermion f(ring);
  if (j > 0) {
    auto xs = prefix(a, j - 1);
    for (int i = 0; i < j; ++i) {
      CoeffPoly e = elementary_e(ring, i, xs);
      f.add(j - i, i % 2 ? -e : e);
    }
  } else {
    auto xs = prefix(a, -j);
    for (int i = 0; j - i >= -K; ++i) f.add(j - i, complete_h(ring, i, xs));
  }
  return f;
}

Fermion phihat_a(int j, const std::vector<CoeffPoly>& a, const Ring& ring, int K) {
  if (std::abs(j) > K) throw CutoffTooSmall("index " + std::to_string(j));
  Fermion f(ring);
  if (j >= 0) {
    auto xs = prefix(a, j);
    for (int i = 0; j + i <= K; ++i) f.add(j + i, complete_h(ring, i, xs));
  } else {
    auto xs = prefix(a, -j - 1);
    for (int i = 0; i < -j; ++i) {
      CoeffPoly e = elementary_e(ring, i, xs);
      f.add(j + i, i % 2 ? -e : e);
    }
  }
  return f;
}

FockVector ket_H(const StrictPartition& lambda, const std::vector<CoeffPoly>& a,
                 const Ring& ring, int max_degree, int K) {
  FockState s = ket_state(lambda);
  FockVector v = FockVector::vacuum(ring);
  for (auto it = s.rbegin(); it != s.rend(); ++it)
    v = apply(phihat_a(*it, a, ring, K), v, max_degree);
  return v;
}

FockVector ket_C(const StrictPartition& lambda, const std::vector<CoeffPoly>& a,
                 const Ring& ring) {
  FockState s = ket_state(lambda);
  int K = s.empty() ? 0 : s.front();
  FockVector v = FockVector::vacuum(ring);
  for (auto it = s.rbegin(); it != s.rend(); ++it) v = apply(phi_a(*it, a, ring, K), v);
  return v;
}

CoeffPoly bra_C_pairing(const StrictPartition& lambda, const std::vector<CoeffPoly>& a,
                        const FockVector& v) {
  FockState s = ket_state(lambda);
  int K = s.empty() ? 0 : s.front();
  FockVector x = v;
  for (int m : s) x = apply(phi_a(m, a, v.ring(), K).star(), x);
  return project(x);
}

std::map<StrictPartition, CoeffPoly> fock_coefficients(const FockVector& v) {
  std::map<StrictPartition, CoeffPoly> out;
  for (const auto& [st, c] : v.terms()) {
    if (st.size() % 2) throw InvalidArgument("odd Fock state");
    FockState s = st;
    if (!s.empty() && s.back() == 0) s.pop_back();
    out.emplace(StrictPartition(s), c);
  }
  return out;
}

PSeries hatP_via_fermion(const StrictPartition& lambda, const std::vector<CoeffPoly>& a,
                         const Ring& ring, int N) {
  int top = lambda.empty() ? 0 : lambda.parts.front();
  int K = N + 2 * top;
  FockVector v = ket_H(lambda, a, ring, N, K);
  if (v != ket_H(lambda, a, ring, N, K + 2)) throw CutoffTooSmall("raising K changed |lambda>_H");
  PSeries f(ring, N);
  for (const auto& [mu, c] : fock_coefficients(v)) f.add(mu, c);
  return f;
}

std::map<StrictPartition, CoeffPoly> factorialQ_via_fermion(const StrictPartition& lambda,
                                                            const std::vector<CoeffPoly>& a,
                                                            const Ring& ring) {
  return fock_coefficients(ket_C(lambda, a, ring));
}

bool verify_fermionic_expansions(int N, unsigned seed) {
  Ring R = a_ring(N);
  auto a = a_values(R, N);
  std::vector<PSeries> hp;
  for (int j = 0; j <= N; ++j)
    hp.push_back(j == 0 ? PSeries::one(R, N) : hatP_via_fermion(StrictPartition({j}), a, R, N));

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4), len(0, 3);
  for (int i = 0; i <= std::min(5, N); ++i) {
    PSeries q = i == 0 ? PSeries::one(R, N) : q_series(R, N, StrictPartition({i}));
    PSeries rhs = i == 0 ? PSeries::one(R, N) : PSeries(R, N);
    for (int k = 0; i + k <= N; ++k) {
      if (i + k == 0) continue;
      CoeffPoly e = elementary_e(R, k, prefix(a, i + k - 1));
      rhs += hp[i + k] * ((k % 2 ? -e : e) * Rational(2));
    }
    if (q != rhs) return false;

    for (int t = 0; t < 3; ++t) {
      std::vector<CoeffPoly> c;
      for (int m = len(rng); m > 0; --m) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        c.push_back(CoeffPoly(R, 1) * r);
      }
      PSeries lhs = qhat(i, c, R, N);
      PSeries r2 = i == 0 ? PSeries::one(R, N) : PSeries(R, N);
      for (int k = 0; i + k <= N; ++k) {
        if (i + k == 0) continue;
        r2 += hp[i + k] * (super_h(R, k, c, prefix(a, i + k - 1)) * Rational(2));
      }
      if (lhs != r2) return false;
    }
  }
  return true;
}

}  // namespace affsp
