#include "affsp/centralizer.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "affsp/factorial.hpp"

namespace affsp {

namespace {

std::string zname(int i, int j) { return "z" + std::to_string(i) + std::to_string(j); }

int bar(int i, int n) { return 2 * n + 2 - i; }

CoeffPoly sgn(const Ring& ring, int e) { return CoeffPoly(ring, e % 2 ? -1 : 1); }

PolyMatrix zero_matrix(int n, const Ring& ring) {
  return PolyMatrix(2 * n + 1, 2 * n + 1, CoeffPoly(ring));
}

PolyMatrix identity_matrix(int n, const Ring& ring) {
  return PolyMatrix::identity(2 * n + 1, CoeffPoly(ring), CoeffPoly(ring, 1));
}

PolyMatrix scale(const PolyMatrix& m, const CoeffPoly& c) {
  return m.map([&](const CoeffPoly& x) { return x * c; });
}

PolyMatrix substitute_matrix(const PolyMatrix& m, const std::map<size_t, CoeffPoly>& v) {
  return m.map([&](const CoeffPoly& x) { return substitute(x, v); });
}

// exp of a nilpotent matrix
template <class T>
Matrix<T> nilpotent_exp(const Matrix<T>& x, const T& one, int max_terms) {
  int sz = x.rows();
  Matrix<T> s = Matrix<T>::identity(sz, x.zero(), one), t = s;
  for (int k = 1; k <= max_terms; ++k) {
    t = t * x;
    Rational inv(1, k);
    t = t.map([&](const T& e) { return e * inv; });
    bool zero = true;
    for (int i = 0; i < sz && zero; ++i)
      for (int j = 0; j < sz && zero; ++j) zero = t(i, j).is_zero();
    if (zero) break;
    s = s + t;
  }
  return s;
}

CheckResult check(std::string name, bool ok, std::string detail = "") {
  return {std::move(name), ok, ok ? "" : std::move(detail)};
}

std::string ij(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

Ring centralizer_ring(int n) {
  if (n < 1 || n > 4) throw InvalidArgument("centralizer ring supports 1 <= n <= 4");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 1; i <= 2 * n + 1; ++i)
    for (int j = i; j <= 2 * n + 1; ++j) names.push_back(zname(i, j));
  for (int k = 1; k <= 2 * n; ++k) names.push_back("zh" + std::to_string(k));
  return make_ring(names);
}

CoeffPoly z_var(const Ring& ring, int i, int j) { return CoeffPoly::var(ring, zname(i, j)); }

CoeffPoly zhat_var(const Ring& ring, int k) {
  return CoeffPoly::var(ring, "zh" + std::to_string(k));
}

std::vector<CoeffPoly> b_sequence(const Ring& ring, int n) {
  auto a = a_values(ring, n);
  std::vector<CoeffPoly> b(a);
  b.push_back(CoeffPoly(ring));
  for (int i = n; i >= 1; --i) b.push_back(-a[i - 1]);
  return b;
}

PolyMatrix build_J(int n, const Ring& ring) {
  PolyMatrix j = zero_matrix(n, ring);
  for (int i = 1; i <= 2 * n + 1; ++i) j(i - 1, bar(i, n) - 1) = sgn(ring, i + 1);
  return j;
}

PolyMatrix build_L0(int n, const Ring& ring) {
  PolyMatrix l = zero_matrix(n, ring);
  auto b = b_sequence(ring, n);
  for (int i = 0; i < 2 * n + 1; ++i) {
    l(i, i) = b[i];
    if (i + 1 < 2 * n + 1) l(i, i + 1) = CoeffPoly(ring, -1);
  }
  return l;
}

PolyMatrix chevalley_f(int i, int n, const Ring& ring) {
  PolyMatrix f = zero_matrix(n, ring);
  f(i, i - 1) = CoeffPoly(ring, 1);
  f(2 * n + 1 - i, 2 * n - i) = CoeffPoly(ring, 1);
  return f;
}

bool in_so(const PolyMatrix& x, int n) {
  PolyMatrix j = build_J(n, x.zero().ring());
  PolyMatrix s = x.transpose() * j + j * x;
  return s == zero_matrix(n, x.zero().ring());
}

bool so_entry_condition(const PolyMatrix& x, int n) {
  int m = 2 * n + 1;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (x(m - j, m - i) != x(i - 1, j - 1) * Rational((i + j - 1) % 2 ? -1 : 1)) return false;
  return true;
}

bool in_SO(const PolyMatrix& g, int n) {
  const Ring& ring = g.zero().ring();
  PolyMatrix j = build_J(n, ring);
  if (g.transpose() * j * g != j) return false;
  int m = g.rows();
  bool lower = true, upper = true;
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) {
      if (r < c && !g(r, c).is_zero()) lower = false;
      if (r > c && !g(r, c).is_zero()) upper = false;
    }
  if (!lower && !upper) throw InvalidArgument("in_SO needs a triangular matrix");
  CoeffPoly det(ring, 1);
  for (int r = 0; r < m; ++r) det = det * g(r, r);
  return det == CoeffPoly(ring, 1);
}

PolyMatrix R_matrix(const PolyMatrix& z, int n) {
  PolyMatrix j = build_J(n, z.zero().ring());
  return j - z.transpose() * j * z;
}

CentralizerRelations centralizer_relations(int n, const Ring& ring) {
  CentralizerRelations out;
  int m = 2 * n + 1;
  auto b = b_sequence(ring, n);
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      out.typeA[{i, j}] = (b[i - 1] - b[j - 1]) * z_var(ring, i, j) + z_var(ring, i, j - 1) -
                          z_var(ring, i + 1, j);
  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= m; ++j) {
      CoeffPoly r(ring);
      if (i == bar(j, n)) r -= sgn(ring, i);
      for (int p = bar(j, n); p <= i; ++p)
        r += sgn(ring, p) * z_var(ring, p, i) * z_var(ring, bar(p, n), j);
      out.R[{i, j}] = r;
    }
  out.center = z_var(ring, n + 1, n + 1) - CoeffPoly(ring, 1);
  return out;
}

CoeffPoly y_closed_form(int i, int j, int n, const Ring& ring) {
  auto b = b_sequence(ring, n);
  std::vector<CoeffPoly> A(b.begin(), b.begin() + (i - 1));
  CoeffPoly y(ring);
  for (int k = 0; k <= i - 1; ++k) {
    std::vector<CoeffPoly> B(b.begin() + (j - i + k), b.begin() + j);
    y += pleth_e(ring, k, A, B) * z_var(ring, 1, k + j - i + 1);
  }
  return y;
}

ReducedPresentation reduced_presentation(int n, const Ring& ring) {
  int m = 2 * n + 1;
  auto b = b_sequence(ring, n);
  ReducedPresentation out{zero_matrix(n, ring), zero_matrix(n, ring), {}};
  PolyMatrix& y = out.y;
  for (int j = 1; j <= m; ++j) y(0, j - 1) = z_var(ring, 1, j);
  for (int i = 2; i <= m; ++i)
    for (int j = i; j <= m; ++j)
      y(i - 1, j - 1) = y(i - 2, j - 2) + (b[i - 2] - b[j - 1]) * y(i - 2, j - 1);

  CoeffPoly z11 = z_var(ring, 1, 1);
  std::map<size_t, CoeffPoly> first_row;
  for (int k = 1; k <= 2 * n; ++k) first_row[ring->require(zname(1, k + 1))] = zhat_var(ring, k);
  CoeffPoly w11 = CoeffPoly(ring, 1) - (y(n, n) - z11);
  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= m; ++j) {
      CoeffPoly w = i == j ? (i == 1 ? w11 : y(i - 1, i - 1) - z11 + w11) : y(i - 1, j - 1);
      out.w(i - 1, j - 1) = substitute(w, first_row);
    }

  const PolyMatrix& W = out.w;
  for (int i = 1; i <= n; ++i) {
    int col = n + i;  // 0-based column n+i+1
    CoeffPoly r = W(n, col) * W(n, col);
    for (int j = 1; j <= i; ++j) {
      CoeffPoly t = W(n + j, col) * W(n - j, col) * Rational(2);
      r += j % 2 ? -t : t;
    }
    out.Rhat.push_back(r);
  }
  return out;
}

std::vector<CheckResult> verify_relation_identities(int n) {
  Ring ring = centralizer_ring(n);
  int m = 2 * n + 1;
  auto b = b_sequence(ring, n);
  auto rel = centralizer_relations(n, ring);
  auto pres = reduced_presentation(n, ring);
  std::vector<CheckResult> out;

  PolyMatrix Z = zero_matrix(n, ring);
  std::map<size_t, CoeffPoly> to_w;
  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= m; ++j) {
      Z(i - 1, j - 1) = z_var(ring, i, j);
      to_w[ring->require(zname(i, j))] = pres.w(i - 1, j - 1);
    }

  // the entry formula against J - tZJZ
  {
    PolyMatrix R = R_matrix(Z, n);
    std::string bad;
    for (const auto& [key, r] : rel.R)
      if (r != R(key.first - 1, key.second - 1) && bad.empty()) bad = ij(key.first, key.second);
    out.push_back(check("R entry formula", bad.empty(), bad));
  }
  {
    std::string bad;
    for (int i = 1; i <= n && bad.empty(); ++i) {
      CoeffPoly want = sgn(ring, i) * (z_var(ring, i, i) * z_var(ring, bar(i, n), bar(i, n)) -
                                       CoeffPoly(ring, 1));
      if (rel.R.at({i, bar(i, n)}) != want) bad = ij(i, bar(i, n));
      for (int j = i; j < bar(i, n) && bad.empty(); ++j)
        if (!rel.R.at({i, j}).is_zero()) bad = ij(i, j);
    }
    out.push_back(check("antidiagonal and above-antidiagonal R", bad.empty(), bad));
  }
  {
    std::string bad;
    for (int i = 1; i <= m && bad.empty(); ++i)
      for (int j = i; j <= m && bad.empty(); ++j)
        if (pres.y(i - 1, j - 1) != y_closed_form(i, j, n, ring)) bad = ij(i, j);
    out.push_back(check("y recursion equals closed form", bad.empty(), bad));
  }
  out.push_back(check("w_{n+1,n+1} = 1", pres.w(n, n) == CoeffPoly(ring, 1)));
  {
    std::string bad;
    for (const auto& [key, r] : rel.typeA)
      if (!substitute(r, to_w).is_zero() && bad.empty()) bad = ij(key.first, key.second);
    out.push_back(check("w satisfies the centralizer equations", bad.empty(), bad));
  }
  out.push_back(check("center relation at w", substitute(rel.center, to_w).is_zero()));

  std::map<std::pair<int, int>, CoeffPoly> Rw;
  for (const auto& [key, r] : rel.R) Rw[key] = substitute(r, to_w);
  {
    std::string bad;
    for (int i = 1; i <= n + 1 && bad.empty(); ++i)
      for (int j = i; j < bar(i, n) && bad.empty(); ++j)
        if (!Rw.at({i, j}).is_zero()) bad = ij(i, j);
    if (!Rw.at({n + 1, n + 1}).is_zero()) bad = ij(n + 1, n + 1);
    out.push_back(check("trivial R_ij vanish at w", bad.empty(), bad));
  }
  {
    std::string bad;
    for (int k = n + 2; k <= m && bad.empty(); ++k)
      if (Rw.at({k - 1, k}) != b[k - 1] * Rw.at({k, k})) bad = "k=" + std::to_string(k);
    out.push_back(check("R_{k-1,k} = b_k R_kk", bad.empty(), bad));
  }
  {
    std::string bad;
    for (int i = 1; i <= m && bad.empty(); ++i)
      for (int j = i + 2; j <= m && bad.empty(); ++j) {
        if (i + j < 2 * n + 2) continue;
        CoeffPoly rhs = -Rw.at({i + 1, j - 1}) + (b[i] + b[j - 1]) * Rw.at({i + 1, j});
        if (Rw.at({i, j}) != rhs) bad = ij(i, j);
      }
    out.push_back(check("R_ij = -R_{i+1,j-1} + (b_{i+1}+b_j) R_{i+1,j}", bad.empty(), bad));
  }
  {
    std::string bad;
    PolyMatrix RW = R_matrix(pres.w, n);
    for (int i = 1; i <= n && bad.empty(); ++i) {
      int k = n + 1 + i;
      CoeffPoly want = pres.Rhat[i - 1] * Rational(n % 2 ? 1 : -1);
      if (Rw.at({k, k}) != want || RW(k - 1, k - 1) != want) bad = "i=" + std::to_string(i);
    }
    out.push_back(check("R_kk(w) = (-1)^{n+1} Rhat_{2i}", bad.empty(), bad));
  }
  out.push_back(check("leading terms zh_i^2", leading_terms_symbolic(n)));
  return out;
}

namespace {

// Rhat specialised at a, in the ring zh1..zh2n
std::vector<CoeffPoly> specialised_rhat(int n, const std::vector<Rational>& a, const Ring& zr,
                                        std::vector<CoeffPoly>* relations_w) {
  Ring ring = centralizer_ring(n);
  auto pres = reduced_presentation(n, ring);
  std::map<size_t, CoeffPoly> vals;
  for (int i = 0; i < n; ++i) vals[i] = CoeffPoly(zr, a[i]);
  std::vector<CoeffPoly> out;
  for (const auto& r : pres.Rhat) out.push_back(substitute(r, vals, zr));
  if (relations_w) {
    PolyMatrix RW = R_matrix(pres.w, n);
    for (int i = 0; i < RW.rows(); ++i)
      for (int j = i; j < RW.cols(); ++j) relations_w->push_back(substitute(RW(i, j), vals, zr));
  }
  return out;
}

const Term& grevlex_leading(const CoeffPoly& f, size_t nv) {
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (grevlex_less(best->first, t.first, nv)) best = &t;
  return *best;
}

CoeffPoly normal_form(CoeffPoly f, const std::vector<CoeffPoly>& gs, size_t nv) {
  const Ring& ring = f.ring();
  CoeffPoly rem(ring);
  while (!f.is_zero()) {
    Term lt = grevlex_leading(f, nv);
    bool reduced = false;
    for (const auto& g : gs) {
      const Term& lg = grevlex_leading(g, nv);
      if (!lg.first.divides(lt.first)) continue;
      f -= CoeffPoly::monomial(ring, lt.first / lg.first, lt.second / lg.second) * g;
      reduced = true;
      break;
    }
    if (!reduced) {
      CoeffPoly t = CoeffPoly::monomial(ring, lt.first, lt.second);
      rem += t;
      f -= t;
    }
  }
  return rem;
}

}  // namespace

GroebnerReport groebner_check(int n, const std::vector<Rational>& a, int max_degree) {
  if (int(a.size()) != n) throw InvalidArgument("specialization needs n values");
  std::vector<std::string> names;
  for (int k = 1; k <= 2 * n; ++k) names.push_back("zh" + std::to_string(k));
  Ring zr = make_ring(names);
  size_t nv = 2 * n;
  std::vector<CoeffPoly> rel_w;
  auto gs = specialised_rhat(n, a, zr, &rel_w);

  GroebnerReport rep;
  rep.a = a;
  rep.leading_ok = true;
  std::vector<Monomial> lms;
  for (int i = 1; i <= n; ++i) {
    const Term& lt = grevlex_leading(gs[i - 1], nv);
    lms.push_back(lt.first);
    rep.leading.push_back(CoeffPoly::monomial(zr, lt.first, 1).to_string());
    Monomial want;
    want.e[i - 1] = 2;
    if (lt.first != want) rep.leading_ok = false;
  }
  for (size_t x = 0; x < lms.size(); ++x)
    for (size_t y = x + 1; y < lms.size(); ++y)
      for (size_t v = 0; v < nv; ++v)
        if (lms[x].e[v] && lms[y].e[v]) rep.leading_ok = false;

  // columns: monomials of degree <= max_degree
  std::map<Monomial, int> col;
  std::vector<std::vector<Monomial>> by_deg;
  for (int d = 0; d <= max_degree; ++d) {
    by_deg.push_back(monomials_of_degree(nv, d));
    for (const auto& mo : by_deg.back()) col.emplace(mo, int(col.size()));
  }
  int prev_dim = 0;
  for (int d = 0; d <= max_degree; ++d) {
    int count = 0;
    for (const auto& mo : by_deg[d]) {
      bool standard = true;
      for (const auto& lm : lms) standard = standard && !lm.divides(mo);
      count += standard;
    }
    rep.standard_counts.push_back(count);

    std::vector<SparseRow> rows;
    for (const auto& g : gs) {
      int dg = g.total_degree();
      for (int e = 0; e + dg <= d; ++e)
        for (const auto& mo : by_deg[e]) {
          CoeffPoly p = CoeffPoly::monomial(zr, mo, 1) * g;
          SparseRow row;
          for (const auto& [m2, c] : p.terms()) row[col.at(m2)] = c;
          rows.push_back(row);
        }
    }
    int fd = 0;
    for (int e = 0; e <= d; ++e) fd += int(by_deg[e].size());
    int dim = fd - sparse_rank(rows, int(col.size()));
    rep.quotient_dims.push_back(dim - prev_dim);
    prev_dim = dim;
  }
  rep.relations_reduce = true;
  for (const auto& r : rel_w)
    if (!normal_form(r, gs, nv).is_zero()) rep.relations_reduce = false;
  return rep;
}

bool leading_terms_symbolic(int n) {
  Ring ring = centralizer_ring(n);
  auto pres = reduced_presentation(n, ring);
  size_t off = ring->require("zh1");
  size_t nv = 2 * n;
  for (int i = 1; i <= n; ++i) {
    // collect zh-monomials with their a-coefficients
    std::map<Monomial, CoeffPoly> by_z;
    for (const auto& [mo, c] : pres.Rhat[i - 1].terms()) {
      Monomial zpart, apart;
      for (size_t v = 0; v < ring->size(); ++v) {
        if (v >= off) zpart.e[v - off] = mo.e[v];
        else apart.e[v] = mo.e[v];
      }
      auto it = by_z.emplace(zpart, CoeffPoly(ring)).first;
      it->second += CoeffPoly::monomial(ring, apart, c);
    }
    Monomial want;
    want.e[i - 1] = 2;
    auto it = by_z.find(want);
    if (it == by_z.end() || it->second != CoeffPoly(ring, 1)) return false;
    for (const auto& [zm, c] : by_z)
      if (zm != want && !grevlex_less(zm, want, nv)) return false;
  }
  return true;
}

std::vector<std::vector<Rational>> groebner_specializations(int n, int count, unsigned seed) {
  std::vector<std::vector<Rational>> out;
  out.push_back(std::vector<Rational>(n, 0));
  if (n >= 2) {
    std::vector<Rational> d(n, 0);
    d[0] = d[1] = 1;
    out.push_back(d);
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-6, 6);
  while (int(out.size()) < count) {
    std::vector<Rational> a(n);
    for (auto& x : a) x = dist(rng);
    bool regular = true;
    for (int i = 0; i < n; ++i) {
      if (a[i] == 0) regular = false;
      for (int j = i + 1; j < n; ++j)
        if (a[i] == a[j] || a[i] == -a[j]) regular = false;
    }
    if (regular) out.push_back(a);
  }
  return out;
}

CoeffPoly at_w(const AffineWeylElt& w, const CoeffPoly& f) { return w.inverse().act_poly(f); }

PolyMatrix at_w(const AffineWeylElt& w, const PolyMatrix& m) {
  return m.map([&](const CoeffPoly& x) { return at_w(w, x); });
}

PolyMatrix u_simple(int i, int n, const Ring& ring) {
  PolyMatrix x = scale(chevalley_f(i, n, ring), -simple_root_poly(i, ring));
  return nilpotent_exp(x, CoeffPoly(ring, 1), 2 * n + 1);
}

PolyMatrix u_matrix_word(const std::vector<int>& word, int n, const Ring& ring) {
  PolyMatrix u = identity_matrix(n, ring);
  AffineWeylElt w = AffineWeylElt::identity(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    u = at_w(w, u_simple(*it, n, ring)) * u;
    w = AffineWeylElt::simple(*it, n) * w;
  }
  return u;
}

PolyMatrix u_matrix(const AffineWeylElt& w, const Ring& ring) {
  return u_matrix_word(w.reduced_word(), w.n(), ring);
}

bool verify_uw(int n) {
  Ring ring = a_ring(n);
  PolyMatrix L0 = build_L0(n, ring);
  CoeffPoly one(ring, 1);
  auto ws = enumerate_finite(n);
  std::map<AffineWeylElt, PolyMatrix> us;
  for (const auto& w : ws) {
    PolyMatrix u = u_matrix(w, ring);
    for (const auto& word : all_reduced_words(w))
      if (u_matrix_word(word, n, ring) != u) return false;
    if (!in_SO(u, n)) return false;
    if (u * L0 * unitriangular_inverse(u, one) != at_w(w, L0)) return false;
    us.emplace(w, u);
  }
  for (const auto& v : ws)
    for (const auto& w : ws)
      if (us.at(v * w) != at_w(w, us.at(v)) * us.at(w)) return false;
  return true;
}

RatMatrix m_matrix(int n, const Ring& ring) {
  auto b = b_sequence(ring, n);
  int m = 2 * n + 1;
  RatMatrix M(m, m, RationalFunction(ring, 0));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      CoeffPoly den(ring, 1);
      for (int k = i + 1; k <= j; ++k) den = den * (b[k] - b[i]);
      M(i, j) = RationalFunction(CoeffPoly(ring, 1), den);
    }
  return M;
}

bool verify_M(int n) {
  Ring ring = a_ring(n);
  RatMatrix M = m_matrix(n, ring);
  RationalFunction one(ring, 1);
  for (int i = 0; i < M.rows(); ++i)
    if (M(i, i) != one) return false;
  RatMatrix L = build_L0(n, ring).map([](const CoeffPoly& c) { return RationalFunction(c); });
  RatMatrix D = M * L * unitriangular_inverse(M, one);
  auto b = b_sequence(ring, n);
  for (int i = 0; i < D.rows(); ++i)
    for (int j = 0; j < D.cols(); ++j)
      if (D(i, j) != (i == j ? RationalFunction(b[i]) : RationalFunction(ring, 0))) return false;
  return true;
}

SeriesMatrix beta_matrix(int n, int order) {
  Ring ring = a_ring(n);
  auto b = b_sequence(ring, n);
  int m = 2 * n + 1;
  SeriesMatrix G(m, m, PSeries(ring, order));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      std::vector<CoeffPoly> c(b.begin() + i, b.begin() + j + 1);
      PSeries q = qhat(j - i, c, ring, order);
      G(i, j) = (j - i) % 2 ? -q : q;
    }
  return G;
}

SeriesMatrix exp_matrix(int n, int order) {
  Ring ring = a_ring(n);
  int m = 2 * n + 1;
  PolyMatrix L0 = build_L0(n, ring), Lk = L0;
  Matrix<PowerSumPoly> X(m, m, PowerSumPoly(ring, order));
  for (int k = 1; k <= order; ++k) {
    if (k > 1) Lk = Lk * L0;
    if (k % 2 == 0) continue;
    PowerSumPoly pk = PowerSumPoly::p(ring, order, k) * Rational(2, k);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (!Lk(i, j).is_zero()) X(i, j) += pk * Lk(i, j);
  }
  // X has no weight-0 part, so X^k vanishes for k > order
  auto E = nilpotent_exp(X, PowerSumPoly::constant(ring, order, CoeffPoly(ring, 1)), order);
  return E.map([](const PowerSumPoly& p) { return from_powersum(p); });
}

PSeries evaluate_series(const CoeffPoly& f, const std::map<size_t, PSeries>& values,
                        const Ring& target, int order) {
  size_t na = target->size();
  std::map<std::pair<size_t, int>, PSeries> powers;
  std::function<PSeries(size_t, int)> power = [&](size_t v, int e) -> PSeries {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    PSeries p = e == 1 ? values.at(v) : multiply(power(v, e - 1), values.at(v));
    return powers.emplace(key, p).first->second;
  };
  PSeries out(target, order);
  for (const auto& [mo, c] : f.terms()) {
    Monomial apart;
    for (size_t v = 0; v < na; ++v) apart.e[v] = mo.e[v];
    PSeries t = PSeries::constant(target, order, CoeffPoly::monomial(target, apart, c));
    for (size_t v = na; v < f.ring()->size(); ++v)
      if (mo.e[v]) {
        if (!values.count(v)) throw InvalidArgument("no value for " + f.ring()->name(v));
        t = multiply(t, power(v, mo.e[v]));
      }
    out += t;
  }
  return out;
}

std::vector<CheckResult> beta_substitute(int n, int order) {
  std::vector<CheckResult> out;
  Ring ar = a_ring(n);
  Ring ring = centralizer_ring(n);
  int m = 2 * n + 1;
  SeriesMatrix G = beta_matrix(n, order);
  auto constant = [&](const PolyMatrix& x) {
    return x.map([&](const CoeffPoly& c) { return PSeries::constant(ar, order, c); });
  };
  SeriesMatrix L = constant(build_L0(n, ar)), J = constant(build_J(n, ar));
  out.push_back(check("G L0 = L0 G", G * L == L * G));
  out.push_back(check("tG J G = J", G.transpose() * J * G == J));
  out.push_back(check("G_{n+1,n+1} = 1", G(n, n) == PSeries::one(ar, order)));
  {
    std::string bad;
    SeriesMatrix E = exp_matrix(n, order);
    for (int i = 0; i < m && bad.empty(); ++i)
      for (int j = 0; j < m && bad.empty(); ++j)
        if (E(i, j) != G(i, j)) bad = ij(i + 1, j + 1);
    out.push_back(check("G equals exp(2 sum (p_m/m) L0^m)", bad.empty(), bad));
  }
  {
    std::string bad;
    auto a = a_values(ar, n);
    for (int i = 1; i <= n && bad.empty(); ++i) {
      if (G(i - 1, i - 1) != omega_series(a[i - 1], order)) bad = "z_ii, i=" + std::to_string(i);
      if (G(bar(i, n) - 1, bar(i, n) - 1) != omega_series(-a[i - 1], order))
        bad = "z_{ibar,ibar}, i=" + std::to_string(i);
    }
    out.push_back(check("beta(z_ii) = Omega(a_i|y)", bad.empty(), bad));
  }
  // all defining relations at z_ij = G_ij
  std::map<size_t, PSeries> zval, zhval;
  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= m; ++j) zval.emplace(ring->require(zname(i, j)), G(i - 1, j - 1));
  for (int k = 1; k <= 2 * n; ++k) zhval.emplace(ring->require("zh" + std::to_string(k)), G(0, k));
  auto rel = centralizer_relations(n, ring);
  {
    std::string bad;
    for (const auto& [key, r] : rel.typeA)
      if (!evaluate_series(r, zval, ar, order).is_zero() && bad.empty())
        bad = "typeA " + ij(key.first, key.second);
    for (const auto& [key, r] : rel.R)
      if (!evaluate_series(r, zval, ar, order).is_zero() && bad.empty())
        bad = "R " + ij(key.first, key.second);
    out.push_back(check("defining relations vanish at G", bad.empty(), bad));
  }
  auto pres = reduced_presentation(n, ring);
  {
    std::string bad;
    for (int i = 1; i <= n && bad.empty(); ++i)
      if (!evaluate_series(pres.Rhat[i - 1], zhval, ar, order).is_zero())
        bad = "Rhat_" + std::to_string(2 * i);
    out.push_back(check("Rhat_{2i}(beta) = 0", bad.empty(), bad));
  }
  {
    std::string bad;
    for (int i = 1; i <= m && bad.empty(); ++i)
      for (int j = i; j <= m && bad.empty(); ++j)
        if (evaluate_series(pres.w(i - 1, j - 1), zhval, ar, order) != G(i - 1, j - 1))
          bad = ij(i, j);
    out.push_back(check("beta(w_ij) = G_ij", bad.empty(), bad));
  }
  return out;
}

std::string render(const CoeffPoly& f) { return f.to_string(); }

}  // namespace affsp
