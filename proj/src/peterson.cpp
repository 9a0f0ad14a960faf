#include "affsp/peterson.hpp"

#include <functional>
#include <tuple>

#include "affsp/linalg.hpp"

namespace affsp {

std::map<AffineWeylElt, CoeffPoly> billey_all(const AffineWeylElt& w, const Ring& ring,
                                              const std::vector<int>& word_in) {
  if (w.sigma()) throw InvalidArgument("localization needs an element of W_af");
  int n = w.n();
  std::vector<int> word = word_in.empty() ? w.reduced_word() : word_in;
  if (AffineWeylElt::from_word(word, n) != w || int(word.size()) != w.length())
    throw InvalidArgument("not a reduced word for w");
  std::map<AffineWeylElt, CoeffPoly> states;
  states.emplace(AffineWeylElt::identity(n), CoeffPoly(ring, 1));
  AffineWeylElt prefix = AffineWeylElt::identity(n);
  for (int i : word) {
    AffineWeylElt si = AffineWeylElt::simple(i, n);
    CoeffPoly root = prefix.act_poly(-level_zero_root(i, n, ring));
    std::map<AffineWeylElt, CoeffPoly> next = states;
    for (const auto& [x, c] : states) {
      AffineWeylElt xs = x * si;
      if (xs.length() != x.length() + 1) continue;
      CoeffPoly t = c * root;
      auto [it, fresh] = next.emplace(xs, t);
      if (!fresh) it->second += t;
    }
    states.swap(next);
    prefix = prefix * si;
  }
  for (auto it = states.begin(); it != states.end();)
    it = it->second.is_zero() ? states.erase(it) : std::next(it);
  return states;
}

CoeffPoly billey_xi(const AffineWeylElt& v, const AffineWeylElt& w, const Ring& ring,
                    const std::vector<int>& word) {
  auto all = billey_all(w, ring, word);
  auto it = all.find(v);
  return it == all.end() ? CoeffPoly(ring) : it->second;
}

std::map<AffineWeylElt, CoeffPoly> translation_expansion(const AffineWeylElt& t,
                                                         const Ring& ring) {
  if (!t.is_translation()) throw InvalidArgument("not a translation");
  std::map<AffineWeylElt, CoeffPoly> out;
  for (auto& [v, c] : billey_all(t, ring))
    if (v.is_grassmannian()) out.emplace(v, c);
  return out;
}

std::map<AffineWeylElt, CoeffPoly> translation_expansion(int i, int n, const Ring& ring) {
  return translation_expansion(t_eps(i, n), ring);
}

namespace {

struct EltCache {
  std::map<std::pair<AffineWeylElt, int>, NilHeckeElt> comm;  // [A_v, a_k]
};

const NilHeckeElt& commutator(EltCache& cache, const AffineWeylElt& v, int k, const Ring& ring) {
  auto key = std::make_pair(v, k);
  auto it = cache.comm.find(key);
  if (it != cache.comm.end()) return it->second;
  int n = v.n();
  CoeffPoly ak = CoeffPoly::var(ring, k);
  NilHeckeElt e = left_mul_A(v, NilHeckeElt::scalar(ak, n)) - ak * NilHeckeElt::A(v, ring);
  return cache.comm.emplace(key, std::move(e)).first->second;
}

}  // namespace

JBasisElt compute_j(const AffineWeylElt& w, const Ring& ring, int max_length) {
  int n = w.n();
  if (w.sigma()) {
    AffineWeylElt v = AffineWeylElt::pi(n).inverse() * w;
    JBasisElt j = compute_j(v, ring, max_length);
    return {w, left_mul_pi(j.elt), j.support_length};
  }
  if (!w.is_grassmannian()) throw NotGrassmannian(w.to_string());
  int d0 = w.length();
  EltCache cache;
  for (int L = d0; L <= max_length; ++L) {
    std::vector<std::pair<AffineWeylElt, Monomial>> cols;
    for (const auto& v : enumerate_affine(n, L)) {
      if (v.length() < d0 || v.is_grassmannian()) continue;
      for (const auto& m : monomials_of_degree(n, v.length() - d0)) cols.emplace_back(v, m);
    }
    using Key = std::tuple<int, AffineWeylElt, Monomial>;
    std::map<Key, std::pair<SparseRow, Rational>> rows;
    for (int k = 0; k < n; ++k) {
      for (const auto& [u, c] : commutator(cache, w, k, ring).terms())
        for (const auto& [mon, q] : c.terms()) rows[{k, u, mon}].second -= q;
      for (int col = 0; col < int(cols.size()); ++col) {
        const auto& [v, mu] = cols[col];
        for (const auto& [u, c] : commutator(cache, v, k, ring).terms())
          for (const auto& [mon, q] : c.terms()) rows[{k, u, mon * mu}].first[col] += q;
      }
    }
    EchelonSolver solver(int(cols.size()));
    bool ok = true;
    for (auto& [key, rr] : rows) {
      for (auto it = rr.first.begin(); it != rr.first.end();)
        it = it->second == 0 ? rr.first.erase(it) : std::next(it);
      if (!solver.add_row(rr.first, rr.second)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (!solver.free_columns().empty())
      throw NonUnique("commutator system for j_" + w.to_string() + " has free columns");
    auto sol = solver.particular_solution();
    NilHeckeElt x = NilHeckeElt::A(w, ring);
    int top = d0;
    for (int col = 0; col < int(cols.size()); ++col) {
      if (sol[col] == 0) continue;
      x.add(cols[col].first, CoeffPoly::monomial(ring, cols[col].second, sol[col]));
      top = std::max(top, cols[col].first.length());
    }
    return {w, x, top};
  }
  throw CutoffTooSmall("j_" + w.to_string() + " needs support beyond length " +
                       std::to_string(max_length));
}

const JBasisElt& JTable::get(const AffineWeylElt& w) {
  auto it = cache_.find(w);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(w, compute_j(w, ring_, max_length_)).first->second;
}

std::map<AffineWeylElt, CoeffPoly> structure_constants(const JBasisElt& ju, const AffineWeylElt& v) {
  if (!v.is_grassmannian()) throw NotGrassmannian(v.to_string());
  std::map<AffineWeylElt, CoeffPoly> out;
  for (const auto& [x, c] : ju.elt.terms()) {
    AffineWeylElt xv = x * v;
    if (xv.length() != x.length() + v.length() || !xv.is_grassmannian()) continue;
    auto [it, fresh] = out.emplace(xv, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

std::map<AffineWeylElt, CoeffPoly> multiply_j(const JBasisElt& ju,
                                              const std::map<AffineWeylElt, CoeffPoly>& x) {
  std::map<AffineWeylElt, CoeffPoly> out;
  for (const auto& [v, c] : x)
    for (const auto& [w, d] : structure_constants(ju, v)) {
      CoeffPoly t = c * d;
      auto [it, fresh] = out.emplace(w, t);
      if (!fresh) {
        it->second += t;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

AffinePBasis::AffinePBasis(const SeriesAction& act) : act_(&act) {
  elems_ = enumerate_grassmannian(act.n(), act.order());
  for (const auto& w : elems_) series_.emplace(w, dual_affine_P(w, act));
}

const PSeries& AffinePBasis::get(const AffineWeylElt& w) const {
  auto it = series_.find(w);
  if (it == series_.end()) throw InvalidArgument("no series for " + w.to_string());
  return it->second;
}

PSeries AffinePBasis::combine(const std::map<AffineWeylElt, CoeffPoly>& c) const {
  PSeries f(act_->ring(), act_->order());
  for (const auto& [w, x] : c)
    if (w.length() <= act_->order()) f += get(w) * x;
  return f;
}

std::map<AffineWeylElt, CoeffPoly> AffinePBasis::expand(const PSeries& f) const {
  const Ring& R = act_->ring();
  std::map<AffineWeylElt, CoeffPoly> out;
  PSeries rest = f;
  for (int d = 0; d <= act_->order(); ++d) {
    std::vector<AffineWeylElt> ws;
    for (const auto& w : elems_)
      if (w.length() == d) ws.push_back(w);
    auto parts = strict_partitions(d);
    // a-monomials present in degree d of the remainder
    std::map<Monomial, std::map<StrictPartition, Rational>> targets;
    for (const auto& mu : parts) {
      CoeffPoly c = rest.coeff(mu);
      for (const auto& [m, q] : c.terms()) targets[m][mu] = q;
    }
    for (const auto& [m, tgt] : targets) {
      EchelonSolver solver(int(ws.size()));
      bool ok = true;
      for (const auto& mu : parts) {
        SparseRow row;
        for (int c = 0; c < int(ws.size()); ++c) {
          Rational v = get(ws[c]).coeff(mu).constant_term();
          if (v != 0) row[c] = v;
        }
        auto it = tgt.find(mu);
        ok = solver.add_row(row, it == tgt.end() ? Rational(0) : it->second) && ok;
      }
      if (!ok) throw NoSolution("series is not in the span of the affine dual basis");
      auto sol = solver.unique_solution();
      for (int c = 0; c < int(ws.size()); ++c) {
        if (sol[c] == 0) continue;
        CoeffPoly t = CoeffPoly::monomial(R, m, sol[c]);
        auto [it, fresh] = out.emplace(ws[c], t);
        if (!fresh) it->second += t;
      }
    }
    for (const auto& w : ws) {
      auto it = out.find(w);
      if (it != out.end()) rest -= get(w) * it->second;
    }
  }
  if (!rest.is_zero()) throw NoSolution("remainder after expansion");
  return out;
}

bool verify_factorization(const AffineWeylElt& v, int i, const SeriesAction& act) {
  int n = act.n();
  if (v.sigma()) throw HypothesisFailed("v must lie in W_af");
  AffineWeylElt k = kappa(i, n);
  AffineWeylElt vk = v * k;
  if (!vk.is_grassmannian() || vk.length() != v.length() + k.length())
    throw HypothesisFailed("v kappa_" + std::to_string(i) + " is not a length-additive Grassmannian element");
  PSeries lhs = dual_affine_P(vk, act);
  PSeries pk = dual_affine_P(k, act);
  if (i < n) {
    if (!v.is_grassmannian()) return false;
    return lhs == multiply(pk, dual_affine_P(v, act));
  }
  AffineWeylElt p = AffineWeylElt::pi(n);
  AffineWeylElt vbar = p.inverse() * v * p;
  if (!vbar.is_grassmannian()) return false;
  SignedPerm un = u_n(n);
  PSeries pv = coeff_map(dual_affine_P(vbar, act), act.ring(), [&](const CoeffPoly& c) {
    return signed_rename(c, un.perm, un.sign);
  });
  return lhs == multiply(pk, pv);
}

namespace {

void exponent_vectors(int k, int degree, std::vector<int>& cur, int idx,
                      std::vector<std::vector<int>>& out) {
  if (idx == k) {
    if (degree == 0) out.push_back(cur);
    return;
  }
  for (int e = 0; e * (idx + 1) <= degree; ++e) {
    cur[idx] = e;
    exponent_vectors(k, degree - e * (idx + 1), cur, idx + 1, out);
  }
  cur[idx] = 0;
}

}  // namespace

PieriCertificate pieri_express(const AffineWeylElt& w, JTable& table, int extra) {
  int n = table.n();
  const Ring& R = table.ring();
  int g = 2 * n, d0 = w.length();
  std::vector<const JBasisElt*> gens;
  for (int i = 1; i <= g; ++i) gens.push_back(&table.get(rho(i, n)));

  std::map<std::vector<int>, std::map<AffineWeylElt, CoeffPoly>> prods;
  std::function<const std::map<AffineWeylElt, CoeffPoly>&(const std::vector<int>&)> prod =
      [&](const std::vector<int>& e) -> const std::map<AffineWeylElt, CoeffPoly>& {
    auto it = prods.find(e);
    if (it != prods.end()) return it->second;
    std::map<AffineWeylElt, CoeffPoly> val;
    int first = -1;
    for (int i = 0; i < g; ++i)
      if (e[i]) {
        first = i;
        break;
      }
    if (first < 0) {
      val.emplace(AffineWeylElt::identity(n), CoeffPoly(R, 1));
    } else {
      std::vector<int> f = e;
      --f[first];
      val = multiply_j(*gens[first], prod(f));
    }
    return prods.emplace(e, std::move(val)).first->second;
  };

  std::vector<std::pair<std::vector<int>, Monomial>> cols;
  for (int D = d0; D <= d0 + extra; ++D) {
    std::vector<std::vector<int>> es;
    std::vector<int> cur(g, 0);
    exponent_vectors(g, D, cur, 0, es);
    for (const auto& e : es)
      for (const auto& m : monomials_of_degree(n, D - d0)) cols.emplace_back(e, m);
  }
  std::map<std::pair<AffineWeylElt, Monomial>, SparseRow> rows;
  for (int c = 0; c < int(cols.size()); ++c)
    for (const auto& [v, coef] : prod(cols[c].first))
      for (const auto& [mon, q] : coef.terms()) rows[{v, mon * cols[c].second}][c] += q;
  EchelonSolver solver(int(cols.size()));
  Monomial one;
  bool ok = true;
  bool target_seen = false;
  for (const auto& [key, row] : rows) {
    bool is_target = key.first == w && key.second == one;
    target_seen = target_seen || is_target;
    ok = solver.add_row(row, is_target ? Rational(1) : Rational(0)) && ok;
  }
  if (!ok || !target_seen)
    throw NoSolution("P-hat_" + w.to_string() + " not reached with degree slack " +
                     std::to_string(extra));
  auto sol = solver.particular_solution();
  PieriCertificate cert{w, {}};
  std::map<AffineWeylElt, CoeffPoly> check;
  for (int c = 0; c < int(cols.size()); ++c) {
    if (sol[c] == 0) continue;
    CoeffPoly t = CoeffPoly::monomial(R, cols[c].second, sol[c]);
    auto [it, fresh] = cert.coeffs.emplace(cols[c].first, t);
    if (!fresh) it->second += t;
  }
  for (const auto& [e, c] : cert.coeffs)
    for (const auto& [v, d] : prod(e)) {
      auto [it, fresh] = check.emplace(v, c * d);
      if (!fresh) it->second += c * d;
    }
  for (auto it = check.begin(); it != check.end();)
    it = it->second.is_zero() ? check.erase(it) : std::next(it);
  std::map<AffineWeylElt, CoeffPoly> want{{w, CoeffPoly(R, 1)}};
  if (check != want) throw NoSolution("certificate does not reproduce j_" + w.to_string());
  return cert;
}

PSeries pieri_evaluate(const PieriCertificate& c, const SeriesAction& act) {
  int n = act.n();
  std::vector<PSeries> gens;
  for (int i = 1; i <= 2 * n; ++i) gens.push_back(dual_affine_P(rho(i, n), act));
  PSeries out(act.ring(), act.order());
  for (const auto& [e, coef] : c.coeffs) {
    PSeries m = PSeries::one(act.ring(), act.order());
    for (int i = 0; i < 2 * n; ++i)
      for (int k = 0; k < e[i]; ++k) m = multiply(m, gens[i]);
    out += m * coef;
  }
  return out;
}

bool pieri_generation(int max_length, int n, int order) {
  Ring R = a_ring(n);
  JTable table(R, n);
  SeriesAction act(R, n, order);
  for (const auto& w : enumerate_grassmannian(n, max_length)) {
    bool found = false;
    for (int extra = 0; extra <= 4 && !found; ++extra) {
      try {
        PieriCertificate c = pieri_express(w, table, extra);
        if (pieri_evaluate(c, act) != dual_affine_P(w, act)) return false;
        found = true;
      } catch (const NoSolution&) {
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace affsp
