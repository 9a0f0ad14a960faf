#include "affsp/nilhecke.hpp"

#include <sstream>

namespace affsp {

CoeffPoly level_zero_root(int i, int n, const Ring& ring) {
  if (i == 0) return CoeffPoly::var(ring, 0) * Rational(-2);
  if (i == n) return CoeffPoly::var(ring, n - 1) * Rational(2);
  return CoeffPoly::var(ring, i - 1) - CoeffPoly::var(ring, i);
}

CoeffPoly reflect_poly(int i, int n, const CoeffPoly& s) {
  return AffineWeylElt::simple(i, n).act_poly(s);
}

CoeffPoly divided_difference(int i, int n, const CoeffPoly& s) {
  CoeffPoly d = s - reflect_poly(i, n, s);
  if (d.is_zero()) return d;
  return exact_divide(d, level_zero_root(i, n, s.ring()));
}

namespace {

PSeries divide_series(const PSeries& f, const CoeffPoly& alpha) {
  PSeries out(f.ring(), f.order());
  for (const auto& [mu, c] : f.terms()) out.add(mu, exact_divide(c, alpha));
  return out;
}

}  // namespace

SeriesAction::SeriesAction(Ring ring, int n, int order)
    : ring_(std::move(ring)), n_(n), order_(order) {
  for (int i = 0; i < n; ++i) {
    if (ring_->size() <= size_t(i) || ring_->name(i) != "a" + std::to_string(i + 1))
      throw VariableSetMismatch("series action needs a1..an first");
    CoeffPoly a = CoeffPoly::var(ring_, i);
    omega_pos_.push_back(omega_series(a, order));
    omega_neg_.push_back(omega_series(-a, order));
  }
  PSeries prod = PSeries::one(ring_, order);
  for (const auto& o : omega_pos_) prod = multiply(prod, o);
  eta_ = sqrt_series(prod);
  eta_inv_ = inverse_series(eta_);
}

const PSeries& SeriesAction::omega(int i, int sign) const {
  return sign > 0 ? omega_pos_.at(i - 1) : omega_neg_.at(i - 1);
}

PSeries SeriesAction::apply_u(const SignedPerm& u, const PSeries& f) const {
  return coeff_map(f, ring_, [&](const CoeffPoly& c) {
    return c.is_zero() ? c : signed_rename(c, u.perm, u.sign);
  });
}

PSeries SeriesAction::act(const AffineWeylElt& w, const PSeries& f) const {
  if (w.n() != n_) throw InvalidArgument("rank mismatch");
  PSeries g = apply_u(w.cl(), f);
  const auto& t2 = w.doubled_translation();
  bool half = w.sigma();
  if (half) g = multiply(eta_, g);
  for (int i = 0; i < n_; ++i) {
    int e = (t2[i] - (half ? 1 : 0)) / 2;
    for (int k = 0; k < std::abs(e); ++k) g = multiply(omega(i + 1, e > 0 ? 1 : -1), g);
  }
  return g;
}

PSeries SeriesAction::reflect(int i, const PSeries& f) const {
  if (i == 0) {
    SignedPerm u = SignedPerm::identity(n_);
    u.sign[0] = -1;
    return multiply(omega(1), apply_u(u, f));
  }
  return apply_u(AffineWeylElt::simple(i, n_).cl(), f);
}

PSeries SeriesAction::pi(const PSeries& f) const {
  return multiply(eta_, apply_u(u_n(n_), f));
}

PSeries SeriesAction::A(int i, const PSeries& f) const {
  return divide_series(f - reflect(i, f), level_zero_root(i, n_, ring_));
}

PSeries SeriesAction::A_word(const std::vector<int>& word, const PSeries& f) const {
  PSeries g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = A(*it, g);
  return g;
}

PSeries SeriesAction::A(const AffineWeylElt& w, const PSeries& f) const {
  PSeries g = A_word(w.reduced_word(), f);
  return w.sigma() ? pi(g) : g;
}

InfiniteRankAction::InfiniteRankAction(Ring ring, int order)
    : ring_(std::move(ring)), order_(order), M_(0) {
  while (M_ < int(ring_->size()) && ring_->name(M_) == "a" + std::to_string(M_ + 1)) ++M_;
  if (M_ < order + 2) throw InvalidArgument("a-list shorter than order + 2");
  omega1_ = omega_series(CoeffPoly::var(ring_, 0), order);
}

PSeries InfiniteRankAction::reflect(int i, const PSeries& f) const {
  std::vector<int> target(ring_->size()), sign(ring_->size(), 1);
  for (size_t k = 0; k < target.size(); ++k) target[k] = int(k);
  if (i == 0) {
    sign[0] = -1;
  } else {
    if (i + 1 > M_) throw InvalidArgument("reflection beyond the a-list");
    std::swap(target[i - 1], target[i]);
  }
  PSeries g = coeff_map(f, ring_, [&](const CoeffPoly& c) {
    return c.is_zero() ? c : signed_rename(c, target, sign);
  });
  return i == 0 ? multiply(omega1_, g) : g;
}

PSeries InfiniteRankAction::A(int i, const PSeries& f) const {
  CoeffPoly alpha = i == 0 ? CoeffPoly::var(ring_, 0) * Rational(-2)
                           : CoeffPoly::var(ring_, i - 1) - CoeffPoly::var(ring_, i);
  return divide_series(f - reflect(i, f), alpha);
}

PSeries dual_affine_P(const AffineWeylElt& w, const SeriesAction& act) {
  AffineWeylElt v = w.sigma() ? AffineWeylElt::pi(w.n()).inverse() * w : w;
  if (!v.is_grassmannian()) throw NotGrassmannian(w.to_string());
  return act.A(w, PSeries::one(act.ring(), act.order()));
}

PSeries dual_affine_P(const AffineWeylElt& w, int order) {
  SeriesAction act(a_ring(w.n()), w.n(), order);
  return dual_affine_P(w, act);
}

NilHeckeElt NilHeckeElt::A(const AffineWeylElt& w, const Ring& ring) {
  NilHeckeElt x(ring, w.n());
  x.add(w, CoeffPoly(ring, 1));
  return x;
}

NilHeckeElt NilHeckeElt::scalar(const CoeffPoly& c, int n) {
  NilHeckeElt x(c.ring(), n);
  x.add(AffineWeylElt::identity(n), c);
  return x;
}

NilHeckeElt NilHeckeElt::group_element(const AffineWeylElt& w, const Ring& ring) {
  int n = w.n();
  NilHeckeElt x = scalar(CoeffPoly(ring, 1), n);
  auto word = w.reduced_word();
  // build from the right: s_{i_1} (s_{i_2} (...))
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    // s_i y = y - alpha_i A_i y
    x -= level_zero_root(*it, n, ring) * left_mul_A(*it, x);
  }
  if (w.sigma()) x = left_mul_pi(x);
  return x;
}

CoeffPoly NilHeckeElt::coeff(const AffineWeylElt& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? CoeffPoly(ring_) : it->second;
}

void NilHeckeElt::add(const AffineWeylElt& w, const CoeffPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NilHeckeElt& NilHeckeElt::operator+=(const NilHeckeElt& o) {
  if (!ring_) *this = NilHeckeElt(o.ring_, o.n_);
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

NilHeckeElt& NilHeckeElt::operator-=(const NilHeckeElt& o) {
  if (!ring_) *this = NilHeckeElt(o.ring_, o.n_);
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

NilHeckeElt operator*(const CoeffPoly& c, const NilHeckeElt& a) {
  NilHeckeElt out(a.ring(), a.n());
  if (c.is_zero()) return out;
  for (const auto& [w, d] : a.terms()) out.add(w, c * d);
  return out;
}

NilHeckeElt left_mul_A(int i, const NilHeckeElt& x) {
  int n = x.n();
  NilHeckeElt out(x.ring(), n);
  AffineWeylElt si = AffineWeylElt::simple(i, n);
  for (const auto& [w, c] : x.terms()) {
    AffineWeylElt sw = si * w;
    if (sw.length() > w.length()) out.add(sw, reflect_poly(i, n, c));
    out.add(w, divided_difference(i, n, c));
  }
  return out;
}

NilHeckeElt left_mul_pi(const NilHeckeElt& x) {
  int n = x.n();
  NilHeckeElt out(x.ring(), n);
  AffineWeylElt p = AffineWeylElt::pi(n);
  for (const auto& [w, c] : x.terms()) out.add(p * w, p.act_poly(c));
  return out;
}

NilHeckeElt left_mul_A(const AffineWeylElt& u, const NilHeckeElt& x) {
  auto word = u.reduced_word();
  NilHeckeElt y = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) y = left_mul_A(*it, y);
  return u.sigma() ? left_mul_pi(y) : y;
}

NilHeckeElt operator*(const NilHeckeElt& a, const NilHeckeElt& b) {
  if (a.n() != b.n()) throw InvalidArgument("rank mismatch");
  NilHeckeElt out(a.ring() ? a.ring() : b.ring(), a.n());
  for (const auto& [u, c] : a.terms()) out += c * left_mul_A(u, b);
  return out;
}

CoeffPoly NilHeckeElt::act(const CoeffPoly& s) const {
  CoeffPoly out(ring_);
  for (const auto& [w, c] : terms_) {
    CoeffPoly v = s;
    auto word = w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend() && !v.is_zero(); ++it)
      v = divided_difference(*it, n_, v);
    if (w.sigma()) v = AffineWeylElt::pi(n_).act_poly(v);
    out += c * v;
  }
  return out;
}

PSeries NilHeckeElt::act(const PSeries& f, const SeriesAction& action) const {
  PSeries out(action.ring(), action.order());
  for (const auto& [w, c] : terms_) out += action.A(w, f) * c;
  return out;
}

std::string NilHeckeElt::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.to_string() << ")*A[" << w.to_string() << "]";
    first = false;
  }
  return os.str();
}

}  // namespace affsp
