#include "affsp/weyl.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace affsp {

SignedPerm SignedPerm::identity(int n) {
  SignedPerm u;
  for (int i = 0; i < n; ++i) {
    u.perm.push_back(i);
    u.sign.push_back(1);
  }
  return u;
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
  SignedPerm r;
  int k = n();
  r.perm.resize(k);
  r.sign.resize(k);
  for (int i = 0; i < k; ++i) {
    r.perm[i] = perm[o.perm[i]];
    r.sign[i] = o.sign[i] * sign[o.perm[i]];
  }
  return r;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r;
  int k = n();
  r.perm.resize(k);
  r.sign.resize(k);
  for (int i = 0; i < k; ++i) {
    r.perm[perm[i]] = i;
    r.sign[perm[i]] = sign[i];
  }
  return r;
}

std::vector<int> SignedPerm::act(const std::vector<int>& v) const {
  std::vector<int> r(v.size(), 0);
  for (int i = 0; i < n(); ++i) r[perm[i]] += sign[i] * v[i];
  return r;
}

bool is_positive_classical(const std::vector<int>& alpha) {
  // positive roots have their first nonzero coefficient positive
  for (int x : alpha) {
    if (x > 0) return true;
    if (x < 0) return false;
  }
  return false;
}

bool is_positive(const AffineRoot& r) {
  return r.k > 0 || (r.k == 0 && is_positive_classical(r.alpha));
}

std::vector<std::vector<int>> positive_roots(int n) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> a(n, 0), b(n, 0);
      a[i] = 1;
      a[j] = -1;
      b[i] = 1;
      b[j] = 1;
      out.push_back(a);
      out.push_back(b);
    }
  for (int i = 0; i < n; ++i) {
    std::vector<int> a(n, 0);
    a[i] = 2;
    out.push_back(a);
  }
  return out;
}

AffineRoot simple_root(int i, int n) {
  AffineRoot r;
  r.alpha.assign(n, 0);
  if (i == 0) {
    r.alpha[0] = -2;
    r.k = 1;
  } else if (i < n) {
    r.alpha[i - 1] = 1;
    r.alpha[i] = -1;
  } else if (i == n) {
    r.alpha[n - 1] = 2;
  } else {
    throw InvalidArgument("simple root index out of range");
  }
  return r;
}

CoeffPoly simple_root_poly(int i, const Ring& ring) {
  int n = 0;
  while (n < int(ring->size()) && ring->name(n) == "a" + std::to_string(n + 1)) ++n;
  AffineRoot r = simple_root(i, n);
  CoeffPoly p(ring);
  for (int j = 0; j < n; ++j)
    if (r.alpha[j]) p += CoeffPoly::var(ring, j) * Rational(r.alpha[j]);
  return p;
}

AffineWeylElt AffineWeylElt::identity(int n) {
  AffineWeylElt w;
  w.u_ = SignedPerm::identity(n);
  w.t2_.assign(n, 0);
  return w;
}

AffineWeylElt AffineWeylElt::simple(int i, int n) {
  if (i < 0 || i > n) throw InvalidArgument("simple reflection index out of range");
  AffineWeylElt w = identity(n);
  if (i == 0) {
    // s_0 = t_{e_1} s_theta
    w.u_.sign[0] = -1;
    w.t2_[0] = 2;
  } else if (i < n) {
    std::swap(w.u_.perm[i - 1], w.u_.perm[i]);
  } else {
    w.u_.sign[n - 1] = -1;
  }
  return w;
}

AffineWeylElt AffineWeylElt::from_word(const std::vector<int>& word, int n) {
  AffineWeylElt w = identity(n);
  for (int i : word) w = w * simple(i, n);
  return w;
}

AffineWeylElt AffineWeylElt::translation(const std::vector<int>& lambda) {
  AffineWeylElt w = identity(int(lambda.size()));
  for (size_t i = 0; i < lambda.size(); ++i) w.t2_[i] = 2 * lambda[i];
  return w;
}

AffineWeylElt AffineWeylElt::translation_doubled(const std::vector<int>& twice) {
  bool odd = !twice.empty() && (twice[0] & 1);
  for (int x : twice)
    if (bool(x & 1) != odd)
      throw InvalidArgument("translation must be integral or in the class of omega_n");
  AffineWeylElt w = identity(int(twice.size()));
  w.t2_ = twice;
  return w;
}

AffineWeylElt AffineWeylElt::classical(const SignedPerm& u) {
  AffineWeylElt w = identity(u.n());
  w.u_ = u;
  return w;
}

SignedPerm u_n(int n) {
  SignedPerm u = SignedPerm::identity(n);
  for (int i = 0; i < n; ++i) {
    u.perm[i] = n - 1 - i;
    u.sign[i] = -1;
  }
  return u;
}

AffineWeylElt AffineWeylElt::pi(int n) {
  AffineWeylElt w;
  w.u_ = u_n(n);
  w.t2_.assign(n, 1);
  return w;
}

AffineWeylElt AffineWeylElt::from_parts(const SignedPerm& u, const std::vector<int>& lambda,
                                        bool sigma) {
  AffineWeylElt w = translation(lambda) * classical(u);
  return sigma ? pi(u.n()) * w : w;
}

bool AffineWeylElt::sigma() const { return !t2_.empty() && (t2_[0] & 1); }

SignedPerm AffineWeylElt::part_u() const {
  return sigma() ? (pi(n()) * *this).u_ : u_;
}

std::vector<int> AffineWeylElt::part_trans() const {
  std::vector<int> t = sigma() ? (pi(n()) * *this).t2_ : t2_;
  for (auto& x : t) x /= 2;
  return t;
}

bool AffineWeylElt::is_translation() const { return u_ == SignedPerm::identity(n()); }

AffineWeylElt AffineWeylElt::operator*(const AffineWeylElt& o) const {
  if (n() != o.n()) throw InvalidArgument("rank mismatch");
  AffineWeylElt r;
  r.u_ = u_ * o.u_;
  r.t2_ = u_.act(o.t2_);
  for (int i = 0; i < n(); ++i) r.t2_[i] += t2_[i];
  return r;
}

AffineWeylElt AffineWeylElt::inverse() const {
  AffineWeylElt r;
  r.u_ = u_.inverse();
  r.t2_ = r.u_.act(t2_);
  for (auto& x : r.t2_) x = -x;
  return r;
}

AffineRoot AffineWeylElt::act(const AffineRoot& r) const {
  AffineRoot out;
  out.alpha = u_.act(r.alpha);
  int pair2 = 0;
  for (int i = 0; i < n(); ++i) pair2 += t2_[i] * out.alpha[i];
  if (pair2 & 1) throw InvalidArgument("non-integral pairing");
  out.k = r.k - pair2 / 2;
  return out;
}

CoeffPoly AffineWeylElt::act_poly(const CoeffPoly& f) const {
  if (f.is_zero()) return f;
  return signed_rename(f, u_.perm, u_.sign);
}

int AffineWeylElt::length() const {
  int len = 0;
  auto roots = positive_roots(n());
  for (int sgn : {1, -1}) {
    for (auto alpha : roots) {
      for (auto& x : alpha) x *= sgn;
      int kmin = sgn > 0 ? 0 : 1;
      AffineRoot img = act(AffineRoot{alpha, 0});
      int m = -img.k;  // image is U alpha + (k - m) delta
      bool neg = !is_positive_classical(img.alpha);
      len += std::max(0, m - kmin) + ((m >= kmin && neg) ? 1 : 0);
    }
  }
  return len;
}

bool AffineWeylElt::has_right_descent(int i) const {
  return !is_positive(act(simple_root(i, n())));
}

bool AffineWeylElt::has_left_descent(int i) const {
  return !is_positive(inverse().act(simple_root(i, n())));
}

bool AffineWeylElt::is_grassmannian() const {
  for (int i = 1; i <= n(); ++i)
    if (has_right_descent(i)) return false;
  return true;
}

std::vector<int> AffineWeylElt::reduced_word() const {
  std::vector<int> word;
  AffineWeylElt w = *this;
  for (;;) {
    int d = -1;
    for (int i = 0; i <= n(); ++i)
      if (w.has_right_descent(i)) {
        d = i;
        break;
      }
    if (d < 0) break;
    word.push_back(d);
    w = w * simple(d, n());
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::string AffineWeylElt::to_string() const {
  auto word = reduced_word();
  std::ostringstream os;
  bool first = true;
  if (sigma()) {
    os << "pi";
    first = false;
  }
  for (int i : word) {
    if (!first) os << " ";
    os << "s" << i;
    first = false;
  }
  if (first) os << "id";
  return os.str();
}

nlohmann::json AffineWeylElt::to_json() const {
  SignedPerm u = part_u();
  std::vector<int> perm1;
  for (int p : u.perm) perm1.push_back(p + 1);
  return {{"signs", u.sign}, {"perm", perm1}, {"trans", part_trans()}, {"sigma", sigma()}};
}

AffineWeylElt AffineWeylElt::from_json(const nlohmann::json& j) {
  SignedPerm u;
  u.sign = j.at("signs").get<std::vector<int>>();
  for (int p : j.at("perm").get<std::vector<int>>()) u.perm.push_back(p - 1);
  return from_parts(u, j.at("trans").get<std::vector<int>>(), j.at("sigma").get<bool>());
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> word;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "id") continue;
    if (tok.size() < 2 || tok[0] != 's') throw ParseError("bad letter '" + tok + "'");
    word.push_back(std::stoi(tok.substr(1)));
  }
  return word;
}

namespace {

bool bruhat_le_waf(const AffineWeylElt& v, const AffineWeylElt& w, int lv, int lw) {
  if (lv > lw) return false;
  if (lw == 0) return v == w;
  if (lv == 0) return true;
  int n = w.n();
  int d = 0;
  while (!w.has_right_descent(d)) ++d;
  AffineWeylElt s = AffineWeylElt::simple(d, n);
  if (v.has_right_descent(d)) return bruhat_le_waf(v * s, w * s, lv - 1, lw - 1);
  return bruhat_le_waf(v, w * s, lv, lw - 1);
}

}  // namespace

bool bruhat_le(const AffineWeylElt& v, const AffineWeylElt& w) {
  if (v.sigma() != w.sigma()) return false;
  AffineWeylElt pv = v, pw = w;
  if (v.sigma()) {
    pv = AffineWeylElt::pi(v.n()) * v;
    pw = AffineWeylElt::pi(w.n()) * w;
  }
  return bruhat_le_waf(pv, pw, pv.length(), pw.length());
}

std::vector<std::vector<int>> all_reduced_words(const AffineWeylElt& w) {
  std::map<AffineWeylElt, std::vector<std::vector<int>>> memo;
  std::function<const std::vector<std::vector<int>>&(const AffineWeylElt&)> rec =
      [&](const AffineWeylElt& x) -> const std::vector<std::vector<int>>& {
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<int>> out;
    bool any = false;
    for (int i = 0; i <= x.n(); ++i) {
      if (!x.has_right_descent(i)) continue;
      any = true;
      for (auto word : rec(x * AffineWeylElt::simple(i, x.n()))) {
        word.push_back(i);
        out.push_back(std::move(word));
      }
    }
    if (!any) out.push_back({});
    return memo[x] = std::move(out);
  };
  return rec(w);
}

std::vector<AffineWeylElt> enumerate_grassmannian(int n, int maxLen) {
  std::vector<AffineWeylElt> out;
  std::set<AffineWeylElt> level = {AffineWeylElt::identity(n)};
  for (int len = 0; len <= maxLen && !level.empty(); ++len) {
    out.insert(out.end(), level.begin(), level.end());
    std::set<AffineWeylElt> next;
    for (const auto& w : level)
      for (int i = 0; i <= n; ++i) {
        AffineWeylElt x = AffineWeylElt::simple(i, n) * w;
        if (x.length() == len + 1 && x.is_grassmannian()) next.insert(x);
      }
    level = std::move(next);
  }
  return out;
}

std::vector<AffineWeylElt> enumerate_affine(int n, int maxLen) {
  std::vector<AffineWeylElt> out;
  std::set<AffineWeylElt> level = {AffineWeylElt::identity(n)};
  for (int len = 0; len <= maxLen && !level.empty(); ++len) {
    out.insert(out.end(), level.begin(), level.end());
    std::set<AffineWeylElt> next;
    for (const auto& w : level)
      for (int i = 0; i <= n; ++i)
        if (!w.has_right_descent(i)) next.insert(w * AffineWeylElt::simple(i, n));
    level = std::move(next);
  }
  return out;
}

std::vector<AffineWeylElt> enumerate_finite(int n) {
  std::set<AffineWeylElt> seen = {AffineWeylElt::identity(n)};
  std::vector<AffineWeylElt> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<AffineWeylElt> next;
    for (const auto& w : frontier)
      for (int i = 1; i <= n; ++i) {
        AffineWeylElt x = w * AffineWeylElt::simple(i, n);
        if (seen.insert(x).second) next.push_back(x);
      }
    frontier = std::move(next);
  }
  std::vector<AffineWeylElt> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const AffineWeylElt& a, const AffineWeylElt& b) {
    return a.length() < b.length();
  });
  return out;
}

AffineWeylElt rho(int i, int n) {
  if (i < 1 || i > 2 * n) throw InvalidArgument("rho index out of range");
  std::vector<int> word;
  if (i <= n) {
    for (int j = i - 1; j >= 0; --j) word.push_back(j);
  } else {
    for (int j = 2 * n + 1 - i; j <= n; ++j) word.push_back(j);
    for (int j = n - 1; j >= 0; --j) word.push_back(j);
  }
  return AffineWeylElt::from_word(word, n);
}

AffineWeylElt kappa(int i, int n) {
  if (i < 1 || i > n) throw InvalidArgument("kappa index out of range");
  if (i < n) {
    std::vector<int> lam(n, 0);
    for (int j = 0; j < i; ++j) lam[j] = -1;
    return AffineWeylElt::translation(lam);
  }
  return AffineWeylElt::pi(n) * AffineWeylElt::translation_doubled(std::vector<int>(n, -1));
}

AffineWeylElt t_eps(int i, int n, int sign) {
  std::vector<int> lam(n, 0);
  lam[i - 1] = sign;
  return AffineWeylElt::translation(lam);
}

AffineWeylElt conj_pi(const AffineWeylElt& v) {
  AffineWeylElt p = AffineWeylElt::pi(v.n());
  return p * v * p;
}

}  // namespace affsp
