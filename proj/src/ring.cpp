#include "affsp/ring.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <functional>
#include <sstream>

namespace affsp {

std::string rational_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars) throw InvalidArgument("too many variables");
  for (size_t i = 0; i < names_.size(); ++i) {
    if (!lookup_.emplace(names_[i], i).second)
      throw InvalidArgument("duplicate variable " + names_[i]);
  }
}

std::optional<size_t> VarSet::index(const std::string& name) const {
  auto it = lookup_.find(name);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

size_t VarSet::require(const std::string& name) const {
  auto i = index(name);
  if (!i) throw VariableSetMismatch("no variable named " + name);
  return *i;
}

Ring make_ring(std::vector<std::string> names) {
  return std::make_shared<const VarSet>(std::move(names));
}

Ring a_ring(int n, const std::vector<std::string>& extra) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  for (const auto& e : extra) names.push_back(e);
  return make_ring(std::move(names));
}

bool same_ring(const Ring& a, const Ring& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->names() == b->names();
}

int Monomial::degree() const {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(e[i]) + o.e[i];
    if (s > 255) throw InvalidArgument("exponent overflow");
    m.e[i] = uint8_t(s);
  }
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  for (size_t i = 0; i < kMaxVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m;
  for (size_t i = 0; i < kMaxVars; ++i) m.e[i] = uint8_t(e[i] - o.e[i]);
  return m;
}

size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  uint64_t h = 1469598103934665603ull;
  for (auto x : m.e) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return size_t(h);
}

std::vector<Monomial> monomials_of_degree(size_t nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial m;
  std::function<void(size_t, int)> rec = [&](size_t v, int left) {
    if (v + 1 == nvars || nvars == 0) {
      if (nvars == 0 && left) return;
      if (nvars) m.e[v] = uint8_t(left);
      out.push_back(m);
      if (nvars) m.e[v] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      m.e[v] = uint8_t(k);
      rec(v + 1, left - k);
    }
    m.e[v] = 0;
  };
  rec(0, d);
  return out;
}

bool grevlex_less(const Monomial& a, const Monomial& b, size_t nvars) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (size_t i = nvars; i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  }
  return false;
}

CoeffPoly::CoeffPoly(Ring ring) : ring_(std::move(ring)) {}

CoeffPoly::CoeffPoly(Ring ring, const Rational& c) : ring_(std::move(ring)) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

CoeffPoly CoeffPoly::var(const Ring& ring, size_t index) {
  if (index >= ring->size()) throw InvalidArgument("variable index out of range");
  Monomial m;
  m.e[index] = 1;
  return monomial(ring, m, 1);
}

CoeffPoly CoeffPoly::var(const Ring& ring, const std::string& name) {
  return var(ring, ring->require(name));
}

CoeffPoly CoeffPoly::monomial(const Ring& ring, const Monomial& m, const Rational& c) {
  CoeffPoly p(ring);
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

CoeffPoly CoeffPoly::from_sorted(Ring ring, std::vector<Term> terms) {
  CoeffPoly p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

CoeffPoly CoeffPoly::from_terms(Ring ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  return from_sorted(std::move(ring), std::move(out));
}

void CoeffPoly::check_ring(const CoeffPoly& o) const {
  if (!same_ring(ring_, o.ring_)) {
    if (!ring_ || !o.ring_) throw VariableSetMismatch("uninitialised polynomial");
    throw VariableSetMismatch("polynomials over different variable sets");
  }
}

bool CoeffPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial{});
}

Rational CoeffPoly::constant_term() const {
  if (!terms_.empty() && terms_[0].first == Monomial{}) return terms_[0].second;
  return 0;
}

int CoeffPoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.first.degree());
  return d;
}

int CoeffPoly::degree_in(size_t var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, int(t.first.e[var]));
  return d;
}

bool CoeffPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_[0].first.degree();
  for (const auto& t : terms_)
    if (t.first.degree() != d) return false;
  return true;
}

Rational CoeffPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.first < x; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

const Term& CoeffPoly::lex_leading() const {
  if (terms_.empty()) throw InvalidArgument("leading term of zero polynomial");
  return terms_.back();
}

CoeffPoly CoeffPoly::operator-() const {
  CoeffPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j]);
      if (subtract) out.back().second = -out.back().second;
      ++j;
    } else {
      Rational c = a[i].second;
      if (subtract) c -= b[j].second; else c += b[j].second;
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) {
  if (o.terms_.empty()) {
    if (!ring_) ring_ = o.ring_;
    return *this;
  }
  if (!ring_) ring_ = o.ring_;
  check_ring(o);
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o) {
  if (!ring_) ring_ = o.ring_;
  if (o.terms_.empty()) return *this;
  check_ring(o);
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
  a.check_ring(b);
  if (a.terms_.empty() || b.terms_.empty()) return CoeffPoly(a.ring_);
  if (a.terms_.size() == 1 && a.terms_[0].first == Monomial{}) return b * a.terms_[0].second;
  if (b.terms_.size() == 1 && b.terms_[0].first == Monomial{}) return a * b.terms_[0].second;
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.emplace_back(x.first * y.first, x.second * y.second);
  return CoeffPoly::from_terms(a.ring_, std::move(prod));
}

CoeffPoly& CoeffPoly::operator*=(const CoeffPoly& o) { return *this = *this * o; }

CoeffPoly& CoeffPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

bool CoeffPoly::operator==(const CoeffPoly& o) const {
  if (terms_.empty() && o.terms_.empty()) return true;
  check_ring(o);
  return terms_ == o.terms_;
}

CoeffPoly CoeffPoly::pow(int k) const {
  if (k < 0) throw InvalidArgument("negative power");
  CoeffPoly result(ring_, 1), base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

CoeffPoly CoeffPoly::homogeneous_part(int d) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.first.degree() == d) out.push_back(t);
  return from_sorted(ring_, std::move(out));
}

CoeffPoly CoeffPoly::embed(const Ring& target) const {
  if (same_ring(ring_, target)) return from_sorted(target, terms_);
  std::vector<int> map(ring_ ? ring_->size() : 0);
  for (size_t i = 0; i < map.size(); ++i) {
    auto j = target->index(ring_->name(i));
    map[i] = j ? int(*j) : -1;
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (size_t i = 0; i < map.size(); ++i) {
      if (!t.first.e[i]) continue;
      if (map[i] < 0)
        throw VariableSetMismatch("variable " + ring_->name(i) + " missing in target");
      m.e[map[i]] = t.first.e[i];
    }
    out.emplace_back(m, t.second);
  }
  return from_terms(target, std::move(out));
}

std::string CoeffPoly::to_string() const {
  if (terms_.empty()) return "0";
  size_t nv = ring_->size();
  std::vector<const Term*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [nv](const Term* x, const Term* y) {
    return grevlex_less(y->first, x->first, nv);
  });
  std::ostringstream os;
  bool first = true;
  for (const Term* t : order) {
    Rational c = t->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (size_t i = 0; i < nv; ++i) {
      int e = t->first.e[i];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      os << rational_string(c);
    } else if (c == 1) {
      os << mono;
    } else {
      os << rational_string(c) << "*" << mono;
    }
  }
  return os.str();
}

nlohmann::json CoeffPoly::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  size_t nv = ring_ ? ring_->size() : 0;
  for (const auto& t : terms_) {
    std::string key = "[";
    for (size_t i = 0; i < nv; ++i) {
      if (i) key += ",";
      key += std::to_string(int(t.first.e[i]));
    }
    key += "]";
    j[key] = rational_string(t.second);
  }
  return j;
}

CoeffPoly CoeffPoly::from_json(const Ring& ring, const nlohmann::json& j) {
  std::vector<Term> terms;
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto ev = nlohmann::json::parse(it.key());
    if (ev.size() != ring->size()) throw ParseError("exponent vector length mismatch");
    Monomial m;
    for (size_t i = 0; i < ev.size(); ++i) m.e[i] = uint8_t(ev[i].get<int>());
    terms.emplace_back(m, parse_rational(it.value().get<std::string>()));
  }
  return from_terms(ring, std::move(terms));
}

std::optional<CoeffPoly> try_divide(const CoeffPoly& f, const CoeffPoly& g) {
  if (g.is_zero()) throw InvalidArgument("division by zero polynomial");
  if (!same_ring(f.ring(), g.ring()) && !f.is_zero())
    throw VariableSetMismatch("division across variable sets");
  if (g.is_constant()) return f * Rational(1 / g.constant_term());
  const Term& lg = g.lex_leading();
  std::vector<Term> q;
  CoeffPoly r = f;
  while (!r.is_zero()) {
    const Term& lr = r.lex_leading();
    if (!lg.first.divides(lr.first)) return std::nullopt;
    Term t(lr.first / lg.first, lr.second / lg.second);
    q.push_back(t);
    r -= CoeffPoly::monomial(g.ring(), t.first, t.second) * g;
  }
  std::reverse(q.begin(), q.end());
  return CoeffPoly::from_sorted(g.ring(), std::move(q));
}

CoeffPoly exact_divide(const CoeffPoly& f, const CoeffPoly& g) {
  auto q = try_divide(f, g);
  if (!q) throw DivisionInexact("(" + g.to_string() + ") does not divide (" + f.to_string() + ")");
  return *q;
}

CoeffPoly substitute(const CoeffPoly& f, const std::map<size_t, CoeffPoly>& values,
                     const Ring& target) {
  const Ring& src = f.ring();
  if (f.is_zero()) return CoeffPoly(target);
  size_t nv = src->size();
  std::vector<int> rename(nv, -1);
  for (size_t i = 0; i < nv; ++i) {
    if (values.count(i)) continue;
    auto j = target->index(src->name(i));
    rename[i] = j ? int(*j) : -1;
  }
  std::vector<std::vector<CoeffPoly>> powers(nv);
  auto power = [&](size_t v, int k) -> const CoeffPoly& {
    auto& p = powers[v];
    if (p.empty()) p.emplace_back(target, 1);
    while (int(p.size()) <= k) p.push_back(p.back() * values.at(v).embed(target));
    return p[k];
  };
  std::vector<Term> acc;
  for (const auto& t : f.terms()) {
    Monomial base;
    CoeffPoly prod(target, t.second);
    for (size_t i = 0; i < nv; ++i) {
      int e = t.first.e[i];
      if (!e) continue;
      if (values.count(i)) {
        prod = prod * power(i, e);
      } else {
        if (rename[i] < 0)
          throw VariableSetMismatch("variable " + src->name(i) + " missing in target");
        base.e[rename[i]] = uint8_t(e);
      }
    }
    for (const auto& pt : prod.terms()) acc.emplace_back(pt.first * base, pt.second);
  }
  return CoeffPoly::from_terms(target, std::move(acc));
}

CoeffPoly substitute(const CoeffPoly& f, const std::map<size_t, CoeffPoly>& values) {
  return substitute(f, values, f.ring());
}

CoeffPoly substitute_named(const CoeffPoly& f,
                           const std::map<std::string, CoeffPoly>& values) {
  std::map<size_t, CoeffPoly> byindex;
  for (const auto& [k, v] : values) byindex.emplace(f.ring()->require(k), v);
  return substitute(f, byindex);
}

CoeffPoly signed_rename(const CoeffPoly& f, const std::vector<int>& target,
                        const std::vector<int>& sign) {
  std::vector<Term> out;
  out.reserve(f.size());
  size_t k = target.size();
  for (const auto& t : f.terms()) {
    Monomial m = t.first;
    int s = 1;
    for (size_t i = 0; i < k; ++i) m.e[i] = 0;
    for (size_t i = 0; i < k; ++i) {
      int e = t.first.e[i];
      if (!e) continue;
      m.e[target[i]] = uint8_t(e);
      if (sign[i] < 0 && (e & 1)) s = -s;
    }
    out.emplace_back(m, s > 0 ? t.second : Rational(-t.second));
  }
  return CoeffPoly::from_terms(f.ring(), std::move(out));
}

CoeffPoly complete_h(const Ring& ring, int k, const std::vector<CoeffPoly>& xs) {
  if (k < 0) return CoeffPoly(ring);
  // h[j] over the prefix processed so far
  std::vector<CoeffPoly> h(k + 1, CoeffPoly(ring));
  h[0] = CoeffPoly(ring, 1);
  for (const auto& x : xs) {
    for (int j = 1; j <= k; ++j) h[j] += x * h[j - 1];
  }
  return h[k];
}

CoeffPoly elementary_e(const Ring& ring, int k, const std::vector<CoeffPoly>& xs) {
  if (k < 0 || k > int(xs.size())) return CoeffPoly(ring);
  std::vector<CoeffPoly> e(k + 1, CoeffPoly(ring));
  e[0] = CoeffPoly(ring, 1);
  for (const auto& x : xs) {
    for (int j = k; j >= 1; --j) e[j] += x * e[j - 1];
  }
  return e[k];
}

CoeffPoly super_h(const Ring& ring, int k, const std::vector<CoeffPoly>& xs,
                  const std::vector<CoeffPoly>& zs) {
  CoeffPoly s(ring);
  for (int j = 0; j <= k; ++j) {
    CoeffPoly e = elementary_e(ring, j, zs);
    if (e.is_zero()) continue;
    CoeffPoly term = complete_h(ring, k - j, xs) * e;
    if (j & 1) s -= term; else s += term;
  }
  return s;
}

CoeffPoly pleth_e(const Ring& ring, int r, const std::vector<CoeffPoly>& A,
                  const std::vector<CoeffPoly>& B) {
  CoeffPoly s(ring);
  for (int i = 0; i <= r; ++i) {
    CoeffPoly e = elementary_e(ring, i, A);
    if (e.is_zero()) continue;
    CoeffPoly term = e * complete_h(ring, r - i, B);
    if ((r - i) & 1) s -= term; else s += term;
  }
  return s;
}

CoeffPoly factorial_power(const CoeffPoly& b, int k, const std::vector<CoeffPoly>& a) {
  if (k == 0) return CoeffPoly(b.ring(), 1);
  if (int(a.size()) < k - 1) throw InvalidArgument("factorial_power: a-list too short");
  CoeffPoly p = b * Rational(2);
  for (int j = 0; j < k - 1; ++j) p *= (b - a[j]);
  return p;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(const Ring& ring, const std::string& s) : ring_(ring), s_(s) {}

  CoeffPoly parse() {
    CoeffPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  CoeffPoly expr() {
    CoeffPoly p = term();
    for (;;) {
      if (eat('+')) p += term();
      else if (eat('-')) p -= term();
      else return p;
    }
  }
  CoeffPoly term() {
    CoeffPoly p = factor();
    for (;;) {
      if (eat('*')) {
        p = p * factor();
      } else if (eat('/')) {
        CoeffPoly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by non-constant");
        p *= Rational(1 / d.constant_term());
      } else {
        return p;
      }
    }
  }
  CoeffPoly factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    CoeffPoly b = base();
    if (eat('^')) {
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      b = b.pow(std::stoi(s_.substr(start, pos_ - start)));
    }
    return b;
  }
  CoeffPoly base() {
    skip();
    if (eat('(')) {
      CoeffPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return CoeffPoly(ring_, parse_rational(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto idx = ring_->index(name);
      if (!idx) fail("unknown variable " + name);
      return CoeffPoly::var(ring_, *idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const Ring& ring_;
  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

CoeffPoly parse_poly(const Ring& ring, const std::string& text) {
  return Parser(ring, text).parse();
}

// ---------------------------------------------------------------------------
// gcd via primitive remainder sequences in a recursive representation.

namespace {

std::vector<CoeffPoly> coeffs_in(const CoeffPoly& f, size_t v) {
  int d = std::max(f.degree_in(v), 0);
  std::vector<std::vector<Term>> parts(d + 1);
  for (const auto& t : f.terms()) {
    Monomial m = t.first;
    int e = m.e[v];
    m.e[v] = 0;
    parts[e].emplace_back(m, t.second);
  }
  std::vector<CoeffPoly> out;
  for (auto& p : parts) out.push_back(CoeffPoly::from_terms(f.ring(), std::move(p)));
  return out;
}

CoeffPoly var_power(const Ring& ring, size_t v, int k) {
  Monomial m;
  m.e[v] = uint8_t(k);
  return CoeffPoly::monomial(ring, m, 1);
}

CoeffPoly monic(const CoeffPoly& f) {
  if (f.is_zero()) return f;
  return f * Rational(1 / f.lex_leading().second);
}

CoeffPoly content_in(const CoeffPoly& f, size_t v) {
  CoeffPoly g(f.ring());
  for (const auto& c : coeffs_in(f, v)) {
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

CoeffPoly pseudo_rem(CoeffPoly a, const CoeffPoly& b, size_t v) {
  int db = b.degree_in(v);
  auto bc = coeffs_in(b, v);
  const CoeffPoly& lcb = bc[db];
  while (!a.is_zero() && a.degree_in(v) >= db) {
    int da = a.degree_in(v);
    CoeffPoly lca = coeffs_in(a, v)[da];
    a = lcb * a - lca * var_power(a.ring(), v, da - db) * b;
  }
  return a;
}

}  // namespace

CoeffPoly poly_gcd(const CoeffPoly& f, const CoeffPoly& g) {
  if (f.is_zero()) return monic(g);
  if (g.is_zero()) return monic(f);
  if (!same_ring(f.ring(), g.ring())) throw VariableSetMismatch("gcd across variable sets");
  const Ring& ring = f.ring();
  if (f.is_constant() || g.is_constant()) return CoeffPoly(ring, 1);
  size_t nv = ring->size();
  size_t v = nv;
  for (size_t i = nv; i-- > 0;) {
    if (f.degree_in(i) > 0 || g.degree_in(i) > 0) {
      v = i;
      break;
    }
  }
  if (f.degree_in(v) <= 0) return poly_gcd(f, content_in(g, v));
  if (g.degree_in(v) <= 0) return poly_gcd(content_in(f, v), g);
  CoeffPoly cf = content_in(f, v), cg = content_in(g, v);
  CoeffPoly c = poly_gcd(cf, cg);
  CoeffPoly a = exact_divide(f, cf), b = exact_divide(g, cg);
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  while (!b.is_zero() && b.degree_in(v) > 0) {
    CoeffPoly r = pseudo_rem(a, b, v);
    a = b;
    if (r.is_zero()) {
      b = r;
    } else {
      b = exact_divide(r, content_in(r, v));
    }
  }
  CoeffPoly h = b.is_zero() ? a : CoeffPoly(ring, 1);
  if (!h.is_constant()) h = exact_divide(h, content_in(h, v));
  return monic(c * h);
}

// ---------------------------------------------------------------------------

RationalFunction::RationalFunction(const CoeffPoly& num)
    : num_(num), den_(num.ring(), 1) {}

RationalFunction::RationalFunction(const CoeffPoly& num, const CoeffPoly& den)
    : num_(num), den_(den) {
  if (den_.is_zero()) throw InvalidArgument("zero denominator");
  normalize();
}

RationalFunction::RationalFunction(Ring ring, const Rational& c)
    : num_(ring, c), den_(ring, 1) {}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = CoeffPoly(den_.ring(), 1);
    return;
  }
  if (!den_.is_constant()) {
    CoeffPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
  }
  Rational lc = den_.lex_leading().second;
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw InvalidArgument("division by zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace affsp
