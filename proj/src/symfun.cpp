#include "affsp/symfun.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace affsp {

std::vector<OddPartition> odd_partitions(int size) {
  std::vector<OddPartition> out;
  OddPartition cur;
  std::function<void(int, int)> rec = [&](int remaining, int maxPart) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(remaining, maxPart); p >= 1; --p) {
      if (!(p & 1)) continue;
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(size, size);
  return out;
}

int weight(const OddPartition& rho) {
  int w = 0;
  for (int p : rho) w += p;
  return w;
}

Rational z_factor(const OddPartition& rho) {
  Rational z = 1;
  std::map<int, int> mult;
  for (int p : rho) mult[p]++;
  for (auto [p, m] : mult) {
    for (int i = 0; i < m; ++i) z *= p;
    for (int i = 2; i <= m; ++i) z *= i;
  }
  return z;
}

Rational powersum_norm(const OddPartition& rho) {
  Rational r = z_factor(rho);
  for (size_t i = 0; i < rho.size(); ++i) r /= 2;
  return r;
}

namespace {

OddPartition merge_odd(const OddPartition& a, const OddPartition& b) {
  OddPartition r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] >= b[j])) r.push_back(a[i++]);
    else r.push_back(b[j++]);
  }
  return r;
}

RatPowerSum rat_mul(const RatPowerSum& a, const RatPowerSum& b) {
  RatPowerSum r;
  for (const auto& [x, c] : a)
    for (const auto& [y, d] : b) {
      auto& slot = r[merge_odd(x, y)];
      slot += c * d;
    }
  for (auto it = r.begin(); it != r.end();) {
    if (it->second == 0) it = r.erase(it); else ++it;
  }
  return r;
}

void rat_add(RatPowerSum& a, const RatPowerSum& b, const Rational& scale) {
  for (const auto& [x, c] : b) {
    auto& slot = a[x];
    slot += scale * c;
  }
  for (auto it = a.begin(); it != a.end();) {
    if (it->second == 0) it = a.erase(it); else ++it;
  }
}

class QTables {
 public:
  const RatPowerSum& get(const StrictPartition& lambda) {
    std::lock_guard<std::mutex> lock(mu_);
    ensure(lambda.size());
    return table_.at(lambda);
  }

 private:
  const RatPowerSum& single(int k) {
    auto it = single_.find(k);
    if (it != single_.end()) return it->second;
    RatPowerSum q;
    if (k == 0) {
      q[{}] = 1;
    } else {
      for (const auto& rho : odd_partitions(k)) {
        Rational c = 1;
        for (size_t i = 0; i < rho.size(); ++i) c *= 2;
        q[rho] = c / z_factor(rho);
      }
    }
    return single_[k] = std::move(q);
  }

  // Q_{(r,s)} = Q_r Q_s + 2 sum_{i=1}^s (-1)^i Q_{r+i} Q_{s-i}
  const RatPowerSum& two_row(int r, int s) {
    auto key = std::make_pair(r, s);
    auto it = pair_.find(key);
    if (it != pair_.end()) return it->second;
    RatPowerSum q = rat_mul(single(r), single(s));
    for (int i = 1; i <= s; ++i)
      rat_add(q, rat_mul(single(r + i), single(s - i)), Rational(i & 1 ? -2 : 2));
    return pair_[key] = std::move(q);
  }

  RatPowerSum pfaffian(const std::vector<int>& idx) {
    if (idx.empty()) {
      RatPowerSum one;
      one[{}] = 1;
      return one;
    }
    RatPowerSum total;
    for (size_t j = 1; j < idx.size(); ++j) {
      std::vector<int> rest;
      for (size_t k = 1; k < idx.size(); ++k)
        if (k != j) rest.push_back(idx[k]);
      RatPowerSum term = rat_mul(two_row(idx[0], idx[j]), pfaffian(rest));
      rat_add(total, term, Rational(j & 1 ? 1 : -1));
    }
    return total;
  }

  void ensure(int degree) {
    while (built_ < degree) {
      int d = ++built_;
      auto parts = strict_partitions(d);
      for (const auto& lam : parts) {
        std::vector<int> idx = lam.parts;
        if (idx.size() & 1) idx.push_back(0);
        table_[lam] = idx.size() == 2 && idx[1] == 0 ? single(idx[0]) : pfaffian(idx);
      }
      // <P_lambda, Q_mu> = delta
      for (const auto& lam : parts)
        for (const auto& mu : parts) {
          Rational v = powersum_pairing(table_[lam], table_[mu]);
          for (int i = 0; i < lam.length(); ++i) v /= 2;
          if (v != (lam == mu ? 1 : 0))
            throw std::logic_error("Q-function table fails the pairing check at " +
                                   lam.to_string() + "," + mu.to_string());
        }
    }
  }

  std::mutex mu_;
  int built_ = 0;
  std::map<StrictPartition, RatPowerSum> table_ = {{StrictPartition(), {{{}, 1}}}};
  std::map<int, RatPowerSum> single_;
  std::map<std::pair<int, int>, RatPowerSum> pair_;
};

QTables& tables() {
  static QTables t;
  return t;
}

}  // namespace

const RatPowerSum& q_powersum(const StrictPartition& lambda) { return tables().get(lambda); }

Rational powersum_pairing(const RatPowerSum& f, const RatPowerSum& g) {
  Rational s = 0;
  for (const auto& [rho, c] : f) {
    auto it = g.find(rho);
    if (it != g.end()) s += c * it->second * powersum_norm(rho);
  }
  return s;
}

CoeffPoly evaluate_powersums(const RatPowerSum& f, const std::vector<CoeffPoly>& xs,
                             const Ring& ring) {
  std::map<int, CoeffPoly> p;
  auto pk = [&](int k) -> const CoeffPoly& {
    auto it = p.find(k);
    if (it != p.end()) return it->second;
    CoeffPoly s(ring);
    for (const auto& x : xs) s += x.pow(k);
    return p[k] = s;
  };
  CoeffPoly out(ring);
  for (const auto& [rho, c] : f) {
    CoeffPoly t(ring, c);
    for (int k : rho) t = t * pk(k);
    out += t;
  }
  return out;
}

// ---------------------------------------------------------------------------

PowerSumPoly PowerSumPoly::constant(const Ring& ring, int order, const CoeffPoly& c) {
  PowerSumPoly f(ring, order);
  f.add({}, c);
  return f;
}

PowerSumPoly PowerSumPoly::p(const Ring& ring, int order, int k) {
  if (!(k & 1)) throw InvalidArgument("only odd power sums");
  PowerSumPoly f(ring, order);
  if (k <= order) f.add({k}, CoeffPoly(ring, 1));
  return f;
}

void PowerSumPoly::add(const OddPartition& rho, const CoeffPoly& c) {
  if (c.is_zero() || weight(rho) > order_) return;
  auto it = terms_.find(rho);
  if (it == terms_.end()) {
    terms_.emplace(rho, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CoeffPoly PowerSumPoly::coeff(const OddPartition& rho) const {
  auto it = terms_.find(rho);
  return it == terms_.end() ? CoeffPoly(ring_) : it->second;
}

PowerSumPoly PowerSumPoly::homogeneous(int w) const {
  PowerSumPoly r(ring_, order_);
  for (const auto& [rho, c] : terms_)
    if (weight(rho) == w) r.terms_.emplace(rho, c);
  return r;
}

void PowerSumPoly::check(const PowerSumPoly& o) const {
  if (order_ != o.order_) throw TruncationMismatch("power-sum orders differ");
  if (!same_ring(ring_, o.ring_)) throw VariableSetMismatch("power-sum rings differ");
}

PowerSumPoly& PowerSumPoly::operator+=(const PowerSumPoly& o) {
  check(o);
  for (const auto& [rho, c] : o.terms_) add(rho, c);
  return *this;
}

PowerSumPoly& PowerSumPoly::operator-=(const PowerSumPoly& o) {
  check(o);
  for (const auto& [rho, c] : o.terms_) add(rho, -c);
  return *this;
}

PowerSumPoly PowerSumPoly::operator-() const {
  PowerSumPoly r = *this;
  for (auto& [rho, c] : r.terms_) c = -c;
  return r;
}

PowerSumPoly operator*(const PowerSumPoly& a, const PowerSumPoly& b) {
  a.check(b);
  PowerSumPoly r(a.ring_, a.order_);
  for (const auto& [x, c] : a.terms_) {
    int wx = weight(x);
    for (const auto& [y, d] : b.terms_) {
      if (wx + weight(y) > a.order_) continue;
      r.add(merge_odd(x, y), c * d);
    }
  }
  return r;
}

PowerSumPoly operator*(const PowerSumPoly& a, const CoeffPoly& c) {
  PowerSumPoly r(a.ring_, a.order_);
  if (c.is_zero()) return r;
  for (const auto& [x, d] : a.terms_) r.add(x, d * c);
  return r;
}

PowerSumPoly operator*(const PowerSumPoly& a, const Rational& c) {
  PowerSumPoly r(a.ring_, a.order_);
  if (c == 0) return r;
  for (const auto& [x, d] : a.terms_) r.terms_.emplace(x, d * c);
  return r;
}

bool PowerSumPoly::operator==(const PowerSumPoly& o) const {
  check(o);
  return terms_ == o.terms_;
}

// ---------------------------------------------------------------------------

PSeries PSeries::one(const Ring& ring, int order) {
  return constant(ring, order, CoeffPoly(ring, 1));
}

PSeries PSeries::constant(const Ring& ring, int order, const CoeffPoly& c) {
  PSeries f(ring, order);
  f.add(StrictPartition(), c);
  return f;
}

PSeries PSeries::basis(const Ring& ring, int order, const StrictPartition& lambda) {
  PSeries f(ring, order);
  f.add(lambda, CoeffPoly(ring, 1));
  return f;
}

CoeffPoly PSeries::coeff(const StrictPartition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? CoeffPoly(ring_) : it->second;
}

void PSeries::add(const StrictPartition& lambda, const CoeffPoly& c) {
  if (c.is_zero() || lambda.size() > order_) return;
  auto it = terms_.find(lambda);
  if (it == terms_.end()) {
    terms_.emplace(lambda, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PSeries PSeries::homogeneous(int d) const {
  PSeries r(ring_, order_);
  for (const auto& [lam, c] : terms_)
    if (lam.size() == d) r.terms_.emplace(lam, c);
  return r;
}

PSeries PSeries::truncate(int order) const {
  if (order > order_) throw TruncationMismatch("cannot raise truncation order");
  PSeries r(ring_, order);
  for (const auto& [lam, c] : terms_)
    if (lam.size() <= order) r.terms_.emplace(lam, c);
  return r;
}

int PSeries::min_degree() const {
  int d = -1;
  for (const auto& [lam, c] : terms_)
    if (d < 0 || lam.size() < d) d = lam.size();
  return d;
}

void PSeries::check(const PSeries& o) const {
  if (order_ != o.order_)
    throw TruncationMismatch("orders " + std::to_string(order_) + " and " +
                             std::to_string(o.order_));
  if (!same_ring(ring_, o.ring_)) throw VariableSetMismatch("series over different rings");
}

PSeries& PSeries::operator+=(const PSeries& o) {
  check(o);
  for (const auto& [lam, c] : o.terms_) add(lam, c);
  return *this;
}

PSeries& PSeries::operator-=(const PSeries& o) {
  check(o);
  for (const auto& [lam, c] : o.terms_) add(lam, -c);
  return *this;
}

PSeries PSeries::operator-() const {
  PSeries r = *this;
  for (auto& [lam, c] : r.terms_) c = -c;
  return r;
}

PSeries operator*(const PSeries& a, const PSeries& b) { return multiply(a, b); }

PSeries operator*(const PSeries& a, const CoeffPoly& c) {
  PSeries r(a.ring_, a.order_);
  if (c.is_zero()) return r;
  for (const auto& [lam, d] : a.terms_) r.add(lam, d * c);
  return r;
}

PSeries operator*(const PSeries& a, const Rational& c) {
  PSeries r(a.ring_, a.order_);
  if (c == 0) return r;
  for (const auto& [lam, d] : a.terms_) r.terms_.emplace(lam, d * c);
  return r;
}

bool PSeries::operator==(const PSeries& o) const {
  check(o);
  return terms_ == o.terms_;
}

std::string PSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lam, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*P" << lam.to_string();
  }
  return os.str();
}

nlohmann::json PSeries::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [lam, c] : terms_)
    terms.push_back({{"partition", lam.parts}, {"coeff", c.to_json()}});
  return {{"order", order_}, {"terms", terms}};
}

PSeries PSeries::from_json(const Ring& ring, const nlohmann::json& j) {
  PSeries f(ring, j.at("order").get<int>());
  for (const auto& t : j.at("terms"))
    f.add(StrictPartition(t.at("partition").get<std::vector<int>>()),
          CoeffPoly::from_json(ring, t.at("coeff")));
  return f;
}

PowerSumPoly to_powersum(const PSeries& f) {
  PowerSumPoly g(f.ring(), f.order());
  for (const auto& [lam, c] : f.terms()) {
    Rational scale = 1;
    for (int i = 0; i < lam.length(); ++i) scale /= 2;
    for (const auto& [rho, q] : q_powersum(lam)) g.add(rho, c * Rational(q * scale));
  }
  return g;
}

PSeries from_powersum(const PowerSumPoly& g) {
  PSeries f(g.ring(), g.order());
  std::map<int, std::vector<const std::pair<const OddPartition, CoeffPoly>*>> byweight;
  for (const auto& t : g.terms()) byweight[weight(t.first)].push_back(&t);
  for (const auto& [w, ts] : byweight) {
    for (const auto& lam : strict_partitions(w)) {
      const RatPowerSum& q = q_powersum(lam);
      CoeffPoly c(g.ring());
      for (const auto* t : ts) {
        auto it = q.find(t->first);
        if (it == q.end()) continue;
        c += t->second * Rational(it->second * powersum_norm(t->first));
      }
      f.add(lam, c);
    }
  }
  return f;
}

PSeries multiply(const PSeries& a, const PSeries& b) {
  if (a.order() != b.order()) throw TruncationMismatch("multiply: orders differ");
  if (!same_ring(a.ring(), b.ring())) throw VariableSetMismatch("multiply: rings differ");
  // cheap paths for constants
  if (a.terms().size() == 1 && a.terms().begin()->first.empty())
    return b * a.terms().begin()->second;
  if (b.terms().size() == 1 && b.terms().begin()->first.empty())
    return a * b.terms().begin()->second;
  return from_powersum(to_powersum(a) * to_powersum(b));
}

PSeries omega_series(const CoeffPoly& b, int order) {
  PSeries f = PSeries::one(b.ring(), order);
  CoeffPoly pw(b.ring(), 2);
  for (int k = 1; k <= order; ++k) {
    pw = pw * b;
    f.add(StrictPartition({k}), pw);
  }
  return f;
}

PSeries q_series(const Ring& ring, int order, const StrictPartition& lambda) {
  PSeries f(ring, order);
  Rational c = 1;
  for (int i = 0; i < lambda.length(); ++i) c *= 2;
  f.add(lambda, CoeffPoly(ring, c));
  return f;
}

namespace {

std::vector<PowerSumPoly> graded(const PowerSumPoly& g) {
  std::vector<PowerSumPoly> parts(g.order() + 1, PowerSumPoly(g.ring(), g.order()));
  for (const auto& [rho, c] : g.terms()) parts[weight(rho)].add(rho, c);
  return parts;
}

void require_unit_constant(const PSeries& f) {
  CoeffPoly c = f.coeff(StrictPartition());
  if (!(c == CoeffPoly(f.ring(), 1))) throw ConstantTermNotOne("constant term " + c.to_string());
}

}  // namespace

PSeries sqrt_series(const PSeries& f) {
  require_unit_constant(f);
  int N = f.order();
  auto fp = graded(to_powersum(f));
  std::vector<PowerSumPoly> g(N + 1, PowerSumPoly(f.ring(), N));
  g[0] = PowerSumPoly::constant(f.ring(), N, CoeffPoly(f.ring(), 1));
  for (int d = 1; d <= N; ++d) {
    PowerSumPoly s = fp[d];
    for (int i = 1; i < d; ++i) s -= g[i] * g[d - i];
    g[d] = s * Rational(1, 2);
  }
  PowerSumPoly total(f.ring(), N);
  for (auto& x : g) total += x;
  return from_powersum(total);
}

PSeries inverse_series(const PSeries& f) {
  require_unit_constant(f);
  int N = f.order();
  auto fp = graded(to_powersum(f));
  std::vector<PowerSumPoly> g(N + 1, PowerSumPoly(f.ring(), N));
  g[0] = PowerSumPoly::constant(f.ring(), N, CoeffPoly(f.ring(), 1));
  for (int d = 1; d <= N; ++d) {
    PowerSumPoly s(f.ring(), N);
    for (int i = 1; i <= d; ++i) s -= fp[i] * g[d - i];
    g[d] = s;
  }
  PowerSumPoly total(f.ring(), N);
  for (auto& x : g) total += x;
  return from_powersum(total);
}

PSeries coeff_map(const PSeries& f, const Ring& target,
                  const std::function<CoeffPoly(const CoeffPoly&)>& fn) {
  PSeries r(target, f.order());
  for (const auto& [lam, c] : f.terms()) r.add(lam, fn(c));
  return r;
}

PSeries coeff_substitute(const PSeries& f, const std::map<size_t, CoeffPoly>& values) {
  return coeff_map(f, f.ring(), [&](const CoeffPoly& c) { return substitute(c, values); });
}

PSeries embed(const PSeries& f, const Ring& target) {
  return coeff_map(f, target, [&](const CoeffPoly& c) { return c.embed(target); });
}

CoeffPoly pair_P_Q(const PSeries& f_in_P, const std::map<StrictPartition, CoeffPoly>& g_in_Q) {
  CoeffPoly s(f_in_P.ring());
  for (const auto& [lam, c] : f_in_P.terms()) {
    auto it = g_in_Q.find(lam);
    if (it != g_in_Q.end()) s += c * it->second;
  }
  return s;
}

}  // namespace affsp
