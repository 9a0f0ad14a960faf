#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "affsp/ring.hpp"
#include "affsp/shifted.hpp"

namespace affsp {

// Odd parts, weakly decreasing.  Indexes the power-sum monomials p_rho.
using OddPartition = std::vector<int>;
using RatPowerSum = std::map<OddPartition, Rational>;

std::vector<OddPartition> odd_partitions(int size);
int weight(const OddPartition& rho);
Rational z_factor(const OddPartition& rho);
// <p_rho, p_rho> for the form with <P_lambda, Q_mu> = delta
Rational powersum_norm(const OddPartition& rho);

// Schur Q_lambda in power sums, built from the two-row Pfaffian and
// checked against the pairing when the table is first extended.
const RatPowerSum& q_powersum(const StrictPartition& lambda);
// <f, g> for rational power-sum expansions.
Rational powersum_pairing(const RatPowerSum& f, const RatPowerSum& g);
// Substitute p_k = x_1^k + ... + x_m^k.
CoeffPoly evaluate_powersums(const RatPowerSum& f, const std::vector<CoeffPoly>& xs,
                             const Ring& ring);

// Polynomial in p_1, p_3, ... with coefficients in a ring, truncated at
// weight `order`.
class PowerSumPoly {
 public:
  PowerSumPoly() = default;
  PowerSumPoly(Ring ring, int order) : ring_(std::move(ring)), order_(order) {}
  static PowerSumPoly constant(const Ring& ring, int order, const CoeffPoly& c);
  static PowerSumPoly p(const Ring& ring, int order, int k);

  const Ring& ring() const { return ring_; }
  int order() const { return order_; }
  const std::map<OddPartition, CoeffPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const OddPartition& rho, const CoeffPoly& c);
  CoeffPoly coeff(const OddPartition& rho) const;
  PowerSumPoly homogeneous(int w) const;

  PowerSumPoly& operator+=(const PowerSumPoly& o);
  PowerSumPoly& operator-=(const PowerSumPoly& o);
  PowerSumPoly operator-() const;
  friend PowerSumPoly operator+(PowerSumPoly a, const PowerSumPoly& b) { return a += b; }
  friend PowerSumPoly operator-(PowerSumPoly a, const PowerSumPoly& b) { return a -= b; }
  friend PowerSumPoly operator*(const PowerSumPoly& a, const PowerSumPoly& b);
  friend PowerSumPoly operator*(const PowerSumPoly& a, const CoeffPoly& c);
  friend PowerSumPoly operator*(const PowerSumPoly& a, const Rational& c);
  bool operator==(const PowerSumPoly& o) const;

 private:
  void check(const PowerSumPoly& o) const;
  Ring ring_;
  int order_ = 0;
  std::map<OddPartition, CoeffPoly> terms_;
};

// Element of the completed ring spanned by the Schur P-functions, with
// coefficients in a polynomial ring and truncated above degree `order`.
class PSeries {
 public:
  PSeries() = default;
  PSeries(Ring ring, int order) : ring_(std::move(ring)), order_(order) {}
  static PSeries one(const Ring& ring, int order);
  static PSeries constant(const Ring& ring, int order, const CoeffPoly& c);
  static PSeries basis(const Ring& ring, int order, const StrictPartition& lambda);

  const Ring& ring() const { return ring_; }
  int order() const { return order_; }
  const std::map<StrictPartition, CoeffPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  CoeffPoly coeff(const StrictPartition& lambda) const;
  void add(const StrictPartition& lambda, const CoeffPoly& c);
  PSeries homogeneous(int d) const;
  PSeries truncate(int order) const;
  // smallest degree with a nonzero term, or -1
  int min_degree() const;

  PSeries& operator+=(const PSeries& o);
  PSeries& operator-=(const PSeries& o);
  PSeries operator-() const;
  friend PSeries operator+(PSeries a, const PSeries& b) { return a += b; }
  friend PSeries operator-(PSeries a, const PSeries& b) { return a -= b; }
  friend PSeries operator*(const PSeries& a, const PSeries& b);
  friend PSeries operator*(const PSeries& a, const CoeffPoly& c);
  friend PSeries operator*(const CoeffPoly& c, const PSeries& a) { return a * c; }
  friend PSeries operator*(const PSeries& a, const Rational& c);
  bool operator==(const PSeries& o) const;
  bool operator!=(const PSeries& o) const { return !(*this == o); }

  std::string to_string() const;
  nlohmann::json to_json() const;
  static PSeries from_json(const Ring& ring, const nlohmann::json& j);

 private:
  void check(const PSeries& o) const;
  Ring ring_;
  int order_ = 0;
  std::map<StrictPartition, CoeffPoly> terms_;
};

PowerSumPoly to_powersum(const PSeries& f);
PSeries from_powersum(const PowerSumPoly& g);
PSeries multiply(const PSeries& a, const PSeries& b);

// sum_k b^k Q_k
PSeries omega_series(const CoeffPoly& b, int order);
// Q_lambda = 2^{l(lambda)} P_lambda
PSeries q_series(const Ring& ring, int order, const StrictPartition& lambda);
// Requires constant term 1.
PSeries sqrt_series(const PSeries& f);
PSeries inverse_series(const PSeries& f);
PSeries coeff_map(const PSeries& f, const Ring& target,
                  const std::function<CoeffPoly(const CoeffPoly&)>& fn);
PSeries coeff_substitute(const PSeries& f, const std::map<size_t, CoeffPoly>& values);
PSeries embed(const PSeries& f, const Ring& target);

// <f, g> where f is expanded in P and g in Q: sum of products of coefficients.
CoeffPoly pair_P_Q(const PSeries& f_in_P, const std::map<StrictPartition, CoeffPoly>& g_in_Q);

}  // namespace affsp
