#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "affsp/errors.hpp"

namespace affsp {

using Rational = mpq_class;

std::string rational_string(const Rational& q);
Rational parse_rational(const std::string& s);

// Ordered list of variable names.  Two rings are compatible when their name
// lists agree.
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names);
  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<size_t> index(const std::string& name) const;
  size_t require(const std::string& name) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, size_t> lookup_;
};

using Ring = std::shared_ptr<const VarSet>;

Ring make_ring(std::vector<std::string> names);
// a1..an followed by extra names.
Ring a_ring(int n, const std::vector<std::string>& extra = {});
bool same_ring(const Ring& a, const Ring& b);

constexpr size_t kMaxVars = 64;

struct Monomial {
  std::array<uint8_t, kMaxVars> e{};

  int degree() const;
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
  // Lex order with variable 0 most significant.
  bool operator<(const Monomial& o) const { return e < o.e; }
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires divides
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const noexcept;
};

// Graded reverse lexicographic comparison, variable 0 largest.
bool grevlex_less(const Monomial& a, const Monomial& b, size_t nvars);
// All monomials of total degree d in the first nvars variables.
std::vector<Monomial> monomials_of_degree(size_t nvars, int d);

using Term = std::pair<Monomial, Rational>;

// Exact multivariate polynomial with rational coefficients over a named
// variable set.  Terms are kept sorted by Monomial::operator< with no zeros.
class CoeffPoly {
 public:
  CoeffPoly() = default;
  explicit CoeffPoly(Ring ring);
  CoeffPoly(Ring ring, const Rational& c);

  static CoeffPoly var(const Ring& ring, size_t index);
  static CoeffPoly var(const Ring& ring, const std::string& name);
  static CoeffPoly monomial(const Ring& ring, const Monomial& m, const Rational& c);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  int total_degree() const;  // -1 for zero
  int degree_in(size_t var) const;
  bool is_homogeneous() const;
  Rational coeff(const Monomial& m) const;
  // Largest term in internal lex order.
  const Term& lex_leading() const;

  CoeffPoly operator-() const;
  CoeffPoly& operator+=(const CoeffPoly& o);
  CoeffPoly& operator-=(const CoeffPoly& o);
  CoeffPoly& operator*=(const CoeffPoly& o);
  CoeffPoly& operator*=(const Rational& c);
  friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
  friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
  friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
  friend CoeffPoly operator*(CoeffPoly a, const Rational& c) { return a *= c; }
  friend CoeffPoly operator*(const Rational& c, CoeffPoly a) { return a *= c; }
  bool operator==(const CoeffPoly& o) const;
  bool operator!=(const CoeffPoly& o) const { return !(*this == o); }

  CoeffPoly pow(int k) const;
  // Terms of total degree d.
  CoeffPoly homogeneous_part(int d) const;
  // Re-express in another ring, matching variables by name.
  CoeffPoly embed(const Ring& target) const;

  // Canonical rendering, terms in decreasing grevlex order.
  std::string to_string() const;
  nlohmann::json to_json() const;
  static CoeffPoly from_json(const Ring& ring, const nlohmann::json& j);

  // Internal: build from sorted unique nonzero terms.
  static CoeffPoly from_sorted(Ring ring, std::vector<Term> terms);
  // Internal: build from arbitrary terms (sorted and merged here).
  static CoeffPoly from_terms(Ring ring, std::vector<Term> terms);

 private:
  void check_ring(const CoeffPoly& o) const;
  Ring ring_;
  std::vector<Term> terms_;
};

// Throws DivisionInexact when g does not divide f.
CoeffPoly exact_divide(const CoeffPoly& f, const CoeffPoly& g);
std::optional<CoeffPoly> try_divide(const CoeffPoly& f, const CoeffPoly& g);

// Substitute variables (by index in f's ring) with polynomials in `target`.
// Variables not in the map are carried over by name into `target`.
CoeffPoly substitute(const CoeffPoly& f, const std::map<size_t, CoeffPoly>& values,
                     const Ring& target);
CoeffPoly substitute(const CoeffPoly& f, const std::map<size_t, CoeffPoly>& values);
CoeffPoly substitute_named(const CoeffPoly& f,
                           const std::map<std::string, CoeffPoly>& values);
// Fast path for x_i -> sign_i * x_{target_i}, same ring.
CoeffPoly signed_rename(const CoeffPoly& f, const std::vector<int>& target,
                        const std::vector<int>& sign);

// Symmetric functions of a list of polynomial values.
CoeffPoly complete_h(const Ring& ring, int k, const std::vector<CoeffPoly>& xs);
CoeffPoly elementary_e(const Ring& ring, int k, const std::vector<CoeffPoly>& xs);
// Coefficient of u^k in prod(1 - z_j u) / prod(1 - x_i u).
CoeffPoly super_h(const Ring& ring, int k, const std::vector<CoeffPoly>& xs,
                  const std::vector<CoeffPoly>& zs);
// sum_{i+j=r} (-1)^j e_i[A] h_j[B]
CoeffPoly pleth_e(const Ring& ring, int r, const std::vector<CoeffPoly>& A,
                  const std::vector<CoeffPoly>& B);
// ((b|a))^k = 2b(b-a_1)...(b-a_{k-1}); 1 for k = 0.
CoeffPoly factorial_power(const CoeffPoly& b, int k, const std::vector<CoeffPoly>& a);

// Parse expressions such as "2*a1^2 - (a1+a2)*zh3 + 3/4".  Juxtaposition is
// not multiplication; use '*'.
CoeffPoly parse_poly(const Ring& ring, const std::string& text);

// Greatest common divisor over Q, normalised to leading coefficient 1
// (lex order).  gcd(0,0) = 0.
CoeffPoly poly_gcd(const CoeffPoly& f, const CoeffPoly& g);

class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(const CoeffPoly& num);
  RationalFunction(const CoeffPoly& num, const CoeffPoly& den);
  RationalFunction(Ring ring, const Rational& c);

  const CoeffPoly& num() const { return num_; }
  const CoeffPoly& den() const { return den_; }
  const Ring& ring() const { return num_.ring(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  bool operator==(const RationalFunction& o) const;
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  void normalize();
  CoeffPoly num_, den_;
};

}  // namespace affsp
