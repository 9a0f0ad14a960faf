#pragma once

#include <map>
#include <string>
#include <vector>

#include "affsp/factorial.hpp"
#include "affsp/weyl.hpp"

namespace affsp {

// W acts on S through cl; these are the level-zero simple roots and
// divided differences on polynomials in a1..an (the first n variables).
CoeffPoly level_zero_root(int i, int n, const Ring& ring);
CoeffPoly reflect_poly(int i, int n, const CoeffPoly& s);
CoeffPoly divided_difference(int i, int n, const CoeffPoly& s);

// Level-zero action of the extended affine Weyl group on PSeries over a
// ring whose first n variables are a1..an: t_L u acts as Omega^L . u(f),
// half-integral L through eta = sqrt(prod Omega(a_i|y)).
class SeriesAction {
 public:
  SeriesAction(Ring ring, int n, int order);

  const Ring& ring() const { return ring_; }
  int n() const { return n_; }
  int order() const { return order_; }
  // Omega(sign * a_i | y), 1 <= i <= n
  const PSeries& omega(int i, int sign = 1) const;
  const PSeries& eta() const { return eta_; }
  const PSeries& eta_inverse() const { return eta_inv_; }

  PSeries act(const AffineWeylElt& w, const PSeries& f) const;
  PSeries reflect(int i, const PSeries& f) const;
  PSeries pi(const PSeries& f) const;
  PSeries A(int i, const PSeries& f) const;
  // A_{i_1} ... A_{i_k} f
  PSeries A_word(const std::vector<int>& word, const PSeries& f) const;
  // pi^sigma A_v f along the default reduced word
  PSeries A(const AffineWeylElt& w, const PSeries& f) const;

 private:
  PSeries apply_u(const SignedPerm& u, const PSeries& f) const;
  Ring ring_;
  int n_, order_;
  std::vector<PSeries> omega_pos_, omega_neg_;
  PSeries eta_, eta_inv_;
};

// Divided differences of infinite rank on series over a1..aM:
// s_0 f = Omega(a_1|y) f(y|-a_1, a_2, ...), s_i swaps a_i and a_{i+1},
// alpha_0 = -2a_1, alpha_i = a_i - a_{i+1}.
class InfiniteRankAction {
 public:
  // ring must start with a1..aM, M >= order + 2
  InfiniteRankAction(Ring ring, int order);
  const Ring& ring() const { return ring_; }
  int order() const { return order_; }
  PSeries reflect(int i, const PSeries& f) const;
  PSeries A(int i, const PSeries& f) const;

 private:
  Ring ring_;
  int order_, M_;
  PSeries omega1_;
};

// P-hat^{(n)}_w(y|a) = A_w(1) for w Grassmannian, or pi applied to
// P-hat_v for w = pi v.  Coefficients in a_ring(n) unless a ring is given.
PSeries dual_affine_P(const AffineWeylElt& w, int order);
PSeries dual_affine_P(const AffineWeylElt& w, const SeriesAction& act);

// Element sum_w c_w A_w of the (extended) level-zero affine nil-Hecke
// algebra, coefficients on the left.  A_{pi v} = pi A_v.
class NilHeckeElt {
 public:
  NilHeckeElt() = default;
  NilHeckeElt(Ring ring, int n) : ring_(std::move(ring)), n_(n) {}
  static NilHeckeElt A(const AffineWeylElt& w, const Ring& ring);
  static NilHeckeElt scalar(const CoeffPoly& c, int n);
  // w as a group element: product of s_i = 1 - alpha_i A_i along a
  // reduced word, with pi kept as A_pi.
  static NilHeckeElt group_element(const AffineWeylElt& w, const Ring& ring);

  const Ring& ring() const { return ring_; }
  int n() const { return n_; }
  const std::map<AffineWeylElt, CoeffPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  CoeffPoly coeff(const AffineWeylElt& w) const;
  void add(const AffineWeylElt& w, const CoeffPoly& c);

  NilHeckeElt& operator+=(const NilHeckeElt& o);
  NilHeckeElt& operator-=(const NilHeckeElt& o);
  friend NilHeckeElt operator+(NilHeckeElt a, const NilHeckeElt& b) { return a += b; }
  friend NilHeckeElt operator-(NilHeckeElt a, const NilHeckeElt& b) { return a -= b; }
  friend NilHeckeElt operator*(const NilHeckeElt& a, const NilHeckeElt& b);
  // left multiplication by a scalar
  friend NilHeckeElt operator*(const CoeffPoly& c, const NilHeckeElt& a);
  bool operator==(const NilHeckeElt& o) const { return terms_ == o.terms_; }
  bool operator!=(const NilHeckeElt& o) const { return !(*this == o); }

  CoeffPoly act(const CoeffPoly& s) const;
  PSeries act(const PSeries& f, const SeriesAction& action) const;
  std::string to_string() const;

 private:
  Ring ring_;
  int n_ = 0;
  std::map<AffineWeylElt, CoeffPoly> terms_;
};

// A_i x, pi x and A_u x computed by the commutation rule
// A_i c = s_i(c) A_i + A_i(c).
NilHeckeElt left_mul_A(int i, const NilHeckeElt& x);
NilHeckeElt left_mul_pi(const NilHeckeElt& x);
NilHeckeElt left_mul_A(const AffineWeylElt& u, const NilHeckeElt& x);

}  // namespace affsp
