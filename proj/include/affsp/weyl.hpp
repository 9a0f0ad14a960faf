#pragma once

#include <map>
#include <string>
#include <vector>

#include "affsp/ring.hpp"

namespace affsp {

// Signed permutation u with u(e_i) = sign[i] * e_{perm[i]}, 0-based.
struct SignedPerm {
  std::vector<int> perm, sign;

  static SignedPerm identity(int n);
  int n() const { return int(perm.size()); }
  SignedPerm operator*(const SignedPerm& o) const;
  SignedPerm inverse() const;
  std::vector<int> act(const std::vector<int>& v) const;
  bool operator==(const SignedPerm& o) const { return perm == o.perm && sign == o.sign; }
  bool operator<(const SignedPerm& o) const {
    return perm != o.perm ? perm < o.perm : sign < o.sign;
  }
};

// gamma + k delta, with gamma given by its coefficients on a_1..a_n.
struct AffineRoot {
  std::vector<int> alpha;
  int k = 0;
  bool operator==(const AffineRoot& o) const { return alpha == o.alpha && k == o.k; }
};

bool is_positive(const AffineRoot& r);
// Positive classical roots of C_n: a_i - a_j, a_i + a_j (i<j), 2a_i.
std::vector<std::vector<int>> positive_roots(int n);
bool is_positive_classical(const std::vector<int>& alpha);
// alpha_0 = delta - 2a_1, alpha_i = a_i - a_{i+1}, alpha_n = 2a_n.
AffineRoot simple_root(int i, int n);
// Classical part of alpha_i as a polynomial in a1..an.
CoeffPoly simple_root_poly(int i, const Ring& ring);

// Element of the extended affine Weyl group of type C_n^(1), stored as
// t_L U with U a signed permutation and L in (1/2)Z^n kept doubled.
// The fundamental-group flag sigma is set exactly when L is half-integral,
// in which case the element is pi_n times an element of W_af.
class AffineWeylElt {
 public:
  AffineWeylElt() = default;
  static AffineWeylElt identity(int n);
  static AffineWeylElt simple(int i, int n);
  static AffineWeylElt from_word(const std::vector<int>& word, int n);
  static AffineWeylElt translation(const std::vector<int>& lambda);
  static AffineWeylElt translation_doubled(const std::vector<int>& twice_lambda);
  static AffineWeylElt classical(const SignedPerm& u);
  static AffineWeylElt pi(int n);
  // pi^sigma t_lambda u
  static AffineWeylElt from_parts(const SignedPerm& u, const std::vector<int>& lambda,
                                  bool sigma);

  int n() const { return u_.n(); }
  const SignedPerm& cl() const { return u_; }
  const std::vector<int>& doubled_translation() const { return t2_; }
  bool sigma() const;
  // Parts of pi^sigma t_lambda u.
  SignedPerm part_u() const;
  std::vector<int> part_trans() const;
  bool is_translation() const;

  AffineWeylElt operator*(const AffineWeylElt& o) const;
  AffineWeylElt inverse() const;
  bool operator==(const AffineWeylElt& o) const { return u_ == o.u_ && t2_ == o.t2_; }
  bool operator!=(const AffineWeylElt& o) const { return !(*this == o); }
  bool operator<(const AffineWeylElt& o) const {
    return t2_ != o.t2_ ? t2_ < o.t2_ : u_ < o.u_;
  }

  AffineRoot act(const AffineRoot& r) const;
  std::vector<int> act_weight(const std::vector<int>& v) const { return u_.act(v); }
  // Level-zero action on polynomials in a1..an (first n variables of ring).
  CoeffPoly act_poly(const CoeffPoly& f) const;

  int length() const;
  bool has_right_descent(int i) const;
  bool has_left_descent(int i) const;
  bool is_grassmannian() const;
  // Reduced word of the W_af part; w = pi^sigma s_{w[0]} s_{w[1]} ...
  // Built by stripping the smallest right descent.
  std::vector<int> reduced_word() const;
  std::string to_string() const;
  nlohmann::json to_json() const;
  static AffineWeylElt from_json(const nlohmann::json& j);

 private:
  SignedPerm u_;
  std::vector<int> t2_;
};

bool bruhat_le(const AffineWeylElt& v, const AffineWeylElt& w);
std::vector<std::vector<int>> all_reduced_words(const AffineWeylElt& w);
std::vector<int> parse_word(const std::string& text);

// Grassmannian elements (x(alpha_i) > 0 for i = 1..n) of length <= maxLen,
// ordered by length then by internal order.
std::vector<AffineWeylElt> enumerate_grassmannian(int n, int maxLen);
// All elements of W_af of length <= maxLen.
std::vector<AffineWeylElt> enumerate_affine(int n, int maxLen);
// All of the finite group W (generated by s_1..s_n).
std::vector<AffineWeylElt> enumerate_finite(int n);

SignedPerm u_n(int n);
AffineWeylElt rho(int i, int n);         // 1 <= i <= 2n
AffineWeylElt kappa(int i, int n);       // 1 <= i <= n
AffineWeylElt t_eps(int i, int n, int sign = 1);
AffineWeylElt conj_pi(const AffineWeylElt& v);  // pi v pi^{-1}

}  // namespace affsp
