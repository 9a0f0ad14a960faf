#pragma once

#include <map>
#include <vector>

#include "affsp/symfun.hpp"

namespace affsp {

// Canonical Fock state phi_{i_1} ... phi_{i_p}|vac>, i_1 > ... > i_p >= 0.
using FockState = std::vector<int>;

int state_degree(const FockState& s);
// |lambda> = phi_{lambda_1} ... phi_{lambda_r'}|vac>, padded with 0 to even length.
FockState ket_state(const StrictPartition& lambda);

class FockVector {
 public:
  FockVector() = default;
  explicit FockVector(Ring ring) : ring_(std::move(ring)) {}
  static FockVector vacuum(const Ring& ring);
  static FockVector state(const Ring& ring, const FockState& s);

  const Ring& ring() const { return ring_; }
  const std::map<FockState, CoeffPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  CoeffPoly coeff(const FockState& s) const;
  void add(const FockState& s, const CoeffPoly& c);
  // drop states of degree > d
  FockVector truncate(int d) const;

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const CoeffPoly& c, const FockVector& v);
  bool operator==(const FockVector& o) const { return terms_ == o.terms_; }
  bool operator!=(const FockVector& o) const { return !(*this == o); }

 private:
  Ring ring_;
  std::map<FockState, CoeffPoly> terms_;
};

// Linear combination sum_j c_j phi_j (finitely many terms).
class Fermion {
 public:
  Fermion() = default;
  explicit Fermion(Ring ring) : ring_(std::move(ring)) {}
  static Fermion gen(const Ring& ring, int m);

  const Ring& ring() const { return ring_; }
  const std::map<int, CoeffPoly>& terms() const { return terms_; }
  void add(int m, const CoeffPoly& c);
  // phi_i -> (-1)^i phi_{-i}
  Fermion star() const;
  bool operator==(const Fermion& o) const { return terms_ == o.terms_; }

 private:
  Ring ring_;
  std::map<int, CoeffPoly> terms_;
};

// [x, y]_+, a scalar for linear forms
CoeffPoly anticommutator(const Fermion& x, const Fermion& y);

// phi_m v, straightened.
FockVector apply(int m, const FockVector& v);
// x v; states of degree > max_degree are dropped when max_degree >= 0.
FockVector apply(const Fermion& x, const FockVector& v, int max_degree = -1);
// word[0] word[1] ... |vac>, rightmost letter applied first
FockVector straighten(const std::vector<int>& word, const Ring& ring);

// Vacuum coefficient of the straightened word (zero for odd words).
CoeffPoly vev(const std::vector<int>& word, const Ring& ring);
// The same through Wick pairings (Pfaffian of two-point values).
CoeffPoly wick_vev(const std::vector<int>& word, const Ring& ring);
// Projection F -> C[a] with phi_0|vac> -> 1.
CoeffPoly project(const FockVector& v);

// <mu|v> with <mu| = <vac| phi*_{mu_r'} ... phi*_{mu_1}
CoeffPoly bra_pairing(const StrictPartition& mu, const FockVector& v);

// Deformed operators truncated to indices |i| <= K.  a needs at least
// max(|j|, 1) entries; CutoffTooSmall if |j| > K.
Fermion phi_a(int j, const std::vector<CoeffPoly>& a, const Ring& ring, int K);
Fermion phihat_a(int j, const std::vector<CoeffPoly>& a, const Ring& ring, int K);

// |lambda>_H and |lambda>_C; states above degree max_degree are dropped.
FockVector ket_H(const StrictPartition& lambda, const std::vector<CoeffPoly>& a,
                 const Ring& ring, int max_degree, int K);
FockVector ket_C(const StrictPartition& lambda, const std::vector<CoeffPoly>& a,
                 const Ring& ring);
// _C<lambda|v>
CoeffPoly bra_C_pairing(const StrictPartition& lambda, const std::vector<CoeffPoly>& a,
                        const FockVector& v);

// Read a vector of F_+ as sum v_mu |mu>.
std::map<StrictPartition, CoeffPoly> fock_coefficients(const FockVector& v);

// P-hat_lambda(y|a) through degree N, read off |lambda>_H.  Cutoff
// K = N + 2 max part, checked against K + 2.
PSeries hatP_via_fermion(const StrictPartition& lambda, const std::vector<CoeffPoly>& a,
                         const Ring& ring, int N);
// Q_lambda(x|a) = sum_mu c_mu Q_mu(x)
std::map<StrictPartition, CoeffPoly> factorialQ_via_fermion(const StrictPartition& lambda,
                                                            const std::vector<CoeffPoly>& a,
                                                            const Ring& ring);

// Q_i and q-hat_i(c) against their P-hat expansions for i <= 5, with
// generic a and random rational c-lists.
bool verify_fermionic_expansions(int N, unsigned seed = 1);

}  // namespace affsp
