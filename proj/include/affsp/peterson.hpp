#pragma once

#include <map>
#include <vector>

#include "affsp/nilhecke.hpp"

namespace affsp {

// Localization values: w = sum_v xi^v(w) A_v, computed by the subword
// formula along a reduced word of w (the default word if none is given).
// w must lie in W_af.
std::map<AffineWeylElt, CoeffPoly> billey_all(const AffineWeylElt& w, const Ring& ring,
                                              const std::vector<int>& word = {});
CoeffPoly billey_xi(const AffineWeylElt& v, const AffineWeylElt& w, const Ring& ring,
                    const std::vector<int>& word = {});

// Coefficients of a translation t on the j-basis: xi^v(t) for v in W_af^0.
std::map<AffineWeylElt, CoeffPoly> translation_expansion(const AffineWeylElt& t,
                                                         const Ring& ring);
// t_{eps_i} = 1 + sum_k ((a_i|a))^k j_{rho_k}
std::map<AffineWeylElt, CoeffPoly> translation_expansion(int i, int n, const Ring& ring);

struct JBasisElt {
  AffineWeylElt w;
  NilHeckeElt elt;
  int support_length = 0;  // largest length in the solved support
};

// The unique A_w + sum_{v not Grassmannian} c_v A_v commuting with S.
// The support is grown by length until the commutator system is
// consistent; CutoffTooSmall past max_length.
JBasisElt compute_j(const AffineWeylElt& w, const Ring& ring, int max_length = 20);

// Memoized j-basis elements over one ring.
class JTable {
 public:
  JTable(Ring ring, int n, int max_length = 20)
      : ring_(std::move(ring)), n_(n), max_length_(max_length) {}
  const Ring& ring() const { return ring_; }
  int n() const { return n_; }
  const JBasisElt& get(const AffineWeylElt& w);

 private:
  Ring ring_;
  int n_, max_length_;
  std::map<AffineWeylElt, JBasisElt> cache_;
};

// j_u j_v = sum_w c^w_{uv} j_w, from the A-coefficients of j_u.
std::map<AffineWeylElt, CoeffPoly> structure_constants(const JBasisElt& ju, const AffineWeylElt& v);
// Left multiplication by j_u on an element of the j-basis module.
std::map<AffineWeylElt, CoeffPoly> multiply_j(const JBasisElt& ju,
                                              const std::map<AffineWeylElt, CoeffPoly>& x);

// The family P-hat_w (w in W_af^0, l(w) <= order) and expansion of a
// series in it, degree by degree.
class AffinePBasis {
 public:
  explicit AffinePBasis(const SeriesAction& act);
  const std::vector<AffineWeylElt>& elements() const { return elems_; }
  const PSeries& get(const AffineWeylElt& w) const;
  // NoSolution if f is not in the S-span through the truncation order
  std::map<AffineWeylElt, CoeffPoly> expand(const PSeries& f) const;
  PSeries combine(const std::map<AffineWeylElt, CoeffPoly>& c) const;

 private:
  const SeriesAction* act_;
  std::vector<AffineWeylElt> elems_;
  std::map<AffineWeylElt, PSeries> series_;
};

// P-hat_{v kappa_i} against the factorized form; HypothesisFailed unless
// v kappa_i is Grassmannian and length-additive.
bool verify_factorization(const AffineWeylElt& v, int i, const SeriesAction& act);

// P-hat_w as a polynomial in P-hat_{rho_1..rho_2n}: exponent vectors with
// S-coefficients.  Solved exactly in the j-basis with monomials of degree
// l(w)..l(w)+extra.
struct PieriCertificate {
  AffineWeylElt w;
  std::map<std::vector<int>, CoeffPoly> coeffs;
};
PieriCertificate pieri_express(const AffineWeylElt& w, JTable& table, int extra = 2);
// Evaluate a certificate on series.
PSeries pieri_evaluate(const PieriCertificate& c, const SeriesAction& act);
bool pieri_generation(int max_length, int n, int order);

}  // namespace affsp
