#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "affsp/linalg.hpp"
#include "affsp/symfun.hpp"
#include "affsp/weyl.hpp"

namespace affsp {

// Matrices of size 2n+1; indices below are 1-based as in the formulas,
// Matrix itself is 0-based.
using PolyMatrix = Matrix<CoeffPoly>;
using RatMatrix = Matrix<RationalFunction>;
using SeriesMatrix = Matrix<PSeries>;

// Ring a1..an, z{i}{j} (1 <= i <= j <= 2n+1), zh1..zh2n.  n <= 4.
Ring centralizer_ring(int n);
CoeffPoly z_var(const Ring& ring, int i, int j);
CoeffPoly zhat_var(const Ring& ring, int k);

// (a_1..a_n, 0, -a_n..-a_1)
std::vector<CoeffPoly> b_sequence(const Ring& ring, int n);

PolyMatrix build_J(int n, const Ring& ring);
PolyMatrix build_L0(int n, const Ring& ring);
// f_i = E_{i+1,i} + E_{2n+2-i,2n+1-i}
PolyMatrix chevalley_f(int i, int n, const Ring& ring);
// tX J + J X = 0
bool in_so(const PolyMatrix& x, int n);
// The entry condition c_{2n+2-j,2n+2-i} = (-1)^{i+j-1} c_{ij}
bool so_entry_condition(const PolyMatrix& x, int n);
// tg J g = J and det g = 1 (det by expansion; triangular g only)
bool in_SO(const PolyMatrix& g, int n);

struct CentralizerRelations {
  std::map<std::pair<int, int>, CoeffPoly> typeA;  // (b_i-b_j)z_ij + z_{i,j-1} - z_{i+1,j}, i < j
  std::map<std::pair<int, int>, CoeffPoly> R;      // R_ij, i <= j
  CoeffPoly center;                                // z_{n+1,n+1} - 1
};
CentralizerRelations centralizer_relations(int n, const Ring& ring);
// R = J - tZ J Z for an upper triangular matrix of polynomials
PolyMatrix R_matrix(const PolyMatrix& z, int n);

struct ReducedPresentation {
  PolyMatrix y;                 // in the first-row z variables
  PolyMatrix w;                 // in zh
  std::vector<CoeffPoly> Rhat;  // Rhat[i-1] = Rhat_{2i}
};
ReducedPresentation reduced_presentation(int n, const Ring& ring);
// y_ij by the closed e-plethysm formula
CoeffPoly y_closed_form(int i, int j, int n, const Ring& ring);

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
  int cases = 0;  // number of instances checked, when counted
};

// Identities among the R_ij after z_ij := w_ij.
std::vector<CheckResult> verify_relation_identities(int n);

struct GroebnerReport {
  std::vector<Rational> a;
  std::vector<std::string> leading;     // rendered leading monomials of Rhat_{2i}
  bool leading_ok = false;              // leading monomials are zh_i^2
  std::vector<int> standard_counts;     // degree 0..D
  std::vector<int> quotient_dims;       // degree 0..D, by rank
  bool relations_reduce = false;        // every R_ij(w) has normal form 0
  bool ok() const { return leading_ok && standard_counts == quotient_dims && relations_reduce; }
};
GroebnerReport groebner_check(int n, const std::vector<Rational>& a, int max_degree = 4);
// ok if the symbolic coefficient of zh_i^2 is 1 and every other monomial is grevlex-smaller
bool leading_terms_symbolic(int n);
// Specializations: a = 0, one with a_1 = a_2 (n >= 2), then random ones off the root hyperplanes.
std::vector<std::vector<Rational>> groebner_specializations(int n, int count, unsigned seed);

// Finite Weyl group elements (W generated by s_1..s_n).
PolyMatrix u_simple(int i, int n, const Ring& ring);
// u_{s_i w}(h) = u_{s_i}(w(h)) u_w(h), along the reduced word
PolyMatrix u_matrix(const AffineWeylElt& w, const Ring& ring);
PolyMatrix u_matrix_word(const std::vector<int>& word, int n, const Ring& ring);
// f(h) -> f(w(h)) on polynomials in a
CoeffPoly at_w(const AffineWeylElt& w, const CoeffPoly& f);
PolyMatrix at_w(const AffineWeylElt& w, const PolyMatrix& m);
// u_w L_0 u_w^{-1} = L_0(w(h)) for all w, and the cocycle rule on all pairs
bool verify_uw(int n);

RatMatrix m_matrix(int n, const Ring& ring);
// M L_0 M^{-1} = diag(b)
bool verify_M(int n);

// beta(z_ij) = (-1)^{j-i} qhat_{j-i}(y | b_i..b_j), coefficients in a_ring(n)
SeriesMatrix beta_matrix(int n, int order);
// exp(2 sum_{m odd <= N} (p_m/m) L_0^m), truncated at weight N
SeriesMatrix exp_matrix(int n, int order);
// Substitute zh_k -> series, a_i -> a_i in a polynomial of centralizer_ring(n).
PSeries evaluate_series(const CoeffPoly& f, const std::map<size_t, PSeries>& values,
                        const Ring& target, int order);
std::vector<CheckResult> beta_substitute(int n, int order);

std::string render(const CoeffPoly& f);

}  // namespace affsp
