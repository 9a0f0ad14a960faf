#pragma once

#include <vector>

#include "affsp/symfun.hpp"

namespace affsp {

// The a-variables a1..a_count of a ring, as polynomials.
std::vector<CoeffPoly> a_values(const Ring& ring, int count);
// Periodic specialisation (a1..an, -an..-a1, a1, ...) of length `count`.
std::vector<CoeffPoly> a_periodic(const Ring& ring, int n, int count);

// Dual factorial P-function: sum over mu >= lambda (same length, |mu| <= N)
// of det(h_{mu_i - lambda_j}(a_1..a_{lambda_j})) P_mu.
PSeries dual_P(const StrictPartition& lambda, const std::vector<CoeffPoly>& a,
               const Ring& ring, int order);

// sum_k h_k(c) Q_{i+k}
PSeries qhat(int i, const std::vector<CoeffPoly>& c, const Ring& ring, int order);
// delta_{i0} + 2 sum_{k, i+k >= 1} h_k(c; a_1..a_{i+k-1}) dual_P(i+k)
PSeries qhat_to_dualP(int i, const std::vector<CoeffPoly>& c, const std::vector<CoeffPoly>& a,
                      const Ring& ring, int order);

// Factorial Q_lambda(x_1..x_m | a) by symmetrising over S_m.  xs are
// variables of `ring`; m = xs.size() <= 6.
CoeffPoly factorial_Q(const StrictPartition& lambda, const std::vector<size_t>& xs,
                      const std::vector<CoeffPoly>& a, const Ring& ring);

// Coefficients of f in the dual factorial basis, found by peeling off
// lowest-degree P_mu terms (the basis is unitriangular).
std::map<StrictPartition, CoeffPoly> expand_in_dualP(const PSeries& f,
                                                     const std::vector<CoeffPoly>& a);

// Determinant by permutation expansion (small sizes only).
CoeffPoly small_det(const std::vector<std::vector<CoeffPoly>>& m, const Ring& ring);

}  // namespace affsp
