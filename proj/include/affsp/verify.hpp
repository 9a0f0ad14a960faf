#pragma once

#include <string>
#include <vector>

#include "affsp/centralizer.hpp"

namespace affsp {

// Check groups shared by the CLI suites and the acceptance binary.  Each
// returns named pass/fail items; n and N are rank and truncation order.

// A_w(1) = dual_P(lambda_w, a^(n)) for Grassmannian w with l(w) <= max_length.
std::vector<CheckResult> check_small_classes(int n, int N, int max_length);
// A_i dual_P(mu) = dual_P(s_i mu) or 0, |mu| <= max_size, 0 <= i <= max_i, infinite rank.
std::vector<CheckResult> check_divided_differences(int N, int max_size, int max_i);
// P-hat_1^2 in the dual P basis (corrected display), plus the literal reading.
std::vector<CheckResult> check_square_display(int N);
// Omega(b) expansion, Omega(b)Omega(-b) = 1, and the translation image at rank n.
std::vector<CheckResult> check_omega(int n, int N);
// xi^{rho_k}(rho_i) = xi^{rho_k}(t_{eps_i}) = ((a_i|a))^k at rank n.
std::vector<CheckResult> check_localization(int n);
// j_{s_0}, then the structure-constant table for lengths <= max_length at n = 2.
std::vector<CheckResult> check_jbasis(int N, int max_length);
// The two worked C_2 examples, then every length-additive v kappa_i with l(v) <= 3.
std::vector<CheckResult> check_factorization(int n, int N);
// Displays at n = 2 and the relation identities at rank n.
std::vector<CheckResult> check_presentation(int n);
std::vector<CheckResult> check_groebner(int n, int count, unsigned seed, int max_degree = 4);
// beta at rank n (displays at n = 2) through degree N.
std::vector<CheckResult> check_beta(int n, int N);
// u_w and M(h) (displays at n = 2).
std::vector<CheckResult> check_matrix_families(int n);
std::vector<CheckResult> check_fermion(int N, unsigned seed);
// Cauchy identities in three x-variables through degree N; duality for sizes <= max_size.
std::vector<CheckResult> check_cauchy(int N, int max_size);
// P-hat_w, l(w) <= max_length at n = 2, in the algebra generated by P-hat_{rho_i}.
std::vector<CheckResult> check_pieri(int N, int max_length);

struct SuiteItem {
  std::string name;
  std::vector<CheckResult> checks;
  double seconds = 0;
  bool ok() const;
};

struct SuiteReport {
  std::string suite;
  std::string statement;
  std::vector<SuiteItem> items;
  bool ok() const;
};

const std::vector<std::string>& suite_names();
// InvalidArgument on an unknown suite name.
SuiteReport run_suite(const std::string& suite, int n, int N, unsigned seed);

}  // namespace affsp
