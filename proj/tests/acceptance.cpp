#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "affsp/verify.hpp"

using namespace affsp;

namespace {

using Checks = std::vector<CheckResult>;

Checks join(std::vector<Checks> parts) {
  Checks out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

struct Criterion {
  int id;
  std::string title;
  std::function<Checks()> run;
};

}  // namespace

int main() {
  const int N = 8;
  const unsigned seed = 7;
  std::vector<Criterion> cs = {
      {1, "small classes: A_w(1) = dual P at a^(n), n=2 l<=4 and n=3 l<=6",
       [] { return join({check_small_classes(2, N, 4), check_small_classes(3, N, 6)}); }},
      {2, "P-hat_1^2 expansion (corrected indices, see notes)",
       [] { return check_square_display(N); }},
      {3, "Omega(b) expansion and Omega(b)Omega(-b) = 1",
       [] {
         Checks c = check_omega(2, N);
         c.resize(2);
         return c;
       }},
      {4, "infinite-rank divided differences on dual P, |mu|<=6, i<=7",
       [] { return check_divided_differences(N, 6, 7); }},
      {5, "localization at rho_i and t_{eps_i}; gamma image of translations",
       [] {
         Checks t = check_omega(3, N);
         return join({check_localization(3), Checks(t.begin() + 2, t.end())});
       }},
      {6, "j-basis: j_{s0} and the structure-constant table, n=2 l<=4",
       [] { return check_jbasis(N, 4); }},
      {7, "factorization: the two C_2 examples and the l(v)<=3 sweep",
       [] { return check_factorization(2, N); }},
      {8, "centralizer presentation displays and relation identities, n=2,3",
       [] { return join({check_presentation(2), check_presentation(3)}); }},
      {9, "Groebner basis {Rhat_2i} at 6 specializations, n=2,3, degrees<=4",
       [] { return join({check_groebner(2, 6, seed), check_groebner(3, 6, seed)}); }},
      {10, "beta homomorphism at n=2 through degree 8", [] { return check_beta(2, N); }},
      {11, "matrix families u_w and M(h), n=2,3",
       [] { return join({check_matrix_families(2), check_matrix_families(3)}); }},
      {12, "fermionic oracle for dual P, anticommutators, Q_i and q-hat_i",
       [] { return check_fermion(N, 1); }},
      {13, "Cauchy identities in three variables and P-hat/Q duality, sizes<=6",
       [] { return check_cauchy(N, 6); }},
      {14, "Pieri generation: P-hat_w, l(w)<=5 at n=2, from P-hat_{rho_1..rho_4}",
       [] { return check_pieri(N, 5); }},
  };

  int failed = 0;
  for (const auto& c : cs) {
    auto t0 = std::chrono::steady_clock::now();
    Checks res;
    std::string error;
    try {
      res = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = error.empty() && !res.empty();
    std::string why = error;
    int cases = 0;
    for (const auto& r : res) {
      cases += r.cases ? r.cases : 1;
      if (!r.ok && ok) {
        ok = false;
        why = r.name + (r.detail.empty() ? "" : " -- " + r.detail);
      }
    }
    std::printf("%s criterion %d: %s (%d checks, %.1fs)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                c.title.c_str(), cases, secs, ok ? "" : " :: ", ok ? "" : why.c_str());
    std::fflush(stdout);
    failed += !ok;
  }
  std::printf("%d of %zu criteria passed\n", int(cs.size()) - failed, cs.size());
  return failed ? 1 : 0;
}
