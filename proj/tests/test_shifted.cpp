#include "doctest.h"

#include <map>
#include <set>

#include "affsp/shifted.hpp"

using namespace affsp;
using W = AffineWeylElt;
using SP = StrictPartition;

TEST_CASE("strict partition enumeration") {
  CHECK(strict_partitions(8).size() == 6);
  CHECK(strict_partitions_upto(8).size() == 25);
  CHECK(strict_partitions(6).front() == SP({6}));
  CHECK_THROWS_AS(SP({2, 2}), InvalidArgument);
}

TEST_CASE("shifted diagram action") {
  // the word for (5,3) adds one box at a time
  std::vector<int> word = {2, 1, 4, 3, 0, 2, 1, 0};
  SP lam;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    SP next = sp_apply(*it, lam);
    CHECK(next.size() == lam.size() + 1);
    lam = next;
  }
  CHECK(lam == SP({5, 3}));
  CHECK(infinite_word_perm(word, 8) == infinite_word_perm(w_lambda_word(SP({5, 3})), 8));
  CHECK(infinite_word_perm({0, 2, 1, 0}, 6) == infinite_word_perm(w_lambda_word(SP({3, 1})), 6));
  // involution and Coxeter relations on all shapes of size <= 7
  for (const auto& mu : strict_partitions_upto(7)) {
    for (int i = 0; i < 8; ++i) CHECK(sp_apply(i, sp_apply(i, mu)) == mu);
    SP x = mu;
    for (int k = 0; k < 4; ++k) x = sp_apply(0, sp_apply(1, x));
    CHECK(x == mu);
    for (int i = 1; i < 6; ++i) {
      SP y = mu;
      for (int k = 0; k < 3; ++k) y = sp_apply(i, sp_apply(i + 1, y));
      CHECK(y == mu);
    }
  }
}

TEST_CASE("residue folding") {
  // n = 3: diagonals 0..6 fold to 0 1 2 3 2 1 0
  std::vector<int> want = {0, 1, 2, 3, 2, 1, 0, 1};
  for (int d = 0; d < 8; ++d) {
    CHECK(fold_residue(d, 3) == want[d]);
    CHECK(fold_residue(-d, 3) == want[d]);
  }
}

TEST_CASE("symmetric cores") {
  Partition c{{4, 3, 2, 1}};
  CHECK(is_symmetric_core(c, 3));
  CHECK(core_apply(2, c, 3) == Partition{{5, 4, 2, 2, 1}});
  CHECK(core_apply(3, c, 3) == Partition{{3, 3, 2}});
  Partition f{{3, 1, 1}};
  CHECK(core_apply(1, f, 3) == f);
  for (int n = 2; n <= 3; ++n) {
    for (const auto& w : enumerate_grassmannian(n, 9)) {
      Partition core = w_to_core(w);
      CHECK(is_symmetric_core(core, n));
      CHECK(core_to_w(core, n) == w);
    }
  }
}

TEST_CASE("small elements match strict partitions") {
  for (int n = 2; n <= 3; ++n) {
    auto gr = enumerate_grassmannian(n, 2 * n);
    std::set<SP> seen;
    std::map<W, SP> lam;
    for (const auto& w : gr) {
      LambdaW lw = lambda_w(w);
      CHECK(lw.trusted);
      CHECK(lw.lambda.size() == w.length());
      seen.insert(lw.lambda);
      lam[w] = lw.lambda;
    }
    CHECK(seen.size() == strict_partitions_upto(2 * n).size());
    // covers in the left weak order are single boxes with matching residue
    for (const auto& w : gr) {
      for (int i = 0; i <= n; ++i) {
        W x = W::simple(i, n) * w;
        if (x.length() != w.length() + 1 || !x.is_grassmannian() || x.length() > 2 * n) continue;
        const SP& a = lam[w];
        const SP& b = lam[x];
        CHECK(b.size() == a.size() + 1);
        // the new box lies on a diagonal folding to i
        bool ok = false;
        for (int d = 0; d <= 2 * n; ++d)
          if (sp_apply(d, a) == b && fold_residue(d, n) == i) ok = true;
        CHECK(ok);
      }
    }
  }
  CHECK_THROWS_AS(lambda_w(W::simple(1, 2)), NotGrassmannian);
}

TEST_CASE("addable residues") {
  CHECK(addable_residues(SP({3}), 2) == std::vector<int>{0, 1});
  for (int n = 2; n <= 4; ++n)
    for (const auto& mu : strict_partitions_upto(2 * n - 1)) {
      auto r = addable_residues(mu, n);
      CHECK(std::set<int>(r.begin(), r.end()).size() == r.size());
    }
}
