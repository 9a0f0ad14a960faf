#pragma once

#include <random>

#include "affsp/ring.hpp"

namespace testutil {

inline affsp::CoeffPoly random_poly(const affsp::Ring& ring, std::mt19937& rng, int terms,
                                    int maxdeg, int maxcoef = 5) {
  std::uniform_int_distribution<int> coef(-maxcoef, maxcoef);
  std::uniform_int_distribution<int> var(0, int(ring->size()) - 1);
  std::uniform_int_distribution<int> deg(0, maxdeg);
  affsp::CoeffPoly p(ring);
  for (int t = 0; t < terms; ++t) {
    affsp::Monomial m;
    int d = deg(rng);
    for (int k = 0; k < d; ++k) m.e[var(rng)]++;
    p += affsp::CoeffPoly::monomial(ring, m, coef(rng));
  }
  return p;
}

}  // namespace testutil
