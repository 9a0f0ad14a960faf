#include "affsp/linalg.hpp"

namespace affsp {

bool EchelonSolver::add_row(SparseRow row, Rational rhs) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->second == 0) it = row.erase(it); else ++it;
  }
  while (!row.empty()) {
    auto first = row.begin();
    int col = first->first;
    auto piv = pivots_.find(col);
    if (piv == pivots_.end()) break;
    Rational f = first->second;
    for (const auto& [c, v] : piv->second.row) {
      auto [it, inserted] = row.try_emplace(c, 0);
      it->second -= f * v;
      if (it->second == 0) row.erase(it);
    }
    rhs -= f * piv->second.rhs;
  }
  if (row.empty()) {
    if (rhs != 0) consistent_ = false;
    return rhs == 0;
  }
  int col = row.begin()->first;
  Rational inv = 1 / row.begin()->second;
  for (auto& [c, v] : row) v *= inv;
  rhs *= inv;
  pivots_.emplace(col, Pivot{std::move(row), std::move(rhs)});
  return true;
}

std::vector<int> EchelonSolver::free_columns() const {
  std::vector<int> out;
  for (int c = 0; c < ncols_; ++c)
    if (!pivots_.count(c)) out.push_back(c);
  return out;
}

std::vector<Rational> EchelonSolver::particular_solution() const {
  if (!consistent_) throw NoSolution("inconsistent linear system");
  std::vector<Rational> x(ncols_, 0);
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    Rational v = it->second.rhs;
    for (const auto& [c, a] : it->second.row) {
      if (c == it->first) continue;
      if (x[c] != 0) v -= a * x[c];
    }
    x[it->first] = v;
  }
  return x;
}

std::vector<Rational> EchelonSolver::unique_solution() const {
  if (!consistent_) throw NoSolution("inconsistent linear system");
  if (rank() != ncols_)
    throw NonUnique(std::to_string(ncols_ - rank()) + " free parameters");
  return particular_solution();
}

int sparse_rank(const std::vector<SparseRow>& rows, int ncols) {
  EchelonSolver s(ncols);
  for (const auto& r : rows) s.add_row(r, 0);
  return s.rank();
}

}  // namespace affsp
