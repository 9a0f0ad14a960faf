#pragma once

#include <string>
#include <vector>

#include "affsp/weyl.hpp"

namespace affsp {

// Strictly decreasing positive parts.
struct StrictPartition {
  std::vector<int> parts;

  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> p);
  int size() const;
  int length() const { return int(parts.size()); }
  bool empty() const { return parts.empty(); }
  bool contains(int part) const;
  bool operator==(const StrictPartition& o) const { return parts == o.parts; }
  bool operator!=(const StrictPartition& o) const { return parts != o.parts; }
  // by size, then reverse lex
  bool operator<(const StrictPartition& o) const;
  std::string to_string() const;
};

std::vector<StrictPartition> strict_partitions(int size);
std::vector<StrictPartition> strict_partitions_upto(int maxSize);
// mu_i >= lambda_i for all i and equal lengths
bool componentwise_ge(const StrictPartition& mu, const StrictPartition& lambda);

// s_i acting on shifted diagrams: adds or removes the box on diagonal i
// (column minus row), or fixes the shape.
StrictPartition sp_apply(int i, const StrictPartition& lambda);
// Reduced word of w_lambda, adding the boxes row by row (left letter last).
std::vector<int> w_lambda_word(const StrictPartition& lambda);
// Element of the infinite hyperoctahedral group for a word, truncated to
// m coordinates.  s_0 negates coordinate 1, s_i swaps i and i+1.
SignedPerm infinite_word_perm(const std::vector<int>& word, int m);

// Folding of diagonal indices to the nodes 0..n of C_n^(1).
int fold_residue(int diagonal, int n);

// Ordinary partition (rows) used for symmetric 2n-cores.
struct Partition {
  std::vector<int> rows;
  int size() const;
  Partition conjugate() const;
  bool operator==(const Partition& o) const { return rows == o.rows; }
  bool operator<(const Partition& o) const { return rows < o.rows; }
  std::string to_string() const;
};

bool is_self_conjugate(const Partition& p);
bool has_hook_of_length(const Partition& p, int h);
// Self-conjugate with no hook of length 2n.
bool is_symmetric_core(const Partition& p, int n);
Partition core_apply(int i, const Partition& core, int n);
Partition w_to_core(const AffineWeylElt& w);
AffineWeylElt core_to_w(const Partition& core, int n);
// Boxes on or above the main diagonal.
StrictPartition core_plus(const Partition& core);

struct LambdaW {
  StrictPartition lambda;
  bool trusted;  // only meaningful when l(w) <= 2n
};
LambdaW lambda_w(const AffineWeylElt& w);

// Residues of the addable boxes of the shifted diagram, sorted.
std::vector<int> addable_residues(const StrictPartition& lambda, int n);

}  // namespace affsp
