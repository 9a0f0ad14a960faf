#include "affsp/shifted.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace affsp {

StrictPartition::StrictPartition(std::vector<int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0 || (i && parts[i] >= parts[i - 1]))
      throw InvalidArgument("not a strict partition");
  }
}

int StrictPartition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

bool StrictPartition::contains(int part) const {
  return std::find(parts.begin(), parts.end(), part) != parts.end();
}

bool StrictPartition::operator<(const StrictPartition& o) const {
  int a = size(), b = o.size();
  if (a != b) return a < b;
  return parts > o.parts;
}

std::string StrictPartition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ")";
  return os.str();
}

std::vector<StrictPartition> strict_partitions(int size) {
  std::vector<StrictPartition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int maxPart) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, maxPart); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p - 1);
      cur.pop_back();
    }
  };
  rec(size, size);
  return out;
}

std::vector<StrictPartition> strict_partitions_upto(int maxSize) {
  std::vector<StrictPartition> out;
  for (int d = 0; d <= maxSize; ++d) {
    auto v = strict_partitions(d);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

bool componentwise_ge(const StrictPartition& mu, const StrictPartition& lambda) {
  if (mu.length() != lambda.length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu.parts[i] < lambda.parts[i]) return false;
  return true;
}

StrictPartition sp_apply(int i, const StrictPartition& lambda) {
  if (i < 0) throw InvalidArgument("negative diagonal");
  std::vector<int> p = lambda.parts;
  if (i == 0) {
    if (lambda.contains(1)) p.pop_back();
    else p.push_back(1);
  } else {
    bool hi = lambda.contains(i), hj = lambda.contains(i + 1);
    if (hi == hj) return lambda;
    for (auto& x : p) {
      if (x == i) x = i + 1;
      else if (x == i + 1) x = i;
    }
  }
  return StrictPartition(p);
}

std::vector<int> w_lambda_word(const StrictPartition& lambda) {
  // boxes added in reading order: row 1 left to right, then row 2, ...
  std::vector<int> chain;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda.parts[r]; ++c) chain.push_back(c);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

SignedPerm infinite_word_perm(const std::vector<int>& word, int m) {
  SignedPerm u = SignedPerm::identity(m);
  for (int i : word) {
    SignedPerm s = SignedPerm::identity(m);
    if (i == 0) {
      s.sign[0] = -1;
    } else {
      if (i >= m) throw InvalidArgument("word letter exceeds truncation");
      std::swap(s.perm[i - 1], s.perm[i]);
    }
    u = u * s;
  }
  return u;
}

int fold_residue(int diagonal, int n) {
  int m = std::abs(diagonal) % (2 * n);
  if (m == 0) return 0;
  return m <= n ? m : 2 * n - m;
}

int Partition::size() const {
  int s = 0;
  for (int r : rows) s += r;
  return s;
}

Partition Partition::conjugate() const {
  Partition c;
  if (rows.empty()) return c;
  for (int j = 0; j < rows[0]; ++j) {
    int len = 0;
    while (len < int(rows.size()) && rows[len] > j) ++len;
    c.rows.push_back(len);
  }
  return c;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < rows.size(); ++i) os << (i ? "," : "") << rows[i];
  os << ")";
  return os.str();
}

bool is_self_conjugate(const Partition& p) { return p.conjugate() == p; }

bool has_hook_of_length(const Partition& p, int h) {
  Partition c = p.conjugate();
  for (int r = 0; r < int(p.rows.size()); ++r)
    for (int col = 0; col < p.rows[r]; ++col) {
      int hook = (p.rows[r] - col - 1) + (c.rows[col] - r - 1) + 1;
      if (hook == h) return true;
    }
  return false;
}

bool is_symmetric_core(const Partition& p, int n) {
  return is_self_conjugate(p) && !has_hook_of_length(p, 2 * n);
}

Partition core_apply(int i, const Partition& core, int n) {
  const auto& rows = core.rows;
  int len = int(rows.size());
  std::vector<int> add, rem;  // row indices
  for (int r = 0; r <= len; ++r) {
    int cur = r < len ? rows[r] : 0;
    bool addable = r == 0 || rows[r - 1] > cur;
    if (addable && fold_residue(cur - r, n) == i) add.push_back(r);
    if (r < len) {
      bool removable = r + 1 == len || rows[r + 1] < cur;
      if (removable && fold_residue(cur - 1 - r, n) == i) rem.push_back(r);
    }
  }
  if (!add.empty() && !rem.empty())
    throw InvalidArgument("shape is not a core: residue both addable and removable");
  Partition out = core;
  for (int r : add) {
    if (r == int(out.rows.size())) out.rows.push_back(1);
    else out.rows[r] += 1;
  }
  for (int r : rem) out.rows[r] -= 1;
  while (!out.rows.empty() && out.rows.back() == 0) out.rows.pop_back();
  return out;
}

Partition w_to_core(const AffineWeylElt& w) {
  auto word = w.reduced_word();
  Partition c;
  for (auto it = word.rbegin(); it != word.rend(); ++it) c = core_apply(*it, c, w.n());
  return c;
}

AffineWeylElt core_to_w(const Partition& core, int n) {
  std::vector<int> word;
  Partition c = core;
  while (c.size() > 0) {
    bool found = false;
    for (int i = 0; i <= n; ++i) {
      Partition d = core_apply(i, c, n);
      if (d.size() < c.size()) {
        word.push_back(i);
        c = d;
        found = true;
        break;
      }
    }
    if (!found) throw InvalidArgument("not a symmetric core");
  }
  return AffineWeylElt::from_word(word, n);
}

StrictPartition core_plus(const Partition& core) {
  std::vector<int> parts;
  for (int r = 0; r < int(core.rows.size()); ++r)
    if (core.rows[r] - r > 0) parts.push_back(core.rows[r] - r);
  return StrictPartition(parts);
}

LambdaW lambda_w(const AffineWeylElt& w) {
  if (!w.is_grassmannian()) throw NotGrassmannian(w.to_string());
  return {core_plus(w_to_core(w)), w.length() <= 2 * w.n()};
}

std::vector<int> addable_residues(const StrictPartition& lambda, int n) {
  std::vector<int> out;
  if (!lambda.contains(1)) out.push_back(0);
  for (int d : lambda.parts)
    if (!lambda.contains(d + 1)) out.push_back(fold_residue(d, n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace affsp
