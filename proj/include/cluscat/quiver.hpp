#pragma once
// Ice quivers as skew-symmetric integer matrices and Fomin-Zelevinsky
// mutation. Vertices 0..n-1 are mutable, n..n+m-1 frozen.

#include <string>
#include <vector>

namespace cluscat {

class IceQuiver {
 public:
  IceQuiver() : n_(0), m_(0) {}
  IceQuiver(int n_mutable, int n_frozen);

  int n() const { return n_; }            // mutable count
  int m() const { return m_; }            // frozen count
  int total() const { return n_ + m_; }
  bool is_frozen(int v) const { return v >= n_; }

  int b(int i, int j) const { return b_[size_t(i) * total() + j]; }
  // Sets b[i][j] and b[j][i] = -b[i][j]; frozen-frozen pairs are zeroed.
  void set_b(int i, int j, int value);

  // FZ matrix mutation at a mutable vertex k; frozen-frozen entries re-zeroed.
  IceQuiver mutated(int k) const;

  bool operator==(const IceQuiver& other) const {
    return n_ == other.n_ && m_ == other.m_ && b_ == other.b_;
  }

  bool has_mutable_loops_or_two_cycles() const;

  // Arrow list (i, j, multiplicity) with b[i][j] > 0, ordered by (i, j).
  std::vector<std::tuple<int, int, int>> arrows() const;

  // Graphviz digraph; frozen vertices drawn as boxes. names must cover all
  // vertices (defaults to x1..xn, p1..pm when empty).
  std::string to_dot(const std::vector<std::string>& names = {}) const;

  // Relabel vertices: vertex v of the result is vertex perm[v] of *this.
  IceQuiver permuted(const std::vector<int>& perm) const;

 private:
  int n_, m_;
  std::vector<int> b_;
};

}  // namespace cluscat
