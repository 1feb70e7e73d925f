#pragma once
// Exact rational linear algebra on top of GMP. Everything in the verification
// path runs through these types; no floating point anywhere.

#include <gmpxx.h>

#include <cassert>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cluscat {

using Int = mpz_class;
using Rat = mpq_class;

using RatVec = std::vector<Rat>;

// Dense matrix over Q, row-major.
class QMat {
 public:
  QMat() : rows_(0), cols_(0) {}
  QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols)) {
    assert(rows >= 0 && cols >= 0);
  }
  static QMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) {
    assert(0 <= i && i < rows_ && 0 <= j && j < cols_);
    return a_[size_t(i) * cols_ + j];
  }
  const Rat& at(int i, int j) const {
    assert(0 <= i && i < rows_ && 0 <= j && j < cols_);
    return a_[size_t(i) * cols_ + j];
  }

  QMat transpose() const;
  QMat operator*(const QMat& other) const;
  RatVec apply(const RatVec& v) const;  // matrix * column vector
  QMat operator+(const QMat& other) const;
  bool operator==(const QMat& other) const { return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_; }
  bool is_zero() const;

  int rank() const;
  // Basis of {v : A v = 0}, returned as the columns of the result.
  QMat kernel() const;
  // One solution of A x = b, if any.
  std::optional<RatVec> solve(const RatVec& b) const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

// Incrementally maintained row space in reduced row echelon form.
// Supports rank queries and exact reduction of vectors modulo the span,
// which is what quotient-space bookkeeping needs.
class RowSpan {
 public:
  explicit RowSpan(int ncols) : ncols_(ncols) {}

  // Reduces v against the current rows; if a nonzero residue remains it is
  // normalized and inserted (keeping full rref). Returns true if dim grew.
  bool add(RatVec v);
  // Residue of v modulo the span.
  RatVec reduce(RatVec v) const;
  int dim() const { return int(rows_.size()); }
  int ncols() const { return ncols_; }
  bool contains(RatVec v) const;
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  int ncols_;
  std::vector<RatVec> rows_;   // rref rows, sorted by pivot column
  std::vector<int> pivots_;    // pivot column of each row
};

// Quotient of k^dim_total by the span of a set of vectors. The quotient basis
// is the set of non-pivot coordinates; project() returns coordinates in that
// basis.  project(e_j) = e_{position of j} for every free column j, so each
// quotient basis vector has the canonical lift e_{free_col}.
class QuotientSpace {
 public:
  QuotientSpace(int dim_total, const std::vector<RatVec>& relations);

  int dim() const { return int(free_cols_.size()); }
  int total_dim() const { return span_.ncols(); }
  const std::vector<int>& free_cols() const { return free_cols_; }
  // Index of a free column in the quotient basis, -1 for pivot columns.
  int quot_index(int col) const { return col_index_[col]; }
  RatVec project(RatVec v) const;

 private:
  RowSpan span_;
  std::vector<int> free_cols_;
  std::vector<int> col_index_;  // column -> index in free_cols_, or -1
};

// Rank of a sparse matrix given as rows {col -> value}; used where dense
// storage would be wasteful (path-relation matrices).
class SparseRowSpan {
 public:
  // Returns true if the row increased the dimension.
  bool add(std::map<int, Rat> row);
  int dim() const { return int(by_pivot_.size()); }
  std::vector<int> pivots() const {
    std::vector<int> p;
    p.reserve(by_pivot_.size());
    for (const auto& [c, row] : by_pivot_) p.push_back(c);
    return p;
  }

 private:
  std::map<int, std::map<int, Rat>> by_pivot_;
};

}  // namespace cluscat
