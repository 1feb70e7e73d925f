#include "cluscat/exact.hpp"

#include <algorithm>

namespace cluscat {

namespace {

// Reduced row echelon form of a list of rows of width w.
// Rows come out sorted by pivot column, pivot entries 1, pivot columns clear
// elsewhere.
void rref_accumulate(std::vector<RatVec>& rows_acc, std::vector<int>& piv_acc,
                     RatVec v, int w) {
  for (size_t r = 0; r < rows_acc.size(); ++r) {
    const Rat c = v[piv_acc[r]];
    if (c != 0)
      for (int j = 0; j < w; ++j)
        if (rows_acc[r][j] != 0) v[j] -= c * rows_acc[r][j];
  }
  int piv = -1;
  for (int j = 0; j < w; ++j)
    if (v[j] != 0) { piv = j; break; }
  if (piv < 0) return;
  const Rat lead = v[piv];
  for (int j = 0; j < w; ++j) v[j] /= lead;
  for (size_t r = 0; r < rows_acc.size(); ++r) {
    const Rat c = rows_acc[r][piv];
    if (c != 0)
      for (int j = 0; j < w; ++j)
        if (v[j] != 0) rows_acc[r][j] -= c * v[j];
  }
  size_t pos = 0;
  while (pos < piv_acc.size() && piv_acc[pos] < piv) ++pos;
  rows_acc.insert(rows_acc.begin() + pos, std::move(v));
  piv_acc.insert(piv_acc.begin() + pos, piv);
}

}  // namespace

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::transpose() const {
  QMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QMat QMat::operator*(const QMat& other) const {
  assert(cols_ == other.rows_);
  QMat r(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        if (other.at(k, j) == 0) continue;
        r.at(i, j) += aik * other.at(k, j);
      }
    }
  return r;
}

RatVec QMat::apply(const RatVec& v) const {
  assert(int(v.size()) == cols_);
  RatVec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
  return r;
}

QMat QMat::operator+(const QMat& other) const {
  assert(rows_ == other.rows_ && cols_ == other.cols_);
  QMat r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) + other.at(i, j);
  return r;
}

bool QMat::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

int QMat::rank() const {
  RowSpan span(cols_);
  for (int i = 0; i < rows_; ++i) {
    RatVec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    span.add(std::move(v));
  }
  return span.dim();
}

QMat QMat::kernel() const {
  std::vector<RatVec> rows_acc;
  std::vector<int> piv_acc;
  for (int i = 0; i < rows_; ++i) {
    RatVec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    rref_accumulate(rows_acc, piv_acc, std::move(v), cols_);
  }
  std::vector<int> is_pivot(cols_, 0);
  for (int p : piv_acc) is_pivot[p] = 1;
  std::vector<int> free_cols;
  for (int j = 0; j < cols_; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  // One kernel vector per free column f: v[f] = 1, v[pivot_r] = -row_r[f].
  QMat k(cols_, int(free_cols.size()));
  for (int idx = 0; idx < int(free_cols.size()); ++idx) {
    const int f = free_cols[idx];
    k.at(f, idx) = 1;
    for (size_t r = 0; r < piv_acc.size(); ++r) k.at(piv_acc[r], idx) = -rows_acc[r][f];
  }
  return k;
}

std::optional<RatVec> QMat::solve(const RatVec& b) const {
  assert(int(b.size()) == rows_);
  std::vector<RatVec> rows_acc;
  std::vector<int> piv_acc;
  const int w = cols_ + 1;
  for (int i = 0; i < rows_; ++i) {
    RatVec v(w);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    v[cols_] = b[i];
    rref_accumulate(rows_acc, piv_acc, std::move(v), w);
  }
  for (size_t r = 0; r < piv_acc.size(); ++r)
    if (piv_acc[r] == cols_) return std::nullopt;  // row (0 ... 0 | 1): inconsistent
  RatVec x(cols_);
  for (size_t r = 0; r < piv_acc.size(); ++r) x[piv_acc[r]] = rows_acc[r][cols_];
  return x;
}

bool RowSpan::add(RatVec v) {
  assert(int(v.size()) == ncols_);
  const size_t before = rows_.size();
  rref_accumulate(rows_, pivots_, std::move(v), ncols_);
  return rows_.size() > before;
}

RatVec RowSpan::reduce(RatVec v) const {
  assert(int(v.size()) == ncols_);
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rat c = v[pivots_[r]];
    if (c != 0)
      for (int j = 0; j < ncols_; ++j)
        if (rows_[r][j] != 0) v[j] -= c * rows_[r][j];
  }
  return v;
}

bool RowSpan::contains(RatVec v) const {
  v = reduce(std::move(v));
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

QuotientSpace::QuotientSpace(int dim_total, const std::vector<RatVec>& relations)
    : span_(dim_total), col_index_(dim_total, -1) {
  for (const RatVec& r : relations) span_.add(r);
  std::vector<int> is_pivot(dim_total, 0);
  for (int p : span_.pivots()) is_pivot[p] = 1;
  for (int j = 0; j < dim_total; ++j)
    if (!is_pivot[j]) {
      col_index_[j] = int(free_cols_.size());
      free_cols_.push_back(j);
    }
}

RatVec QuotientSpace::project(RatVec v) const {
  v = span_.reduce(std::move(v));
  RatVec out(free_cols_.size());
  for (size_t c = 0; c < free_cols_.size(); ++c) out[c] = v[free_cols_[c]];
#ifndef NDEBUG
  // After reduction nothing may remain on pivot columns.
  std::vector<int> is_free(span_.ncols(), 0);
  for (int f : free_cols_) is_free[f] = 1;
  for (int j = 0; j < span_.ncols(); ++j)
    if (!is_free[j]) assert(v[j] == 0);
#endif
  return out;
}

bool SparseRowSpan::add(std::map<int, Rat> row) {
  while (!row.empty()) {
    auto it = row.begin();  // lowest column index
    const int piv = it->first;
    auto found = by_pivot_.find(piv);
    if (found == by_pivot_.end()) {
      const Rat lead = it->second;
      for (auto& [c, val] : row) val /= lead;
      by_pivot_.emplace(piv, std::move(row));
      return true;
    }
    const Rat coef = it->second;
    for (const auto& [c, val] : found->second) {
      auto r = row.find(c);
      if (r == row.end()) {
        row.emplace(c, -coef * val);
      } else {
        r->second -= coef * val;
        if (r->second == 0) row.erase(r);
      }
    }
  }
  return false;
}

}  // namespace cluscat
