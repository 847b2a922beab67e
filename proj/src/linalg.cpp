#include "gentle/linalg.hpp"

#include <algorithm>

namespace gentle {

Mat zero_matrix(int rows, int cols) { return Mat(rows, Vec(cols, Rat(0))); }

Mat identity_matrix(int n) {
  Mat m = zero_matrix(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = Rat(1);
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  int n = static_cast<int>(a.size());
  if (n == 0) return Mat{};  // zero-row result, column count immaterial
  int k = static_cast<int>(a[0].size());
  int m = b.empty() ? 0 : static_cast<int>(b[0].size());
  if (k != 0 && static_cast<int>(b.size()) != k)
    throw error(errc::bad_argument, "matrix dimension mismatch");
  Mat c = zero_matrix(n, m);
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (int j = 0; j < m; ++j)
        if (!b[t][j].is_zero()) c[i][j] = c[i][j] + a[i][t] * b[t][j];
    }
  return c;
}

namespace {

// in-place row echelon; returns pivot columns
std::vector<int> row_echelon(Mat& a) {
  std::vector<int> pivots;
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (!a[i][c].is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[r], a[pr]);
    Rat inv = Rat(1) / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rat f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

int mat_rank(Mat a) { return static_cast<int>(row_echelon(a).size()); }

std::vector<Vec> kernel_basis(const Mat& a, int cols) {
  int rows = static_cast<int>(a.size());
  if (rows > 0 && static_cast<int>(a[0].size()) != cols)
    throw error(errc::bad_argument, "kernel_basis: column mismatch");
  if (rows == 0) {
    std::vector<Vec> basis;
    for (int c = 0; c < cols; ++c) {
      Vec v(cols, Rat(0));
      v[c] = Rat(1);
      basis.push_back(std::move(v));
    }
    return basis;
  }
  Mat m = a;
  std::vector<int> pivots = row_echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v(cols, Rat(0));
    v[c] = Rat(1);
    // back-substitute pivot coordinates
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat solve_columns(const Mat& a, int a_cols, const Mat& b, int b_cols) {
  int rows = static_cast<int>(a.size());
  int acols = a_cols;
  int bcols = b_cols;
  if (rows > 0 && static_cast<int>(a[0].size()) != acols)
    throw error(errc::bad_argument, "solve_columns: declared a_cols mismatch");
  if (!b.empty() && static_cast<int>(b[0].size()) != bcols)
    throw error(errc::bad_argument, "solve_columns: declared b_cols mismatch");
  if (static_cast<int>(b.size()) != rows)
    throw error(errc::bad_argument, "solve_columns: row mismatch");
  // augmented elimination
  Mat aug = zero_matrix(rows, acols + bcols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < acols; ++j) aug[i][j] = a[i][j];
    for (int j = 0; j < bcols; ++j) aug[i][acols + j] = b[i][j];
  }
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < acols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (!aug[i][c].is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(aug[r], aug[pr]);
    Rat inv = Rat(1) / aug[r][c];
    for (int j = c; j < acols + bcols; ++j) aug[r][j] = aug[r][j] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || aug[i][c].is_zero()) continue;
      Rat f = aug[i][c];
      for (int j = c; j < acols + bcols; ++j) aug[i][j] = aug[i][j] - f * aug[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  // consistency: rows below r must have zero rhs
  for (int i = r; i < rows; ++i)
    for (int j = 0; j < bcols; ++j)
      if (!aug[i][acols + j].is_zero())
        throw error(errc::bad_argument, "solve_columns: inconsistent system");
  Mat x = zero_matrix(acols, bcols);
  for (size_t k = 0; k < pivots.size(); ++k)
    for (int j = 0; j < bcols; ++j) x[pivots[k]][j] = aug[k][acols + j];
  return x;
}

void ColumnSpace::add(Vec v) {
  if (static_cast<int>(v.size()) != ambient_)
    throw error(errc::bad_argument, "ColumnSpace::add: wrong length");
  v = reduce(std::move(v));
  int lead = -1;
  for (int i = 0; i < ambient_; ++i)
    if (!v[i].is_zero()) {
      lead = i;
      break;
    }
  if (lead < 0) return;
  Rat inv = Rat(1) / v[lead];
  for (Rat& x : v) x = x * inv;
  // keep earlier vectors reduced against the new pivot
  for (size_t k = 0; k < basis_.size(); ++k) {
    Rat f = basis_[k][lead];
    if (f.is_zero()) continue;
    for (int i = 0; i < ambient_; ++i) basis_[k][i] = basis_[k][i] - f * v[i];
  }
  // insert keeping pivots sorted
  auto it = std::lower_bound(pivot_.begin(), pivot_.end(), lead);
  size_t pos = static_cast<size_t>(it - pivot_.begin());
  pivot_.insert(it, lead);
  basis_.insert(basis_.begin() + pos, std::move(v));
}

Vec ColumnSpace::reduce(Vec v) const {
  for (size_t k = 0; k < basis_.size(); ++k) {
    Rat f = v[pivot_[k]];
    if (f.is_zero()) continue;
    for (int i = 0; i < ambient_; ++i) v[i] = v[i] - f * basis_[k][i];
  }
  return v;
}

bool ColumnSpace::contains(const Vec& v) const {
  Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rat& x) { return x.is_zero(); });
}

std::vector<int> ColumnSpace::free_rows() const {
  std::vector<int> rows;
  size_t k = 0;
  for (int i = 0; i < ambient_; ++i) {
    if (k < pivot_.size() && pivot_[k] == i) {
      ++k;
      continue;
    }
    rows.push_back(i);
  }
  return rows;
}

Vec ColumnSpace::quotient_coords(const Vec& v) const {
  Vec r = reduce(v);
  std::vector<int> rows = free_rows();
  Vec out(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) out[i] = r[rows[i]];
  return out;
}

} // namespace gentle
