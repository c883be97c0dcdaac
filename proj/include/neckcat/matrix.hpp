#pragma once

// Dense exact matrices with deterministic Gaussian elimination.  Row-major;
// a matrix represents a linear map K^cols -> K^rows acting on column
// vectors (entry (r,c) is the coefficient of source basis vector c in the
// image expressed over target basis vector r).

#include <functional>

#include "field.hpp"

namespace neckcat {

template <class K>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<K> a;

  Mat() = default;
  Mat(int r, int c, const FieldOf<K>& f) : rows(r), cols(c), a(size_t(r) * size_t(c), f.zero()) {}
  K& at(int r, int c) { return a[size_t(r) * size_t(cols) + size_t(c)]; }
  const K& at(int r, int c) const { return a[size_t(r) * size_t(cols) + size_t(c)]; }

  static Mat identity(int n, const FieldOf<K>& f) {
    Mat m(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }
  bool is_zero() const {
    for (auto& x : a)
      if (!x.is_zero()) return false;
    return true;
  }
  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  std::vector<K> apply(const std::vector<K>& x, const FieldOf<K>& f) const {
    if (int(x.size()) != cols) throw invalid_input("vector size mismatch");
    std::vector<K> y(size_t(rows), f.zero());
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (!at(r, c).is_zero()) y[size_t(r)] = y[size_t(r)] + at(r, c) * x[size_t(c)];
    return y;
  }
};

template <class K>
Mat<K> mat_mul(const Mat<K>& a, const Mat<K>& b, const FieldOf<K>& f) {  // a . b
  if (a.cols != b.rows) throw invalid_input("matrix size mismatch");
  Mat<K> c(a.rows, b.cols, f);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const K& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols; ++j)
        if (!b.at(k, j).is_zero()) c.at(i, j) = c.at(i, j) + aik * b.at(k, j);
    }
  return c;
}

template <class K>
Mat<K> mat_add(const Mat<K>& a, const Mat<K>& b, const FieldOf<K>& f) {
  if (a.rows != b.rows || a.cols != b.cols) throw invalid_input("matrix size mismatch");
  Mat<K> c(a.rows, a.cols, f);
  for (size_t i = 0; i < a.a.size(); ++i) c.a[i] = a.a[i] + b.a[i];
  return c;
}

template <class K>
Mat<K> mat_neg(const Mat<K>& a) {
  Mat<K> c = a;
  for (auto& x : c.a) x = -x;
  return c;
}

template <class K>
Mat<K> mat_hstack(const Mat<K>& a, const Mat<K>& b, const FieldOf<K>& f) {
  if (a.rows != b.rows) throw invalid_input("hstack rows mismatch");
  Mat<K> c(a.rows, a.cols + b.cols, f);
  for (int r = 0; r < a.rows; ++r) {
    for (int j = 0; j < a.cols; ++j) c.at(r, j) = a.at(r, j);
    for (int j = 0; j < b.cols; ++j) c.at(r, a.cols + j) = b.at(r, j);
  }
  return c;
}

template <class K>
Mat<K> mat_vstack(const Mat<K>& a, const Mat<K>& b, const FieldOf<K>& f) {
  if (a.cols != b.cols) throw invalid_input("vstack cols mismatch");
  Mat<K> c(a.rows + b.rows, a.cols, f);
  for (int r = 0; r < a.rows; ++r)
    for (int j = 0; j < a.cols; ++j) c.at(r, j) = a.at(r, j);
  for (int r = 0; r < b.rows; ++r)
    for (int j = 0; j < a.cols; ++j) c.at(a.rows + r, j) = b.at(r, j);
  return c;
}

// Reduced row echelon form in place; returns pivot columns.
template <class K>
std::vector<int> rref(Mat<K>& m, const FieldOf<K>& f) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pr = -1;
    for (int i = r; i < m.rows; ++i)
      if (!m.at(i, c).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
    K inv = m.at(r, c).inv();
    for (int j = c; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      K factor = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - factor * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
int rank(Mat<K> m, const FieldOf<K>& f) {
  return int(rref(m, f).size());
}

// Basis of the null space as columns.
template <class K>
Mat<K> nullspace(Mat<K> m, const FieldOf<K>& f) {
  auto pivots = rref(m, f);
  std::vector<bool> is_pivot(size_t(m.cols), false);
  for (int c : pivots) is_pivot[size_t(c)] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols; ++c)
    if (!is_pivot[size_t(c)]) free_cols.push_back(c);
  Mat<K> basis(m.cols, int(free_cols.size()), f);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis.at(fc, int(k)) = f.one();
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      basis.at(pivots[pi], int(k)) = -m.at(int(pi), fc);
  }
  return basis;
}

// One solution of A x = b, if consistent.
template <class K>
std::optional<std::vector<K>> solve(const Mat<K>& A, const std::vector<K>& b, const FieldOf<K>& f) {
  Mat<K> aug(A.rows, A.cols + 1, f);
  for (int r = 0; r < A.rows; ++r) {
    for (int c = 0; c < A.cols; ++c) aug.at(r, c) = A.at(r, c);
    aug.at(r, A.cols) = b[size_t(r)];
  }
  auto pivots = rref(aug, f);
  if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;
  std::vector<K> x(size_t(A.cols), f.zero());
  for (size_t pi = 0; pi < pivots.size(); ++pi) x[size_t(pivots[pi])] = aug.at(int(pi), A.cols);
  return x;
}

// Columns of m that form a basis of its column space (deterministic).
template <class K>
std::vector<int> column_basis(const Mat<K>& m, const FieldOf<K>& f) {
  Mat<K> c = m;
  return rref(c, f);
}

// Express v in the column space of basis columns B; nullopt if outside.
template <class K>
std::optional<std::vector<K>> coordinates_in(const Mat<K>& B, const std::vector<K>& v,
                                             const FieldOf<K>& f) {
  return solve(B, v, f);
}

}  // namespace neckcat
