#pragma once

#include "qas/numeric.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qas {

/// Dense integer matrix with arbitrary-precision entries, row-major.
/// Zero-row or zero-column shapes are allowed (empty products, kernels of
/// empty stacks and so on fall out naturally).
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  IntMatrix(std::size_t r, std::size_t c, std::vector<Int> entries)
      : rows(r), cols(c), a(std::move(entries)) {
    if (a.size() != rows * cols) throw std::invalid_argument("entry count mismatch");
  }

  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rws) {
    std::size_t r = rws.size();
    std::size_t c = r ? rws[0].size() : 0;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rws[i].size() != c) throw std::invalid_argument("ragged rows");
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rws[i][j];
    }
    return m;
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix zero(std::size_t r, std::size_t c) { return IntMatrix(r, c); }

  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  IntVec row(std::size_t i) const {
    return IntVec(a.begin() + static_cast<std::ptrdiff_t>(i * cols),
                  a.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
  }

  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  bool is_zero() const {
    for (const auto& x : a)
      if (x != 0) return false;
    return true;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  /// Rows stacked on top of other's rows; column counts must agree.
  IntMatrix vstack(const IntMatrix& other) const {
    if (cols != other.cols && rows != 0 && other.rows != 0)
      throw std::invalid_argument("vstack column mismatch");
    IntMatrix m(rows + other.rows, rows ? cols : other.cols);
    std::size_t k = 0;
    for (const auto& x : a) m.a[k++] = x;
    for (const auto& x : other.a) m.a[k++] = x;
    return m;
  }

  /// Submatrix picking the given row/column indices (0-based, in order).
  IntMatrix select(const std::vector<std::size_t>& ri,
                   const std::vector<std::size_t>& ci) const {
    IntMatrix m(ri.size(), ci.size());
    for (std::size_t i = 0; i < ri.size(); ++i)
      for (std::size_t j = 0; j < ci.size(); ++j) m.at(i, j) = at(ri[i], ci[j]);
    return m;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows; ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols; ++j) {
        if (j) s += ", ";
        s += at(i, j).str();
      }
      s += "]";
    }
    return s + "]";
  }
};

inline IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix m(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const Int& xik = x.at(i, k);
      if (xik == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) m.at(i, j) += xik * y.at(k, j);
    }
  return m;
}

inline IntVec operator*(const IntMatrix& m, const IntVec& v) {
  if (m.cols != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  IntVec out(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

/// Row vector times matrix.
inline IntVec operator*(const IntVec& v, const IntMatrix& m) {
  if (m.rows != v.size()) throw std::invalid_argument("vector-matrix shape mismatch");
  IntVec out(m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols; ++j) out[j] += v[i] * m.at(i, j);
  }
  return out;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int det(const IntMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  std::size_t n = m.rows;
  if (n == 0) return 1;
  IntMatrix w = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && w.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

}  // namespace qas
