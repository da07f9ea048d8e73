#pragma once

#include "qas/int_matrix.hpp"

#include <cstdlib>
#include <vector>

namespace qas {

namespace detail {

/// floor division, denominator must be nonzero
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) --q;
  return q;
}

inline void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < m.cols; ++j) m.at(dst, j) += f * m.at(src, j);
}

inline void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

inline void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = -m.at(i, j);
}

inline void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < m.rows; ++i) m.at(i, dst) += f * m.at(i, src);
}

inline void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

inline void negate_col(IntMatrix& m, std::size_t j) {
  for (std::size_t i = 0; i < m.rows; ++i) m.at(i, j) = -m.at(i, j);
}

}  // namespace detail

struct HnfResult {
  IntMatrix H;  // row-style Hermite normal form
  IntMatrix U;  // unimodular, U*M = H
};

/// Row-style HNF: pivots positive, entries above each pivot reduced into
/// [0, pivot), pivot columns strictly increasing, zero rows at the bottom.
/// This is the canonical representative used for lattice equality.
inline HnfResult hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows);
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols && r < h.rows; ++c) {
    // Euclid on the column entries at rows >= r until one survivor remains.
    for (;;) {
      std::size_t best = h.rows;
      for (std::size_t i = r; i < h.rows; ++i) {
        if (h.at(i, c) == 0) continue;
        if (best == h.rows || abs(h.at(i, c)) < abs(h.at(best, c))) best = i;
      }
      if (best == h.rows) break;  // column clear below r
      detail::swap_rows(h, r, best);
      detail::swap_rows(u, r, best);
      bool reduced_all = true;
      for (std::size_t i = r + 1; i < h.rows; ++i) {
        if (h.at(i, c) == 0) continue;
        Int q = h.at(i, c) / h.at(r, c);  // truncating: |remainder| < |pivot|
        detail::add_row_multiple(h, i, r, -q);
        detail::add_row_multiple(u, i, r, -q);
        if (h.at(i, c) != 0) reduced_all = false;
      }
      if (reduced_all) {
        if (h.at(r, c) < 0) {
          detail::negate_row(h, r);
          detail::negate_row(u, r);
        }
        for (std::size_t i = 0; i < r; ++i) {
          Int q = detail::floor_div(h.at(i, c), h.at(r, c));
          detail::add_row_multiple(h, i, r, -q);
          detail::add_row_multiple(u, i, r, -q);
        }
        ++r;
        break;
      }
    }
  }
  return {h, u};
}

/// True iff h is in the row-style HNF produced by hermite_normal_form.
inline bool is_hnf(const IntMatrix& h) {
  std::size_t prev_pivot = 0;
  bool seen_zero_row = false;
  bool first = true;
  for (std::size_t i = 0; i < h.rows; ++i) {
    std::size_t p = h.cols;
    for (std::size_t j = 0; j < h.cols; ++j)
      if (h.at(i, j) != 0) {
        p = j;
        break;
      }
    if (p == h.cols) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (!first && p <= prev_pivot) return false;
    if (h.at(i, p) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (h.at(k, p) < 0 || h.at(k, p) >= h.at(i, p)) return false;
    prev_pivot = p;
    first = false;
  }
  return true;
}

struct SnfResult {
  IntMatrix D;  // diagonal, d1 | d2 | ..., all >= 0
  IntMatrix U;  // unimodular, rows x rows
  IntMatrix V;  // unimodular, cols x cols; U*M*V = D
};

inline SnfResult smith_normal_form(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(m.rows);
  IntMatrix v = IntMatrix::identity(m.cols);
  std::size_t nmin = d.rows < d.cols ? d.rows : d.cols;
  for (std::size_t t = 0; t < nmin; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block into position (t,t)
      std::size_t bi = d.rows, bj = d.cols;
      for (std::size_t i = t; i < d.rows; ++i)
        for (std::size_t j = t; j < d.cols; ++j) {
          if (d.at(i, j) == 0) continue;
          if (bi == d.rows || abs(d.at(i, j)) < abs(d.at(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == d.rows) { d.at(t, t) = 0; goto next_t; }  // trailing block zero
      detail::swap_rows(d, t, bi);
      detail::swap_rows(u, t, bi);
      detail::swap_cols(d, t, bj);
      detail::swap_cols(v, t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);
        detail::add_row_multiple(d, i, t, -q);
        detail::add_row_multiple(u, i, t, -q);
        if (d.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        detail::add_col_multiple(d, j, t, -q);
        detail::add_col_multiple(v, j, t, -q);
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: pull any non-multiple into row t and restart
      bool divides = true;
      for (std::size_t i = t + 1; i < d.rows && divides; ++i)
        for (std::size_t j = t + 1; j < d.cols && divides; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            detail::add_row_multiple(d, t, i, 1);
            detail::add_row_multiple(u, t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (d.at(t, t) < 0) {
      detail::negate_row(d, t);
      detail::negate_row(u, t);
    }
  next_t:;
  }
  // everything off the diagonal is zero by construction
  return {d, u, v};
}

}  // namespace qas
