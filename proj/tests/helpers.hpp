#pragma once

#include "qas/bicharacter.hpp"
#include "qas/rng.hpp"

#include <cstdint>
#include <vector>

namespace qas::test {

inline IntMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols,
                               std::int64_t lo, std::int64_t hi) {
  IntMatrix m(rows, cols);
  for (auto& x : m.a) x = rng.range(lo, hi);
  return m;
}

inline IntMatrix random_antisymmetric(SplitMix64& rng, std::size_t n, std::int64_t bound) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Int v = rng.range(-bound, bound);
      m.at(i, j) = v;
      m.at(j, i) = -v;
    }
  return m;
}

inline Bicharacter random_bicharacter(SplitMix64& rng, std::size_t n, std::size_t m,
                                      std::int64_t bound) {
  std::vector<IntMatrix> L;
  for (std::size_t k = 0; k < m; ++k) L.push_back(random_antisymmetric(rng, n, bound));
  return Bicharacter::validate(std::move(L), n);
}

/// Rank over Q by plain fraction elimination; independent of the integer
/// normal-form code paths.
inline std::size_t rational_rank(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) a[i][j] = Rational(m.at(i, j));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t p = rank;
    while (p < m.rows && a[p][c] == 0) ++p;
    if (p == m.rows) continue;
    std::swap(a[rank], a[p]);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == rank || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < m.cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// All v with entries in [-bound, bound] and M v = 0, by exhaustion.
inline std::vector<IntVec> brute_force_kernel_vectors(const IntMatrix& m, std::int64_t bound) {
  std::vector<IntVec> out;
  std::vector<std::int64_t> v(m.cols, -bound);
  if (m.cols == 0) return out;
  for (;;) {
    IntVec iv(m.cols);
    for (std::size_t i = 0; i < m.cols; ++i) iv[i] = v[i];
    bool zero = true;
    for (std::size_t i = 0; i < m.rows && zero; ++i) {
      Int acc = 0;
      for (std::size_t j = 0; j < m.cols; ++j) acc += m.at(i, j) * iv[j];
      if (acc != 0) zero = false;
    }
    if (zero) out.push_back(iv);
    std::size_t i = 0;
    while (i < m.cols && v[i] == bound) v[i++] = -bound;
    if (i == m.cols) break;
    ++v[i];
  }
  return out;
}

/// The worked three-generator example: c(e1,e2) = lambda1, c(e1,e3) = lambda2,
/// c(e2,e3) = 1.
inline Bicharacter example3_bicharacter() {
  IntMatrix L1 = IntMatrix::from_rows({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
  IntMatrix L2 = IntMatrix::from_rows({{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}});
  return Bicharacter::validate({L1, L2}, 3);
}

}  // namespace qas::test
