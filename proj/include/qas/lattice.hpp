#pragma once

#include "qas/normal_form.hpp"

#include <optional>
#include <vector>

namespace qas {

/// Sublattice of Z^ambient, stored by a basis matrix whose rows are
/// independent and in Hermite normal form (the canonical representative:
/// two lattices are equal iff their basis matrices are equal).
struct Lattice {
  std::size_t ambient_rank = 0;
  IntMatrix basis;  // rank x ambient_rank, no zero rows

  std::size_t rank() const { return basis.rows; }
  bool is_trivial() const { return basis.rows == 0; }

  bool operator==(const Lattice& o) const {
    return ambient_rank == o.ambient_rank && basis == o.basis;
  }
};

/// Canonicalizes arbitrary generating rows into a Lattice.
inline Lattice make_lattice(std::size_t ambient, const IntMatrix& generators) {
  if (generators.rows != 0 && generators.cols != ambient)
    throw std::invalid_argument("generator width does not match ambient rank");
  IntMatrix h = hermite_normal_form(generators).H;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < h.rows; ++i) {
    bool z = true;
    for (std::size_t j = 0; j < h.cols; ++j)
      if (h.at(i, j) != 0) z = false;
    if (!z) ++nonzero;
  }
  IntMatrix b(nonzero, ambient);
  for (std::size_t i = 0; i < nonzero; ++i)
    for (std::size_t j = 0; j < ambient; ++j) b.at(i, j) = h.at(i, j);
  return {ambient, b};
}

inline Lattice trivial_lattice(std::size_t ambient) {
  return {ambient, IntMatrix(0, ambient)};
}

inline Lattice full_lattice(std::size_t ambient) {
  return {ambient, IntMatrix::identity(ambient)};
}

/// {v in Z^cols : M v = 0}; rank = cols - rank_Q(M).
inline Lattice integer_kernel(const IntMatrix& m) {
  // Row-reduce the transpose: rows of U mapping to zero rows of H span the
  // kernel, and the span is all of it (U is unimodular), so the kernel
  // lattice comes out saturated.
  HnfResult t = hermite_normal_form(m.transpose());
  std::vector<std::size_t> zero_rows;
  for (std::size_t i = 0; i < t.H.rows; ++i) {
    bool z = true;
    for (std::size_t j = 0; j < t.H.cols; ++j)
      if (t.H.at(i, j) != 0) z = false;
    if (z) zero_rows.push_back(i);
  }
  IntMatrix gens(zero_rows.size(), m.cols);
  for (std::size_t i = 0; i < zero_rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols; ++j) gens.at(i, j) = t.U.at(zero_rows[i], j);
  return make_lattice(m.cols, gens);
}

/// Coordinates of v in the basis of S (c^T basis = v), if v lies in S.
inline std::optional<IntVec> solve_membership(const Lattice& s, const IntVec& v) {
  if (v.size() != s.ambient_rank)
    throw std::invalid_argument("vector not in the ambient space of the lattice");
  IntVec rem = v;
  IntVec coords(s.rank());
  std::size_t col = 0;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    // pivot column of basis row i
    std::size_t p = col;
    while (p < s.ambient_rank && s.basis.at(i, p) == 0) ++p;
    for (; col < p; ++col)
      if (rem[col] != 0) return std::nullopt;
    const Int& pivot = s.basis.at(i, p);
    if (rem[p] % pivot != 0) return std::nullopt;
    coords[i] = rem[p] / pivot;
    for (std::size_t j = p; j < s.ambient_rank; ++j) rem[j] -= coords[i] * s.basis.at(i, j);
    col = p + 1;
  }
  for (std::size_t j = 0; j < s.ambient_rank; ++j)
    if (rem[j] != 0) return std::nullopt;
  return coords;
}

inline bool lattice_contains(const Lattice& s, const IntVec& v) {
  return solve_membership(s, v).has_value();
}

/// {v in S : v_j = 0 for all j in J}; J holds 1-based ambient coordinates.
inline Lattice coordinate_section(const Lattice& s, const std::vector<int>& J) {
  for (int j : J)
    if (j < 1 || static_cast<std::size_t>(j) > s.ambient_rank)
      throw std::invalid_argument("section index out of range");
  // coefficient vectors x with x^T basis vanishing on J
  IntMatrix cols_j(s.rank(), J.size());
  for (std::size_t i = 0; i < s.rank(); ++i)
    for (std::size_t k = 0; k < J.size(); ++k)
      cols_j.at(i, k) = s.basis.at(i, static_cast<std::size_t>(J[k] - 1));
  Lattice coeffs = integer_kernel(cols_j.transpose());
  return make_lattice(s.ambient_rank, coeffs.basis * s.basis);
}

}  // namespace qas
