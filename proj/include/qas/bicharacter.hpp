#pragma once

#include "qas/index_set.hpp"
#include "qas/lattice.hpp"

#include <string>
#include <vector>

namespace qas {

/// Value of the bicharacter at a pair, written multiplicatively as
/// lambda_1^{e_1} ... lambda_m^{e_m} and stored by its exponent vector.
/// The parameter group is free abelian, so the value is the identity
/// exactly when every exponent vanishes.
struct ExponentValue {
  IntVec e;

  bool is_identity() const {
    for (const auto& x : e)
      if (x != 0) return false;
    return true;
  }
  ExponentValue doubled() const {
    ExponentValue v = *this;
    for (auto& x : v.e) x *= 2;
    return v;
  }
  ExponentValue inverse() const {
    ExponentValue v = *this;
    for (auto& x : v.e) x = -x;
    return v;
  }
  bool operator==(const ExponentValue& o) const { return e == o.e; }
};

/// Alternating bicharacter c on Z^n with values in the free abelian group
/// on lambda_1..lambda_m, encoded by m antisymmetric integer matrices
/// (entry (i,j) of the k-th matrix is the lambda_k-exponent of c(e_i,e_j)).
/// sigma = c^2 is the componentwise double.
struct Bicharacter {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<IntMatrix> L;
  bool uniparameter = false;  // built by from_uniparameter (mu-coefficient 1)

  /// Checks shapes, antisymmetry and zero diagonals; diagnostics name the
  /// offending matrix and entry (all 1-based).
  static Bicharacter validate(std::vector<IntMatrix> mats, std::size_t n) {
    for (std::size_t k = 0; k < mats.size(); ++k) {
      const IntMatrix& M = mats[k];
      if (M.rows != n || M.cols != n)
        throw std::invalid_argument("L[" + std::to_string(k + 1) + "] must be " +
                                    std::to_string(n) + "x" + std::to_string(n));
      for (std::size_t i = 0; i < n; ++i) {
        if (M.at(i, i) != 0)
          throw std::invalid_argument("L[" + std::to_string(k + 1) +
                                      "]: diagonal must vanish at (" +
                                      std::to_string(i + 1) + "," + std::to_string(i + 1) + ")");
        for (std::size_t j = i + 1; j < n; ++j)
          if (M.at(i, j) != -M.at(j, i))
            throw std::invalid_argument("L[" + std::to_string(k + 1) +
                                        "] not antisymmetric at (" + std::to_string(i + 1) +
                                        "," + std::to_string(j + 1) + ")");
      }
    }
    Bicharacter b;
    b.n = n;
    b.m = mats.size();
    b.L = std::move(mats);
    return b;
  }

  /// Single-parameter family q_ij = q^{2 r_ij}: one exponent matrix L_1 = r,
  /// with lambda_1 playing the role of q itself (no gcd extraction).
  static Bicharacter from_uniparameter(const IntMatrix& r) {
    if (r.is_zero()) throw std::invalid_argument("uniparameter: nonzero matrix required");
    Bicharacter b = validate({r}, r.rows);
    b.uniparameter = true;
    return b;
  }
};

struct SigmaRebase {
  Bicharacter b;
  bool rebased;  // true: parameters are square roots of the supplied basis
};

/// Accepts exponent matrices for sigma = c^2 instead of c. Even entries
/// halve; otherwise the parameter basis is re-based to formal square roots
/// (each lambda_k read as rho_k^2) and the matrices are kept verbatim.
inline SigmaRebase bicharacter_from_sigma(std::vector<IntMatrix> mats, std::size_t n) {
  bool all_even = true;
  for (const auto& M : mats)
    for (const auto& x : M.a)
      if (x % 2 != 0) all_even = false;
  if (all_even) {
    for (auto& M : mats)
      for (auto& x : M.a) x /= 2;
    return {Bicharacter::validate(std::move(mats), n), false};
  }
  return {Bicharacter::validate(std::move(mats), n), true};
}

inline ExponentValue eval_c(const Bicharacter& b, const IntVec& s, const IntVec& t) {
  if (s.size() != b.n || t.size() != b.n)
    throw std::invalid_argument("eval_c: vector length must equal n");
  ExponentValue v;
  v.e.resize(b.m);
  for (std::size_t k = 0; k < b.m; ++k) {
    Int acc = 0;
    for (std::size_t i = 0; i < b.n; ++i) {
      if (s[i] == 0) continue;
      for (std::size_t j = 0; j < b.n; ++j) {
        if (t[j] == 0) continue;
        acc += s[i] * b.L[k].at(i, j) * t[j];
      }
    }
    v.e[k] = acc;
  }
  return v;
}

inline ExponentValue eval_sigma(const Bicharacter& b, const IntVec& s, const IntVec& t) {
  return eval_c(b, s, t).doubled();
}

/// S_w: the vectors supported off w that pair trivially (under c, hence
/// under sigma) with everything supported off w. Returned as a sublattice
/// of Z^n with zero coordinates on w.
inline Lattice radical(const Bicharacter& b, const IndexSet& w_in) {
  IndexSet w = normalize_index_set(w_in, b.n);
  IndexSet wbar = complement(w, b.n);
  std::vector<std::size_t> idx;
  for (int j : wbar) idx.push_back(static_cast<std::size_t>(j - 1));

  // stack the restricted matrices; s is in the kernel iff s^T L_k|_wbar = 0
  IntMatrix stacked(0, idx.size());
  for (std::size_t k = 0; k < b.m; ++k)
    stacked = stacked.vstack(b.L[k].select(idx, idx).transpose());
  Lattice ker = integer_kernel(stacked);

  IntMatrix embedded(ker.rank(), b.n);
  for (std::size_t i = 0; i < ker.rank(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      embedded.at(i, idx[j]) = ker.basis.at(i, j);
  return make_lattice(b.n, embedded);
}

}  // namespace qas
