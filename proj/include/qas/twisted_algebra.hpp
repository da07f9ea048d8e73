#pragma once

#include "qas/bicharacter.hpp"
#include "qas/sparse_poly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qas {

/// Exponent of a monomial x^s, s in the nonnegative cone of Z^n.
using Monomial = std::vector<std::int64_t>;

inline IntVec monomial_to_intvec(const Monomial& s) {
  IntVec v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) v[i] = s[i];
  return v;
}

/// Element of the twisted monoid algebra on the monomial basis {x^s}:
/// a finite sum of monomials with coefficients in the Laurent ring of the
/// parameter group (quantum side) or the polynomial ring in the mu symbols
/// (Poisson side). Which reading applies is contextual; the container is
/// the same.
struct AlgebraElement {
  std::size_t n = 0;       // number of generators
  std::size_t m = 0;       // coefficient variables
  std::map<Monomial, SparsePoly> terms;

  static AlgebraElement zero(std::size_t n, std::size_t m) { return {n, m, {}}; }
  static AlgebraElement one(std::size_t n, std::size_t m) {
    return monomial(n, m, Monomial(n, 0));
  }
  static AlgebraElement monomial(std::size_t n, std::size_t m, Monomial s,
                                 SparsePoly coeff) {
    for (auto e : s)
      if (e < 0) throw std::invalid_argument("monomial exponents must be nonnegative");
    if (coeff.nvars() != m) throw std::invalid_argument("coefficient variable mismatch");
    AlgebraElement a{n, m, {}};
    a.add(std::move(s), std::move(coeff));
    return a;
  }
  static AlgebraElement monomial(std::size_t n, std::size_t m, Monomial s) {
    return monomial(n, m, std::move(s), SparsePoly::constant(m, 1));
  }
  static AlgebraElement generator(std::size_t n, std::size_t m, std::size_t i) {
    Monomial s(n, 0);
    s.at(i - 1) = 1;  // generators are 1-based
    return monomial(n, m, std::move(s));
  }

  bool is_zero() const { return terms.empty(); }

  void add(Monomial s, SparsePoly c) {
    if (c.is_zero()) return;
    auto it = terms.find(s);
    if (it == terms.end()) {
      terms.emplace(std::move(s), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    for (const auto& [s, c] : o.terms) add(s, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    for (const auto& [s, c] : o.terms) add(s, -c);
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

  AlgebraElement scaled(const SparsePoly& c) const {
    AlgebraElement out{n, m, {}};
    for (const auto& [s, v] : terms) out.add(s, v * c);
    return out;
  }

  bool operator==(const AlgebraElement& o) const {
    return n == o.n && m == o.m && terms == o.terms;
  }

  std::string to_string(const std::vector<std::string>& coeff_names) const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : terms) {
      if (!out.empty()) out += " + ";
      std::string mono;
      for (std::size_t i = 0; i < n; ++i) {
        if (s[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(i + 1);
        if (s[i] != 1) mono += "^" + std::to_string(s[i]);
      }
      std::string cs = c.to_string(coeff_names);
      if (mono.empty()) {
        out += cs;
      } else if (cs == "1") {
        out += mono;
      } else if (c.term_count() == 1 && cs.find(' ') == std::string::npos) {
        out += cs + "*" + mono;
      } else {
        out += "(" + cs + ")*" + mono;
      }
    }
    return out;
  }
};

namespace detail {
inline void check_element(const Bicharacter& b, const AlgebraElement& u) {
  if (u.n != b.n || u.m != b.m)
    throw std::invalid_argument("algebra element does not match the bicharacter dimensions");
}
}  // namespace detail

/// Coefficient factor c(s,t) as a Laurent monomial in the parameters.
inline SparsePoly twist_factor(const Bicharacter& b, const Monomial& s, const Monomial& t) {
  ExponentValue e = eval_c(b, monomial_to_intvec(s), monomial_to_intvec(t));
  SparsePoly::Key key(b.m);
  for (std::size_t k = 0; k < b.m; ++k) key[k] = to_int64(e.e[k]);
  return SparsePoly::monomial(b.m, std::move(key), Rational(1));
}

/// x^s * x^t = c(s,t) x^{s+t}, extended bilinearly.
inline AlgebraElement multiply(const Bicharacter& b, const AlgebraElement& u,
                               const AlgebraElement& v) {
  detail::check_element(b, u);
  detail::check_element(b, v);
  AlgebraElement out = AlgebraElement::zero(u.n, u.m);
  for (const auto& [s, cs] : u.terms) {
    for (const auto& [t, ct] : v.terms) {
      Monomial st(u.n);
      for (std::size_t i = 0; i < u.n; ++i) st[i] = s[i] + t[i];
      out.add(std::move(st), cs * ct * twist_factor(b, s, t));
    }
  }
  return out;
}

/// u*v - v*u.
inline AlgebraElement commutator(const Bicharacter& b, const AlgebraElement& u,
                                 const AlgebraElement& v) {
  return multiply(b, u, v) - multiply(b, v, u);
}

/// Plain monoid-algebra product (the commutative, Poisson-side reading).
inline AlgebraElement multiply_commutative(const AlgebraElement& u, const AlgebraElement& v) {
  if (u.n != v.n || u.m != v.m) throw std::invalid_argument("element dimension mismatch");
  AlgebraElement out = AlgebraElement::zero(u.n, u.m);
  for (const auto& [s, cs] : u.terms) {
    for (const auto& [t, ct] : v.terms) {
      Monomial st(u.n);
      for (std::size_t i = 0; i < u.n; ++i) st[i] = s[i] + t[i];
      out.add(std::move(st), cs * ct);
    }
  }
  return out;
}

}  // namespace qas
