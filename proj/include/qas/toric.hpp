#pragma once

#include "qas/limit.hpp"
#include "qas/twisted_algebra.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace qas {

/// Grading of the n generators by G = Z^d together with an alternating
/// bicharacter on G (exponent form over the same lambda basis). Column i of
/// the degree matrix is the degree of the i-th generator.
struct GradingData {
  std::size_t d = 0;      // rank of the grading group
  IntMatrix degrees;      // d x n
  Bicharacter c_g;        // bicharacter on Z^d

  static GradingData make(IntMatrix degrees, Bicharacter c_g) {
    if (c_g.n != degrees.rows)
      throw std::invalid_argument("grading bicharacter rank must match the degree matrix");
    GradingData g;
    g.d = degrees.rows;
    g.degrees = std::move(degrees);
    g.c_g = std::move(c_g);
    return g;
  }

  std::size_t n() const { return degrees.cols; }
  std::size_t m() const { return c_g.m; }

  IntVec degree_of_generator(std::size_t i) const {  // 1-based
    IntVec delta(d);
    for (std::size_t r = 0; r < d; ++r) delta[r] = degrees.at(r, i - 1);
    return delta;
  }
};

/// Pullback along the degree map: exponent matrices D^T L_k D, an
/// alternating bicharacter on Z^n.
inline Bicharacter pullback(const GradingData& g) {
  IntMatrix dt = g.degrees.transpose();
  std::vector<IntMatrix> L;
  for (std::size_t k = 0; k < g.m(); ++k) L.push_back(dt * g.c_g.L[k] * g.degrees);
  return Bicharacter::validate(std::move(L), g.n());
}

/// Degree vector in Z^d (entries may be negative in general).
using Degree = std::vector<std::int64_t>;

inline IntVec degree_to_intvec(const Degree& a) {
  IntVec v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i];
  return v;
}

/// Element of the G-graded algebra modeled as a coefficient per degree
/// (the monoid-algebra picture of the graded coordinate ring and its
/// cocycle twist). Coefficients are Laurent in the parameters on the
/// twisted side or polynomial in the mu symbols on the Poisson side.
struct GradedElement {
  std::size_t d = 0;
  std::size_t m = 0;
  std::map<Degree, SparsePoly> terms;

  static GradedElement zero(std::size_t d, std::size_t m) { return {d, m, {}}; }
  static GradedElement homogeneous(std::size_t d, std::size_t m, Degree deg,
                                   SparsePoly coeff) {
    if (coeff.nvars() != m) throw std::invalid_argument("coefficient variable mismatch");
    GradedElement e{d, m, {}};
    e.add(std::move(deg), std::move(coeff));
    return e;
  }
  static GradedElement homogeneous(std::size_t d, std::size_t m, Degree deg) {
    return homogeneous(d, m, std::move(deg), SparsePoly::constant(m, 1));
  }
  static GradedElement unit(std::size_t d, std::size_t m) {
    return homogeneous(d, m, Degree(d, 0));
  }

  bool is_zero() const { return terms.empty(); }

  void add(Degree deg, SparsePoly c) {
    if (deg.size() != d) throw std::invalid_argument("degree width mismatch");
    if (c.is_zero()) return;
    auto it = terms.find(deg);
    if (it == terms.end()) {
      terms.emplace(std::move(deg), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  GradedElement& operator+=(const GradedElement& o) {
    for (const auto& [a, c] : o.terms) add(a, c);
    return *this;
  }
  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  GradedElement operator-() const {
    GradedElement out{d, m, {}};
    for (const auto& [a, c] : terms) out.terms.emplace(a, -c);
    return out;
  }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) {
    return a + (-b);
  }

  bool operator==(const GradedElement& o) const {
    return d == o.d && m == o.m && terms == o.terms;
  }
};

namespace detail {
inline void check_graded(const GradingData& g, const GradedElement& u) {
  if (u.d != g.d || u.m != g.m())
    throw std::invalid_argument("graded element does not match the grading data");
}
}  // namespace detail

/// Twisted product: homogeneous pieces multiply with the extra factor
/// c(alpha, beta), degrees add.
inline GradedElement twisted_multiply(const GradingData& g, const GradedElement& u,
                                      const GradedElement& v) {
  detail::check_graded(g, u);
  detail::check_graded(g, v);
  GradedElement out = GradedElement::zero(u.d, u.m);
  for (const auto& [a, ca] : u.terms) {
    for (const auto& [bdeg, cb] : v.terms) {
      ExponentValue e = eval_c(g.c_g, degree_to_intvec(a), degree_to_intvec(bdeg));
      SparsePoly::Key key(g.m());
      for (std::size_t k = 0; k < g.m(); ++k) key[k] = to_int64(e.e[k]);
      SparsePoly factor = SparsePoly::monomial(g.m(), std::move(key), Rational(1));
      Degree ab(u.d);
      for (std::size_t i = 0; i < u.d; ++i) ab[i] = a[i] + bdeg[i];
      out.add(std::move(ab), ca * cb * factor);
    }
  }
  return out;
}

/// Induced bracket on the semiclassical side: homogeneous pieces bracket to
/// (sum_k 2 l_k(alpha,beta) mu_k) times their product; coefficients are
/// polynomials in the mu symbols.
inline GradedElement graded_poisson_bracket(const GradingData& g, const GradedElement& u,
                                            const GradedElement& v) {
  detail::check_graded(g, u);
  detail::check_graded(g, v);
  GradedElement out = GradedElement::zero(u.d, u.m);
  for (const auto& [a, ca] : u.terms) {
    for (const auto& [bdeg, cb] : v.terms) {
      ExponentValue e = eval_c(g.c_g, degree_to_intvec(a), degree_to_intvec(bdeg));
      SparsePoly factor(g.m());
      for (std::size_t k = 0; k < g.m(); ++k)
        factor += SparsePoly::monomial_term(g.m(), k, 1, Rational(2 * e.e[k]));
      if (factor.is_zero()) continue;
      Degree ab(u.d);
      for (std::size_t i = 0; i < u.d; ++i) ab[i] = a[i] + bdeg[i];
      out.add(std::move(ab), ca * cb * factor);
    }
  }
  return out;
}

struct DiagramCheck {
  bool pass = false;
  Degree degree;        // common degree of both composites
  SparsePoly twisted;   // coefficient from the twisted route
  SparsePoly straight;  // coefficient from the untwisted route (always 1)
};

/// Commuting-square check on the monomial x^s: pushing x^s down to the
/// twisted algebra (via generator images and the cocycle bookkeeping
/// factor) and across the basis-fixing map must agree with mapping across
/// first and then down by the plain graded product. The cocycle factor
/// produced by the stepwise twisted products must cancel the pulled-back
/// prefactor exactly.
inline DiagramCheck diagram_commute_check(const GradingData& g, const Monomial& s) {
  if (s.size() != g.n()) throw std::invalid_argument("monomial width must equal n");
  for (auto v : s)
    if (v < 0) throw std::invalid_argument("monomial exponents must be nonnegative");

  // x^s = (prod_{i<j} c-hat(s_i e_i, s_j e_j))^{-1} x_1^{s_1} * ... * x_n^{s_n}
  Bicharacter chat = pullback(g);
  IntVec prefactor_exp(g.m());
  for (std::size_t i = 0; i < g.n(); ++i)
    for (std::size_t j = i + 1; j < g.n(); ++j) {
      if (s[i] == 0 || s[j] == 0) continue;
      for (std::size_t k = 0; k < g.m(); ++k)
        prefactor_exp[k] += Int(s[i]) * Int(s[j]) * chat.L[k].at(i, j);
    }

  // stepwise twisted product of the generator images r'_i
  GradedElement twisted = GradedElement::unit(g.d, g.m());
  for (std::size_t i = 1; i <= g.n(); ++i) {
    GradedElement gen = GradedElement::homogeneous(g.d, g.m(), [&] {
      IntVec delta = g.degree_of_generator(i);
      Degree deg(g.d);
      for (std::size_t r = 0; r < g.d; ++r) deg[r] = to_int64(delta[r]);
      return deg;
    }());
    for (std::int64_t rep = 0; rep < s[i - 1]; ++rep)
      twisted = twisted_multiply(g, twisted, gen);
  }

  SparsePoly::Key inv_key(g.m());
  for (std::size_t k = 0; k < g.m(); ++k) inv_key[k] = -to_int64(prefactor_exp[k]);
  SparsePoly inv_prefactor = SparsePoly::monomial(g.m(), std::move(inv_key), Rational(1));

  DiagramCheck out;
  Degree expected(g.d);
  {
    IntVec ds = g.degrees * monomial_to_intvec(s);
    for (std::size_t r = 0; r < g.d; ++r) expected[r] = to_int64(ds[r]);
  }
  out.degree = expected;
  out.straight = SparsePoly::constant(g.m(), 1);

  if (twisted.terms.size() != 1) return out;  // must be a single homogeneous piece
  const auto& [deg, coeff] = *twisted.terms.begin();
  out.twisted = coeff * inv_prefactor;
  out.pass = (deg == expected) && (out.twisted == out.straight);
  return out;
}

}  // namespace qas
