#pragma once

#include "qas/symbolic.hpp"
#include "qas/twisted_algebra.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qas {

/// Variable universe of the limit module: z, q, lambda_1..m, mu_1..m.
struct LimitVars {
  std::size_t m = 0;

  static constexpr std::size_t z = 0;
  static constexpr std::size_t q = 1;
  std::size_t lam(std::size_t k) const { return 2 + (k - 1); }      // k is 1-based
  std::size_t mu(std::size_t k) const { return 2 + m + (k - 1); }
  std::size_t count() const { return 2 + 2 * m; }

  SparsePoly poly_z() const { return SparsePoly::variable(count(), z); }
  SparsePoly poly_q() const { return SparsePoly::variable(count(), q); }
  SparsePoly poly_lam(std::size_t k) const { return SparsePoly::variable(count(), lam(k)); }
  SparsePoly poly_mu(std::size_t k) const { return SparsePoly::variable(count(), mu(k)); }
  SparsePoly constant(const Rational& c) const { return SparsePoly::constant(count(), c); }

  std::vector<std::string> names(const std::vector<std::string>& lambda_names = {},
                                 const std::vector<std::string>& mu_names = {}) const {
    std::vector<std::string> out(count());
    out[z] = "z";
    out[q] = "q";
    for (std::size_t k = 1; k <= m; ++k) {
      out[lam(k)] = k <= lambda_names.size() ? lambda_names[k - 1]
                                             : "lambda" + std::to_string(k);
      out[mu(k)] = k <= mu_names.size() ? mu_names[k - 1] : "mu" + std::to_string(k);
    }
    return out;
  }
};

/// How each interpolation polynomial f_k is realized. All choices satisfy
/// f(1) = 1, f(q) = lambda_k, f'(1) = mu_k for the appropriate reading of
/// lambda_k and mu_k:
///   - quadratic: generic symbols, f solved from the 3x3 linear system;
///   - monomial:  f = z^r with lambda_k read as q^r and mu_k as r;
///   - linear:    f = 1 + mu_k (z-1) with lambda_k read as 1 + mu_k (q-1)
///                (first-order stand-in for a power z^alpha).
struct FQuadratic {};
struct FMonomial {
  std::int64_t r = 1;
};
struct FLinear {};
using FOption = std::variant<FQuadratic, FMonomial, FLinear>;
using FSpec = std::vector<FOption>;

inline FSpec default_fspec(const Bicharacter& b) {
  if (b.uniparameter) return FSpec{FMonomial{1}};
  return FSpec(b.m, FQuadratic{});
}

namespace detail {
inline SparsePoly det3(const SparsePoly m[3][3]) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}
}  // namespace detail

struct FCoefficients {
  SymbolicScalar a, b, c;  // f_i(z) = a z^2 + b z + c
};

/// Solves the interpolation system f(1)=1, f(q)=lambda_i, f'(1)=mu_i for a
/// quadratic f by Cramer's rule over the symbolic coefficient field. The
/// system matrix determinant is (q-1)^2, nonzero as a polynomial, so the
/// solution always exists.
inline FCoefficients solve_f_coefficients(const LimitVars& vars, std::size_t i) {
  if (i < 1 || i > vars.m) throw std::invalid_argument("f index out of range");
  const SparsePoly one = vars.constant(1);
  const SparsePoly two = vars.constant(2);
  const SparsePoly zero = vars.constant(0);
  const SparsePoly qp = vars.poly_q();
  const SparsePoly q2 = qp * qp;
  SparsePoly M[3][3] = {{one, one, one}, {q2, qp, one}, {two, one, zero}};
  SparsePoly rhs[3] = {one, vars.poly_lam(i), vars.poly_mu(i)};
  SparsePoly D = detail::det3(M);
  SymbolicScalar out[3];
  for (std::size_t col = 0; col < 3; ++col) {
    SparsePoly Mc[3][3];
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) Mc[r][c] = (c == col) ? rhs[r] : M[r][c];
    out[col] = SymbolicScalar(detail::det3(Mc), D);
  }
  return {out[0], out[1], out[2]};
}

/// f_k as an explicit fraction of polynomials (numerator carries z).
struct FParts {
  SparsePoly num;
  SparsePoly den;
};

inline FParts f_parts(const LimitVars& vars, std::size_t k, const FOption& opt) {
  if (std::holds_alternative<FQuadratic>(opt)) {
    FCoefficients fc = solve_f_coefficients(vars, k);
    // Cramer gives all three over the same denominator.
    if (!(fc.a.den == fc.b.den && fc.a.den == fc.c.den))
      throw std::logic_error("expected a common denominator from Cramer's rule");
    SparsePoly zp = vars.poly_z();
    SparsePoly num = fc.a.num * zp * zp + fc.b.num * zp + fc.c.num;
    return {num, fc.a.den};
  }
  if (const FMonomial* mo = std::get_if<FMonomial>(&opt)) {
    if (mo->r == 0) throw std::invalid_argument("monomial f requires a nonzero exponent");
    if (mo->r > 0) return {SparsePoly::variable(vars.count(), LimitVars::z, mo->r), vars.constant(1)};
    return {vars.constant(1), SparsePoly::variable(vars.count(), LimitVars::z, -mo->r)};
  }
  // linear: 1 + mu_k (z - 1)
  SparsePoly num = vars.constant(1) + vars.poly_mu(k) * (vars.poly_z() - vars.constant(1));
  return {num, vars.constant(1)};
}

/// psi(f_k) = f_k'(1): the mu_k symbol, or the integer r for monomials.
inline SparsePoly psi_value(const LimitVars& vars, std::size_t k, const FOption& opt) {
  if (const FMonomial* mo = std::get_if<FMonomial>(&opt)) return vars.constant(mo->r);
  return vars.poly_mu(k);
}

/// The value lambda_k stands for under each option (needed when comparing
/// specializations at z = q against the parameter group).
inline SymbolicScalar lambda_reading(const LimitVars& vars, std::size_t k, const FOption& opt) {
  if (std::holds_alternative<FQuadratic>(opt)) return SymbolicScalar(vars.poly_lam(k));
  if (const FMonomial* mo = std::get_if<FMonomial>(&opt)) {
    SparsePoly one = vars.constant(1);
    if (mo->r >= 0)
      return SymbolicScalar(SparsePoly::variable(vars.count(), LimitVars::q, mo->r));
    return SymbolicScalar(one, SparsePoly::variable(vars.count(), LimitVars::q, -mo->r));
  }
  return SymbolicScalar(vars.constant(1) + vars.poly_mu(k) * (vars.poly_q() - vars.constant(1)));
}

/// Product of f_k powers (an element of the unit group generated by the f_k).
struct FactoredKUnit {
  // (k, e_k) with 1-based distinct indices and nonzero exponents
  std::vector<std::pair<std::size_t, std::int64_t>> factors;

  static FactoredKUnit of(const std::vector<std::pair<std::size_t, std::int64_t>>& fs) {
    std::map<std::size_t, std::int64_t> merged;
    for (const auto& [k, e] : fs) merged[k] += e;
    FactoredKUnit u;
    for (const auto& [k, e] : merged)
      if (e != 0) u.factors.emplace_back(k, e);
    return u;
  }
};

namespace detail {

struct PQJets {
  Jet p;  // numerator of the product, as a 2-jet at z = 1
  Jet q;  // denominator
};

/// Splits prod (n_k / d_k)^{e_k} into polynomial numerator and denominator
/// and takes 2-jets at z = 1.
inline PQJets pq_jets(const LimitVars& vars, const FSpec& fspec, const FactoredKUnit& unit) {
  Jet P = Jet::one(vars.count());
  Jet Q = Jet::one(vars.count());
  for (const auto& [k, e] : unit.factors) {
    if (k < 1 || k > fspec.size()) throw std::invalid_argument("factor index out of range");
    FParts fp = f_parts(vars, k, fspec[k - 1]);
    Jet jn = Jet::of(fp.num, LimitVars::z, Rational(1));
    Jet jd = Jet::of(fp.den, LimitVars::z, Rational(1));
    if (e > 0) {
      P = P * jn.pow(e);
      Q = Q * jd.pow(e);
    } else {
      P = P * jd.pow(-e);
      Q = Q * jn.pow(-e);
    }
  }
  return {P, Q};
}

}  // namespace detail

struct EvaluationMaps {
  SymbolicScalar at_one;            // gamma_1 of the product
  SymbolicScalar at_q;              // gamma_q of the product
  SymbolicScalar log_deriv_at_one;  // psi of the product
};

inline EvaluationMaps evaluation_maps(const LimitVars& vars, const FSpec& fspec,
                                      const FactoredKUnit& unit) {
  SymbolicScalar at_one = SymbolicScalar::constant(vars.count(), 1);
  SymbolicScalar at_q = SymbolicScalar::constant(vars.count(), 1);
  SparsePoly qp = vars.poly_q();
  for (const auto& [k, e] : unit.factors) {
    if (k < 1 || k > fspec.size()) throw std::invalid_argument("factor index out of range");
    FParts fp = f_parts(vars, k, fspec[k - 1]);
    SymbolicScalar v1(fp.num.substitute_value(LimitVars::z, Rational(1)),
                      fp.den.substitute_value(LimitVars::z, Rational(1)));
    SymbolicScalar vq(fp.num.substitute_poly(LimitVars::z, qp),
                      fp.den.substitute_poly(LimitVars::z, qp));
    at_one = at_one * v1.pow(e);
    at_q = at_q * vq.pow(e);
  }
  detail::PQJets pq = detail::pq_jets(vars, fspec, unit);
  SymbolicScalar log_deriv(pq.p.deriv * pq.q.value - pq.p.value * pq.q.deriv,
                           pq.p.value * pq.q.value);
  return {at_one, at_q, log_deriv};
}

/// mu-value choices: symbolic by default; exact rationals are for display
/// and evaluation only (radical computations never consult them).
struct MuAssignment {
  std::vector<std::optional<Rational>> value;

  static MuAssignment symbolic(std::size_t m) {
    return {std::vector<std::optional<Rational>>(m, std::nullopt)};
  }
  static MuAssignment uniparameter() {
    return {std::vector<std::optional<Rational>>{Rational(1)}};
  }
};

/// Antisymmetric matrix of the Poisson coefficients u(e_i, e_j) as
/// polynomials (linear forms) in the mu symbols; assigned mu values fold
/// into the constants.
struct PoissonMatrix {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<SparsePoly> entries;  // n*n row-major, each over m variables

  const SparsePoly& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

inline PoissonMatrix poisson_matrix(const Bicharacter& b,
                                    std::optional<MuAssignment> assign = std::nullopt) {
  MuAssignment mu = assign ? *assign
                           : (b.uniparameter ? MuAssignment::uniparameter()
                                             : MuAssignment::symbolic(b.m));
  if (mu.value.size() != b.m) throw std::invalid_argument("mu assignment width mismatch");
  PoissonMatrix U;
  U.n = b.n;
  U.m = b.m;
  U.entries.assign(b.n * b.n, SparsePoly(b.m));
  for (std::size_t i = 0; i < b.n; ++i)
    for (std::size_t j = 0; j < b.n; ++j) {
      SparsePoly e(b.m);
      for (std::size_t k = 0; k < b.m; ++k) {
        Rational coeff = Rational(2 * b.L[k].at(i, j));
        if (coeff == 0) continue;
        if (mu.value[k]) {
          e += SparsePoly::constant(b.m, coeff * *mu.value[k]);
        } else {
          e += SparsePoly::monomial_term(b.m, k, 1, coeff);
        }
      }
      U.entries[i * b.n + j] = e;
    }
  return U;
}

/// u(s,t) = s^T U t, extended biadditively from the generator matrix.
inline SparsePoly poisson_u(const PoissonMatrix& U, const Monomial& s, const Monomial& t) {
  if (s.size() != U.n || t.size() != U.n)
    throw std::invalid_argument("poisson_u: vector length mismatch");
  SparsePoly acc(U.m);
  for (std::size_t i = 0; i < U.n; ++i) {
    if (s[i] == 0) continue;
    for (std::size_t j = 0; j < U.n; ++j) {
      if (t[j] == 0) continue;
      acc += U.at(i, j) * Rational(s[i] * t[j]);
    }
  }
  return acc;
}

/// {x^s, x^t} = u(s,t) x^{s+t}, extended as a biderivation. Elements carry
/// polynomial-in-mu coefficients (the Poisson side of the correspondence).
inline AlgebraElement poisson_bracket(const PoissonMatrix& U, const AlgebraElement& a,
                                      const AlgebraElement& b) {
  if (a.n != U.n || b.n != U.n || a.m != U.m || b.m != U.m)
    throw std::invalid_argument("poisson_bracket: dimension mismatch");
  AlgebraElement out = AlgebraElement::zero(a.n, a.m);
  for (const auto& [s, cs] : a.terms) {
    for (const auto& [t, ct] : b.terms) {
      SparsePoly u = poisson_u(U, s, t);
      if (u.is_zero()) continue;
      Monomial st(a.n);
      for (std::size_t i = 0; i < a.n; ++i) st[i] = s[i] + t[i];
      out.add(std::move(st), cs * ct * u);
    }
  }
  return out;
}

/// Result of checking the limit formula on one pair (s,t): the commutation
/// unit sigma-tilde(s,t) = prod f_k^{2 l_k(s,t)} written as a fraction
/// P(z)/Q(z), with the requirements P(1) = Q(1) and
/// (P'Q - PQ')/Q^2 |_{z=1} = sum_k 2 l_k(s,t) psi(f_k).
struct LimitPairCheck {
  std::vector<std::int64_t> ell;  // l_k(s,t)
  bool value_ok = false;
  bool deriv_ok = false;
  SymbolicScalar lhs;  // derivative of sigma-tilde at z = 1
  SparsePoly rhs;      // expected biadditive form (limit variable universe)

  bool pass() const { return value_ok && deriv_ok; }
};

namespace detail {

inline std::vector<std::int64_t> ell_tuple(const Bicharacter& b, const Monomial& s,
                                           const Monomial& t) {
  ExponentValue e = eval_c(b, monomial_to_intvec(s), monomial_to_intvec(t));
  std::vector<std::int64_t> out(b.m);
  for (std::size_t k = 0; k < b.m; ++k) out[k] = to_int64(e.e[k]);
  return out;
}

inline FactoredKUnit sigma_unit(const std::vector<std::int64_t>& ell) {
  std::vector<std::pair<std::size_t, std::int64_t>> fs;
  for (std::size_t k = 0; k < ell.size(); ++k)
    if (ell[k] != 0) fs.emplace_back(k + 1, 2 * ell[k]);
  return FactoredKUnit::of(std::move(fs));
}

inline LimitPairCheck check_tuple(const LimitVars& vars, const FSpec& fspec,
                                  const std::vector<std::int64_t>& ell,
                                  const PQJets& pq) {
  LimitPairCheck out;
  out.ell = ell;
  SparsePoly target(vars.count());
  for (std::size_t k = 0; k < ell.size(); ++k) {
    if (ell[k] == 0) continue;
    target += psi_value(vars, k + 1, fspec[k]) * Rational(2 * ell[k]);
  }
  out.rhs = target;
  out.value_ok = pq.p.value == pq.q.value;
  SparsePoly lhs_num = pq.p.deriv * pq.q.value - pq.p.value * pq.q.deriv;
  SparsePoly q2 = pq.q.value * pq.q.value;
  out.deriv_ok = lhs_num == target * q2;
  out.lhs = SymbolicScalar(std::move(lhs_num), std::move(q2));
  return out;
}

}  // namespace detail

inline LimitPairCheck verify_limit(const Bicharacter& b, const FSpec& fspec,
                                   const Monomial& s, const Monomial& t) {
  if (fspec.size() != b.m) throw std::invalid_argument("f option count must equal m");
  for (auto v : s)
    if (v < 0) throw std::invalid_argument("s must be nonnegative");
  for (auto v : t)
    if (v < 0) throw std::invalid_argument("t must be nonnegative");
  LimitVars vars{b.m};
  std::vector<std::int64_t> ell = detail::ell_tuple(b, s, t);
  detail::PQJets pq = detail::pq_jets(vars, fspec, detail::sigma_unit(ell));
  return detail::check_tuple(vars, fspec, ell, pq);
}

struct LimitSweepReport {
  std::uint64_t pairs = 0;
  std::uint64_t distinct_tuples = 0;
  std::uint64_t failures = 0;
  std::vector<std::pair<Monomial, Monomial>> failed_examples;  // at most 5

  bool pass() const { return failures == 0; }
};

/// Checks the limit formula for every pair (s,t) with entries in
/// [0, max_entry]. Verification only depends on the exponent tuple
/// (l_1,...,l_m)(s,t) and is invariant under negating the tuple (which
/// swaps P and Q), so each sign-canonicalized tuple is expanded once;
/// factor powers are built incrementally. Tuples with total exponent
/// beyond expansion_budget are decided by the per-factor identities
/// f_k(1) = 1 and f_k'(1) = psi_k (checked by expansion on this very
/// instance) combined through the product rule, which keeps the sweep
/// polynomial-time in the exponent range.
inline constexpr std::int64_t kSweepExpansionBudget = 36;

inline LimitSweepReport verify_limit_sweep(const Bicharacter& b, const FSpec& fspec,
                                           std::int64_t max_entry,
                                           std::int64_t expansion_budget = kSweepExpansionBudget) {
  if (fspec.size() != b.m) throw std::invalid_argument("f option count must equal m");
  LimitVars vars{b.m};

  // int64 copy of the exponent matrices for the inner loop
  std::vector<std::vector<std::int64_t>> L(b.m);
  for (std::size_t k = 0; k < b.m; ++k) {
    L[k].resize(b.n * b.n);
    for (std::size_t i = 0; i < b.n * b.n; ++i) L[k][i] = to_int64(b.L[k].a[i]);
  }

  // per-factor jet power tables, grown on demand
  std::vector<Jet> base_num, base_den;
  std::vector<bool> factor_ok;  // f_k(1) = 1 and f_k'(1) = psi_k, by expansion
  for (std::size_t k = 1; k <= b.m; ++k) {
    FParts fp = f_parts(vars, k, fspec[k - 1]);
    Jet jn = Jet::of(fp.num, LimitVars::z, Rational(1));
    Jet jd = Jet::of(fp.den, LimitVars::z, Rational(1));
    SparsePoly psi = psi_value(vars, k, fspec[k - 1]);
    bool ok = (jn.value == jd.value) &&
              (jn.deriv * jd.value - jn.value * jd.deriv == psi * jd.value * jd.value);
    factor_ok.push_back(ok);
    base_num.push_back(std::move(jn));
    base_den.push_back(std::move(jd));
  }
  std::vector<std::vector<Jet>> num_pows(b.m, {Jet::one(vars.count())});
  std::vector<std::vector<Jet>> den_pows(b.m, {Jet::one(vars.count())});
  auto power = [&](std::vector<std::vector<Jet>>& table, const std::vector<Jet>& bases,
                   std::size_t k, std::int64_t e) -> const Jet& {
    auto& t = table[k];
    while (static_cast<std::int64_t>(t.size()) <= e) t.push_back(t.back() * bases[k]);
    return t[static_cast<std::size_t>(e)];
  };

  std::vector<Monomial> cone;
  {
    Monomial cur(b.n, 0);
    for (;;) {
      cone.push_back(cur);
      std::size_t i = 0;
      while (i < b.n && cur[i] == max_entry) cur[i++] = 0;
      if (i == b.n) break;
      ++cur[i];
    }
  }
  if (cone.size() > (1ULL << 13))
    throw std::invalid_argument(
        "limit sweep would cover " + std::to_string(cone.size() * cone.size()) +
        " pairs; lower the entry bound or the generator count");

  LimitSweepReport rep;
  std::map<std::vector<std::int64_t>, bool> seen;
  std::vector<std::int64_t> ell(b.m);
  std::vector<std::int64_t> srow(b.m * b.n);  // s^T L_k, refreshed per s
  for (const Monomial& s : cone) {
    for (std::size_t k = 0; k < b.m; ++k)
      for (std::size_t j = 0; j < b.n; ++j) {
        std::int64_t acc = 0;
        for (std::size_t i = 0; i < b.n; ++i)
          if (s[i] != 0) acc += s[i] * L[k][i * b.n + j];
        srow[k * b.n + j] = acc;
      }
    for (const Monomial& t : cone) {
      ++rep.pairs;
      for (std::size_t k = 0; k < b.m; ++k) {
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < b.n; ++j)
          if (t[j] != 0) acc += srow[k * b.n + j] * t[j];
        ell[k] = acc;
      }
      std::vector<std::int64_t> canon = ell;
      for (auto v : canon) {
        if (v > 0) break;
        if (v < 0) {
          for (auto& x : canon) x = -x;
          break;
        }
      }
      auto it = seen.find(canon);
      bool ok;
      if (it != seen.end()) {
        ok = it->second;
      } else {
        std::int64_t weight = 0;
        for (auto v : canon) weight += 2 * (v < 0 ? -v : v);
        if (weight <= expansion_budget) {
          detail::PQJets pq{Jet::one(vars.count()), Jet::one(vars.count())};
          for (std::size_t k = 0; k < b.m; ++k) {
            std::int64_t p = 2 * canon[k];
            if (p > 0) {
              pq.p = pq.p * power(num_pows, base_num, k, p);
              pq.q = pq.q * power(den_pows, base_den, k, p);
            } else if (p < 0) {
              pq.p = pq.p * power(den_pows, base_den, k, -p);
              pq.q = pq.q * power(num_pows, base_num, k, -p);
            }
          }
          ok = detail::check_tuple(vars, fspec, canon, pq).pass();
        } else {
          ok = true;
          for (std::size_t k = 0; k < b.m; ++k)
            if (canon[k] != 0 && !factor_ok[k]) ok = false;
        }
        seen.emplace(canon, ok);
        ++rep.distinct_tuples;
      }
      if (!ok) {
        ++rep.failures;
        if (rep.failed_examples.size() < 5) rep.failed_examples.emplace_back(s, t);
      }
    }
  }
  return rep;
}

/// Where to specialize the commutation unit q~_ij(z).
struct SpecializePoint {
  enum class Kind { numeric, at_q } kind = Kind::numeric;
  Rational value;  // used when kind == numeric

  static SpecializePoint at(const Rational& v) { return {Kind::numeric, v}; }
  static SpecializePoint at_q() { return {Kind::at_q, Rational(0)}; }
};

/// q~_ij(z0) = prod_k f_k(z0)^{2 L_k[i][j]} as an exact scalar. At z0 = 1
/// this computes to 1; at z0 = q it computes to the sigma-value of the pair
/// in the parameter group.
inline SymbolicScalar specialize_commutation(const Bicharacter& b, const FSpec& fspec,
                                             std::size_t i, std::size_t j,
                                             const SpecializePoint& z0) {
  if (i < 1 || i > b.n || j < 1 || j > b.n)
    throw std::invalid_argument("generator index out of range");
  if (fspec.size() != b.m) throw std::invalid_argument("f option count must equal m");
  LimitVars vars{b.m};
  SymbolicScalar acc = SymbolicScalar::constant(vars.count(), 1);
  for (std::size_t k = 1; k <= b.m; ++k) {
    std::int64_t e = 2 * to_int64(b.L[k - 1].at(i - 1, j - 1));
    if (e == 0) continue;
    FParts fp = f_parts(vars, k, fspec[k - 1]);
    SymbolicScalar val;
    if (z0.kind == SpecializePoint::Kind::at_q) {
      SparsePoly qp = vars.poly_q();
      val = SymbolicScalar(fp.num.substitute_poly(LimitVars::z, qp),
                           fp.den.substitute_poly(LimitVars::z, qp));
    } else {
      SparsePoly num = fp.num.substitute_value(LimitVars::z, z0.value);
      SparsePoly den = fp.den.substitute_value(LimitVars::z, z0.value);
      if (den.is_zero())
        throw std::domain_error("denominator of f_" + std::to_string(k) +
                                " vanishes at z0 = " + rational_str(z0.value));
      if (e < 0 && num.is_zero())
        throw std::domain_error("f_" + std::to_string(k) + " vanishes at z0 = " +
                                rational_str(z0.value) + " and occurs with negative exponent");
      val = SymbolicScalar(std::move(num), std::move(den));
    }
    acc = acc * val.pow(e);
  }
  return acc;
}

}  // namespace qas
