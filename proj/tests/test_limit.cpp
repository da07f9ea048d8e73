#include <catch2/catch_amalgamated.hpp>

#include "qas/limit.hpp"
#include "helpers.hpp"

using namespace qas;

namespace {

LimitVars V2{2};

SparsePoly Z(const LimitVars& v) { return v.poly_z(); }
SparsePoly Q(const LimitVars& v) { return v.poly_q(); }

/// Full-expansion route: multiplies the f_k power products out as honest
/// polynomials in z and reads value/derivative at z = 1 from the expansion.
/// Used as the independent oracle for the jet-based verifier.
struct Expanded {
  SparsePoly p, q;  // sigma-tilde = p / q
};
Expanded expand_sigma(const Bicharacter& b, const FSpec& fspec, const Monomial& s,
                      const Monomial& t) {
  LimitVars vars{b.m};
  ExponentValue ell = eval_c(b, monomial_to_intvec(s), monomial_to_intvec(t));
  SparsePoly P = vars.constant(1), Qp = vars.constant(1);
  for (std::size_t k = 1; k <= b.m; ++k) {
    std::int64_t e = 2 * to_int64(ell.e[k - 1]);
    FParts fp = f_parts(vars, k, fspec[k - 1]);
    if (e > 0) {
      P = P * fp.num.pow(e);
      Qp = Qp * fp.den.pow(e);
    } else if (e < 0) {
      P = P * fp.den.pow(-e);
      Qp = Qp * fp.num.pow(-e);
    }
  }
  return {P, Qp};
}

}  // namespace

TEST_CASE("interpolation coefficients solve the three conditions") {
  for (std::size_t i = 1; i <= 2; ++i) {
    FCoefficients fc = solve_f_coefficients(V2, i);

    // closed forms, derived once by Cramer elimination and frozen
    SparsePoly qm1 = Q(V2) - V2.constant(1);
    SymbolicScalar a_expect(V2.poly_lam(i) - V2.constant(1) - V2.poly_mu(i) * qm1,
                            qm1 * qm1);
    CHECK(fc.a == a_expect);
    CHECK(fc.b == SymbolicScalar(V2.poly_mu(i)) - fc.a - fc.a);
    CHECK(fc.c == SymbolicScalar(V2.constant(1)) + fc.a - SymbolicScalar(V2.poly_mu(i)));

    // f(1) = 1, f(q) = lambda_i, f'(1) = mu_i by exact substitution
    FParts fp = f_parts(V2, i, FQuadratic{});
    CHECK(SymbolicScalar(fp.num.substitute_value(LimitVars::z, Rational(1)), fp.den) ==
          SymbolicScalar::constant(V2.count(), 1));
    CHECK(SymbolicScalar(fp.num.substitute_poly(LimitVars::z, Q(V2)), fp.den) ==
          SymbolicScalar(V2.poly_lam(i)));
    CHECK(SymbolicScalar(fp.num.derivative(LimitVars::z).substitute_value(LimitVars::z, Rational(1)),
                         fp.den) == SymbolicScalar(V2.poly_mu(i)));
  }
}

TEST_CASE("monomial and linear options satisfy the same conditions") {
  LimitVars v1{1};
  for (std::int64_t r : {1, 2, 5}) {
    FParts fp = f_parts(v1, 1, FMonomial{r});
    CHECK(fp.num == SparsePoly::variable(v1.count(), LimitVars::z, r));
    CHECK(fp.num.substitute_value(LimitVars::z, Rational(1)).is_one());
    CHECK(psi_value(v1, 1, FMonomial{r}) == v1.constant(r));
  }
  CHECK_THROWS(f_parts(v1, 1, FMonomial{0}));

  FParts lin = f_parts(V2, 2, FLinear{});
  CHECK(lin.num.substitute_value(LimitVars::z, Rational(1)).is_one());
  // f(q) agrees with the declared reading of lambda_2
  CHECK(SymbolicScalar(lin.num.substitute_poly(LimitVars::z, Q(V2)), lin.den) ==
        lambda_reading(V2, 2, FLinear{}));
}

TEST_CASE("evaluation maps: gamma_1, gamma_q and psi") {
  FSpec fs{FQuadratic{}, FQuadratic{}};

  EvaluationMaps single = evaluation_maps(V2, fs, FactoredKUnit::of({{1, 1}}));
  CHECK(single.at_one == SymbolicScalar::constant(V2.count(), 1));
  CHECK(single.at_q == SymbolicScalar(V2.poly_lam(1)));
  CHECK(single.log_deriv_at_one == SymbolicScalar(V2.poly_mu(1)));

  EvaluationMaps empty = evaluation_maps(V2, fs, FactoredKUnit::of({}));
  CHECK(empty.at_one == SymbolicScalar::constant(V2.count(), 1));
  CHECK(empty.at_q == SymbolicScalar::constant(V2.count(), 1));
  CHECK(empty.log_deriv_at_one.is_zero());

  // f_1^2 f_2^-1 -> (1, lambda1^2 lambda2^-1, 2 mu1 - mu2)
  EvaluationMaps mixed = evaluation_maps(V2, fs, FactoredKUnit::of({{1, 2}, {2, -1}}));
  CHECK(mixed.at_one == SymbolicScalar::constant(V2.count(), 1));
  CHECK(mixed.at_q ==
        SymbolicScalar(V2.poly_lam(1) * V2.poly_lam(1), V2.poly_lam(2)));
  CHECK(mixed.log_deriv_at_one ==
        SymbolicScalar(V2.poly_mu(1) * Rational(2) - V2.poly_mu(2)));

  // psi additivity on random factored units
  SplitMix64 rng(1234);
  for (int trial = 0; trial < 20; ++trial) {
    FactoredKUnit f = FactoredKUnit::of({{1, rng.range(-3, 3)}, {2, rng.range(-3, 3)}});
    FactoredKUnit g = FactoredKUnit::of({{1, rng.range(-3, 3)}, {2, rng.range(-3, 3)}});
    std::vector<std::pair<std::size_t, std::int64_t>> merged = f.factors;
    for (auto& p : g.factors) merged.push_back(p);
    FactoredKUnit fg = FactoredKUnit::of(merged);
    EvaluationMaps ef = evaluation_maps(V2, fs, f);
    EvaluationMaps eg = evaluation_maps(V2, fs, g);
    EvaluationMaps efg = evaluation_maps(V2, fs, fg);
    CHECK(ef.at_one == SymbolicScalar::constant(V2.count(), 1));
    CHECK(efg.log_deriv_at_one == ef.log_deriv_at_one + eg.log_deriv_at_one);
    CHECK(efg.at_q == ef.at_q * eg.at_q);
  }
}

TEST_CASE("poisson matrix of the worked example") {
  Bicharacter b = test::example3_bicharacter();
  MuAssignment mu{{Rational(1), std::nullopt}};  // mu = (1, alpha)
  PoissonMatrix U = poisson_matrix(b, mu);

  SparsePoly two = SparsePoly::constant(2, Rational(2));
  SparsePoly alpha2 = SparsePoly::monomial_term(2, 1, 1, Rational(2));
  CHECK(U.at(0, 1) == two);
  CHECK(U.at(0, 2) == alpha2);
  CHECK(U.at(1, 2) == SparsePoly(2));
  CHECK(U.at(1, 0) == -two);
  CHECK(U.at(2, 0) == -alpha2);
  for (std::size_t i = 0; i < 3; ++i) CHECK(U.at(i, i).is_zero());
}

TEST_CASE("poisson matrix in the uniparameter pipeline is exactly 2r") {
  SplitMix64 rng(4242);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + rng.below(3);
    IntMatrix r = test::random_antisymmetric(rng, n, 3);
    if (r.is_zero()) continue;
    Bicharacter b = Bicharacter::from_uniparameter(r);
    PoissonMatrix U = poisson_matrix(b);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        SparsePoly expect = SparsePoly::constant(1, Rational(2 * r.at(i, j)));
        if (expect.is_zero())
          CHECK(U.at(i, j).is_zero());
        else
          CHECK(U.at(i, j) == expect);
      }
  }

  // all-zero exponent matrices give the zero bracket
  Bicharacter comm = Bicharacter::validate({IntMatrix::zero(3, 3)}, 3);
  PoissonMatrix Uc = poisson_matrix(comm);
  for (const auto& e : Uc.entries) CHECK(e.is_zero());
}

TEST_CASE("limit formula on the worked example, monomial and linear f") {
  Bicharacter b = test::example3_bicharacter();
  FSpec fs{FMonomial{1}, FLinear{}};  // f1 = z, f2 = 1 + alpha (z-1)
  LimitVars vars{2};

  // sigma~(e1,e2) = z^2, derivative 2
  LimitPairCheck c12 = verify_limit(b, fs, {1, 0, 0}, {0, 1, 0});
  CHECK(c12.pass());
  CHECK(c12.lhs == SymbolicScalar::constant(vars.count(), 2));

  // sigma~(e2,e3) = 1, derivative 0
  LimitPairCheck c23 = verify_limit(b, fs, {0, 1, 0}, {0, 0, 1});
  CHECK(c23.pass());
  CHECK(c23.lhs.is_zero());

  // sigma~(e1,e3) = (1 + alpha(z-1))^2, derivative 2 alpha
  LimitPairCheck c13 = verify_limit(b, fs, {1, 0, 0}, {0, 0, 1});
  CHECK(c13.pass());
  CHECK(c13.lhs == SymbolicScalar(vars.poly_mu(2) * Rational(2)));
}

TEST_CASE("limit formula with quadratic f on the worked example") {
  Bicharacter b = test::example3_bicharacter();
  FSpec fs{FQuadratic{}, FQuadratic{}};
  LimitVars vars{2};

  LimitPairCheck c12 = verify_limit(b, fs, {1, 0, 0}, {0, 1, 0});
  CHECK(c12.pass());
  CHECK(c12.lhs == SymbolicScalar(vars.poly_mu(1) * Rational(2)));

  // a composite pair with mixed signs
  LimitPairCheck big = verify_limit(b, fs, {2, 1, 0}, {1, 0, 3});
  CHECK(big.pass());
}

TEST_CASE("jet route agrees with full expansion on random instances") {
  SplitMix64 rng(90210);
  int done = 0;
  for (int trial = 0; done < 25 && trial < 200; ++trial) {
    std::size_t n = 2 + rng.below(2);  // up to 3
    std::size_t m = 1 + rng.below(2);
    Bicharacter b = test::random_bicharacter(rng, n, m, 2);
    FSpec fs;
    for (std::size_t k = 0; k < m; ++k) {
      switch (rng.below(3)) {
        case 0: fs.push_back(FQuadratic{}); break;
        case 1: fs.push_back(FMonomial{rng.nonzero(2)}); break;
        default: fs.push_back(FLinear{}); break;
      }
    }
    Monomial s(n), t(n);
    for (auto& v : s) v = rng.below(3);
    for (auto& v : t) v = rng.below(3);

    // keep the full expansion affordable; the jet route has no such limit
    ExponentValue ell = eval_c(b, monomial_to_intvec(s), monomial_to_intvec(t));
    Int weight = 0;
    for (const auto& e : ell.e) weight += abs(e);
    if (weight > 6) continue;

    LimitPairCheck jet_check = verify_limit(b, fs, s, t);
    Expanded ex = expand_sigma(b, fs, s, t);
    SparsePoly p1 = ex.p.substitute_value(LimitVars::z, Rational(1));
    SparsePoly q1 = ex.q.substitute_value(LimitVars::z, Rational(1));
    SparsePoly dp1 = ex.p.derivative(LimitVars::z).substitute_value(LimitVars::z, Rational(1));
    SparsePoly dq1 = ex.q.derivative(LimitVars::z).substitute_value(LimitVars::z, Rational(1));

    CHECK(jet_check.value_ok == (p1 == q1));
    CHECK(jet_check.lhs == SymbolicScalar(dp1 * q1 - p1 * dq1, q1 * q1));
    CHECK(jet_check.pass());
    ++done;
  }
  CHECK(done == 25);
}

TEST_CASE("bracket equals the divided difference of the deformed product") {
  // On monomials, x^s * x^t - x^t * x^s in the z-family has coefficient
  // c~(s,t) - c~(t,s); it vanishes at z = 1, and the divided difference
  // (ab - ba)/(z - 1) evaluated at z = 1 is its derivative there. That
  // derivative must be u(s,t): with c~(s,t) = P/Q this reads
  // 2 (P'Q - PQ') = u(s,t) P Q at z = 1.
  SplitMix64 rng(424243);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + rng.below(2);
    std::size_t m = 1 + rng.below(2);
    Bicharacter b = test::random_bicharacter(rng, n, m, 2);
    FSpec fs(m, FQuadratic{});
    LimitVars vars{m};
    PoissonMatrix U = poisson_matrix(b, MuAssignment::symbolic(m));

    Monomial s(n), t(n);
    for (auto& v : s) v = rng.below(3);
    for (auto& v : t) v = rng.below(3);

    ExponentValue ell = eval_c(b, monomial_to_intvec(s), monomial_to_intvec(t));
    Int weight = 0;
    for (const auto& e : ell.e) weight += abs(e);
    if (weight > 6) continue;  // keep the full expansion small
    std::vector<std::pair<std::size_t, std::int64_t>> factors;
    for (std::size_t k = 0; k < m; ++k)
      if (ell.e[k] != 0) factors.emplace_back(k + 1, to_int64(ell.e[k]));
    FactoredKUnit unit = FactoredKUnit::of(factors);

    SparsePoly P = vars.constant(1), Q = vars.constant(1);
    for (const auto& [k, e] : unit.factors) {
      FParts fp = f_parts(vars, k, fs[k - 1]);
      if (e > 0) {
        P = P * fp.num.pow(e);
        Q = Q * fp.den.pow(e);
      } else {
        P = P * fp.den.pow(-e);
        Q = Q * fp.num.pow(-e);
      }
    }
    SparsePoly p1 = P.substitute_value(LimitVars::z, Rational(1));
    SparsePoly q1 = Q.substitute_value(LimitVars::z, Rational(1));
    SparsePoly dp = P.derivative(LimitVars::z).substitute_value(LimitVars::z, Rational(1));
    SparsePoly dq = Q.derivative(LimitVars::z).substitute_value(LimitVars::z, Rational(1));

    // the commutator coefficient vanishes at z = 1
    CHECK(p1 == q1);

    // embed u(s,t) (an m-variable polynomial) into the limit universe
    SparsePoly u_st = poisson_u(U, s, t);
    SparsePoly u_embedded(vars.count());
    for (const auto& [key, coeff] : u_st.terms()) {
      SparsePoly::Key wide(vars.count(), 0);
      for (std::size_t k = 0; k < m; ++k) wide[vars.mu(k + 1)] = key[k];
      u_embedded.add_term(std::move(wide), coeff);
    }
    CHECK((dp * q1 - p1 * dq) * Rational(2) == u_embedded * q1 * p1);
  }
}

TEST_CASE("sweep covers all small pairs") {
  Bicharacter b = test::example3_bicharacter();
  LimitSweepReport rep = verify_limit_sweep(b, {FQuadratic{}, FQuadratic{}}, 2);
  CHECK(rep.pass());
  CHECK(rep.pairs == 27 * 27);

  LimitSweepReport rep2 = verify_limit_sweep(b, {FMonomial{1}, FLinear{}}, 2);
  CHECK(rep2.pass());
}

TEST_CASE("specializations of the commutation units") {
  Bicharacter b = test::example3_bicharacter();
  LimitVars vars{2};
  FSpec quad{FQuadratic{}, FQuadratic{}};
  FSpec mixed{FMonomial{1}, FLinear{}};

  // z0 = 1 gives 1 for all pairs
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = 1; j <= 3; ++j)
      CHECK(specialize_commutation(b, quad, i, j, SpecializePoint::at(Rational(1))) ==
            SymbolicScalar::constant(vars.count(), 1));

  // z0 = q recovers q_ij = lambda-monomial with exponents 2 L_k[i,j]
  SymbolicScalar q12 = specialize_commutation(b, quad, 1, 2, SpecializePoint::at_q());
  CHECK(q12 == SymbolicScalar(vars.poly_lam(1) * vars.poly_lam(1)));
  SymbolicScalar q21 = specialize_commutation(b, quad, 2, 1, SpecializePoint::at_q());
  CHECK(q21 == SymbolicScalar(vars.constant(1), vars.poly_lam(1) * vars.poly_lam(1)));
  CHECK(specialize_commutation(b, quad, 2, 3, SpecializePoint::at_q()) ==
        SymbolicScalar::constant(vars.count(), 1));

  // f1 = z at z0 = 3: q~_12(3) = 9
  CHECK(specialize_commutation(b, mixed, 1, 2, SpecializePoint::at(Rational(3))) ==
        SymbolicScalar::constant(vars.count(), 9));

  // monomial factor with negative net exponent vanishes at 0
  CHECK_THROWS(specialize_commutation(b, mixed, 2, 1, SpecializePoint::at(Rational(0))));
}

TEST_CASE("poisson bracket on the worked example") {
  Bicharacter b = test::example3_bicharacter();
  PoissonMatrix U = poisson_matrix(b, MuAssignment{{Rational(1), std::nullopt}});
  AlgebraElement x1 = AlgebraElement::generator(3, 2, 1);
  AlgebraElement x2 = AlgebraElement::generator(3, 2, 2);
  AlgebraElement x3 = AlgebraElement::generator(3, 2, 3);

  AlgebraElement br = poisson_bracket(U, x1, x2);
  CHECK(br == AlgebraElement::monomial(3, 2, Monomial{1, 1, 0},
                                       SparsePoly::constant(2, Rational(2))));
  CHECK(poisson_bracket(U, x2, x3).is_zero());

  AlgebraElement a = multiply_commutative(x1, x3) + x2;
  CHECK(poisson_bracket(U, a, a).is_zero());

  // Jacobi on the generators
  AlgebraElement j = poisson_bracket(U, x1, poisson_bracket(U, x2, x3)) +
                     poisson_bracket(U, x2, poisson_bracket(U, x3, x1)) +
                     poisson_bracket(U, x3, poisson_bracket(U, x1, x2));
  CHECK(j.is_zero());
}

TEST_CASE("poisson axioms on random instances") {
  SplitMix64 rng(60601);
  for (int inst = 0; inst < 20; ++inst) {
    std::size_t n = 2 + rng.below(3);
    std::size_t m = 1 + rng.below(2);
    Bicharacter b = test::random_bicharacter(rng, n, m, 3);
    PoissonMatrix U = poisson_matrix(b, MuAssignment::symbolic(m));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(U.at(i, j) == -U.at(j, i));
    {
      Monomial s(n);
      for (auto& v : s) v = rng.below(4);
      CHECK(poisson_u(U, s, s).is_zero());
    }
    auto rand_mono = [&] {
      Monomial s(n);
      for (auto& v : s) v = rng.below(4);
      return AlgebraElement::monomial(n, m, s);
    };
    for (int rep = 0; rep < 100; ++rep) {
      AlgebraElement a = rand_mono(), c = rand_mono(), d = rand_mono();
      AlgebraElement jac = poisson_bracket(U, a, poisson_bracket(U, c, d)) +
                           poisson_bracket(U, c, poisson_bracket(U, d, a)) +
                           poisson_bracket(U, d, poisson_bracket(U, a, c));
      CHECK(jac.is_zero());
    }
    for (int rep = 0; rep < 20; ++rep) {
      AlgebraElement a = rand_mono() + rand_mono();
      AlgebraElement c = rand_mono();
      AlgebraElement d = rand_mono() + rand_mono();
      AlgebraElement lhs = poisson_bracket(U, a, multiply_commutative(c, d));
      AlgebraElement rhs = multiply_commutative(poisson_bracket(U, a, c), d) +
                           multiply_commutative(c, poisson_bracket(U, a, d));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("uniparameter verify with monomial f") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 2 + rng.below(3);
    IntMatrix r = test::random_antisymmetric(rng, n, 3);
    if (r.is_zero()) continue;
    Bicharacter b = Bicharacter::from_uniparameter(r);
    LimitSweepReport rep = verify_limit_sweep(b, default_fspec(b), 2);
    CHECK(rep.pass());
  }

  // gcd-extracted variant: L = r / gcd, f1 = z^gcd
  IntMatrix r = IntMatrix::from_rows({{0, 4, -2}, {-4, 0, 6}, {2, -6, 0}});
  IntMatrix rg = IntMatrix::from_rows({{0, 2, -1}, {-2, 0, 3}, {1, -3, 0}});
  Bicharacter bg = Bicharacter::validate({rg}, 3);
  LimitSweepReport rep = verify_limit_sweep(bg, {FMonomial{2}}, 2);
  CHECK(rep.pass());
}
