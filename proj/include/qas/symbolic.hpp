#pragma once

#include "qas/sparse_poly.hpp"

namespace qas {

/// Exact fraction of sparse polynomials. Equality is decided by
/// cross-multiplication, so no multivariate gcd is ever needed; the only
/// normalization applied is folding constant denominators into the
/// numerator.
struct SymbolicScalar {
  SparsePoly num;
  SparsePoly den;

  SymbolicScalar() = default;
  explicit SymbolicScalar(SparsePoly n)
      : num(std::move(n)), den(SparsePoly::constant(num.nvars(), 1)) {}
  SymbolicScalar(SparsePoly n, SparsePoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    normalize();
  }
  static SymbolicScalar constant(std::size_t nvars, const Rational& c) {
    return SymbolicScalar(SparsePoly::constant(nvars, c));
  }

  std::size_t nvars() const { return num.nvars(); }
  bool is_zero() const { return num.is_zero(); }
  bool is_one() const { return num == den; }

  void normalize() {
    if (num.is_zero()) {
      den = SparsePoly::constant(num.nvars(), 1);
      return;
    }
    if (den.is_constant()) {
      Rational c = den.constant_value();
      if (c != 1) {
        num *= Rational(1) / c;
        den = SparsePoly::constant(num.nvars(), 1);
      }
    }
  }

  SymbolicScalar operator+(const SymbolicScalar& o) const {
    return SymbolicScalar(num * o.den + o.num * den, den * o.den);
  }
  SymbolicScalar operator-(const SymbolicScalar& o) const {
    return SymbolicScalar(num * o.den - o.num * den, den * o.den);
  }
  SymbolicScalar operator*(const SymbolicScalar& o) const {
    return SymbolicScalar(num * o.num, den * o.den);
  }
  SymbolicScalar operator/(const SymbolicScalar& o) const {
    if (o.num.is_zero()) throw std::domain_error("division by zero scalar");
    return SymbolicScalar(num * o.den, den * o.num);
  }
  SymbolicScalar operator-() const { return {-num, den}; }

  /// b^e with either sign of e (base must be nonzero for e < 0).
  SymbolicScalar pow(std::int64_t e) const {
    if (e < 0) {
      if (num.is_zero()) throw std::domain_error("zero base with negative exponent");
      return SymbolicScalar(den.pow(-e), num.pow(-e));
    }
    return SymbolicScalar(num.pow(e), den.pow(e));
  }

  bool operator==(const SymbolicScalar& o) const { return num * o.den == o.num * den; }
  bool operator!=(const SymbolicScalar& o) const { return !(*this == o); }

  std::string to_string(const std::vector<std::string>& names) const {
    if (den.is_one()) return num.to_string(names);
    return "(" + num.to_string(names) + ") / (" + den.to_string(names) + ")";
  }
};

/// Value and first derivative of a polynomial expression at a chosen point
/// of one variable (working modulo (var - point)^2). Products of jets follow
/// the exact product rule, so the pair stays faithful through arbitrarily
/// long multiplications without expanding the full product.
struct Jet {
  SparsePoly value;
  SparsePoly deriv;

  static Jet one(std::size_t nvars) {
    return {SparsePoly::constant(nvars, 1), SparsePoly(nvars)};
  }
  static Jet of(const SparsePoly& p, std::size_t var, const Rational& at) {
    return {p.substitute_value(var, at), p.derivative(var).substitute_value(var, at)};
  }

  Jet operator*(const Jet& o) const {
    return {value * o.value, value * o.deriv + deriv * o.value};
  }

  Jet pow(std::int64_t e) const {
    if (e < 0) throw std::domain_error("negative jet power");
    Jet acc = one(value.nvars());
    Jet base = *this;
    std::uint64_t k = static_cast<std::uint64_t>(e);
    while (k) {
      if (k & 1) acc = acc * base;
      if (k >>= 1) base = base * base;
    }
    return acc;
  }
};

}  // namespace qas
