#pragma once

#include "qas/numeric.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qas {

/// Sparse multivariate polynomial over Q with integer (possibly negative,
/// i.e. Laurent) exponents. Terms are keyed by exponent vectors and held in
/// lexicographically ordered maps, which doubles as the canonical display
/// order. No zero coefficients are ever stored.
class SparsePoly {
 public:
  using Key = std::vector<std::int64_t>;
  using Terms = std::map<Key, Rational>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}

  static SparsePoly constant(std::size_t nvars, const Rational& c) {
    SparsePoly p(nvars);
    p.add_term(Key(nvars, 0), c);
    return p;
  }
  static SparsePoly variable(std::size_t nvars, std::size_t var, std::int64_t exp = 1) {
    return monomial_term(nvars, var, exp, Rational(1));
  }
  static SparsePoly monomial_term(std::size_t nvars, std::size_t var, std::int64_t exp,
                                  const Rational& c) {
    SparsePoly p(nvars);
    Key k(nvars, 0);
    k.at(var) = exp;
    p.add_term(k, c);
    return p;
  }
  static SparsePoly monomial(std::size_t nvars, Key exps, const Rational& c) {
    SparsePoly p(nvars);
    if (exps.size() != nvars) throw std::invalid_argument("monomial key width mismatch");
    p.add_term(std::move(exps), c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (auto e : terms_.begin()->first)
      if (e != 0) return false;
    return true;
  }
  Rational constant_value() const {
    if (is_zero()) return Rational(0);
    if (!is_constant()) throw std::domain_error("polynomial is not constant");
    return terms_.begin()->second;
  }
  bool is_one() const { return is_constant() && constant_value() == 1; }

  void add_term(Key k, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  SparsePoly operator-() const {
    SparsePoly p(nvars_);
    for (const auto& [k, c] : terms_) p.terms_.emplace(k, -c);
    return p;
  }
  SparsePoly& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check(b);
    SparsePoly p(a.nvars_);
    Key k(a.nvars_);
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        for (std::size_t i = 0; i < a.nvars_; ++i) k[i] = ka[i] + kb[i];
        p.add_term(k, ca * cb);
      }
    }
    return p;
  }
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }

  SparsePoly pow(std::int64_t e) const {
    if (e < 0) throw std::domain_error("negative power of a polynomial");
    SparsePoly acc = constant(nvars_, 1);
    SparsePoly base = *this;
    std::uint64_t k = static_cast<std::uint64_t>(e);
    while (k) {
      if (k & 1) acc = acc * base;
      if (k >>= 1) base = base * base;
    }
    return acc;
  }

  bool operator==(const SparsePoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const SparsePoly& o) const { return !(*this == o); }

  /// d/d(var); Laurent exponents are fine.
  SparsePoly derivative(std::size_t var) const {
    SparsePoly p(nvars_);
    for (const auto& [k, c] : terms_) {
      if (k[var] == 0) continue;
      Key nk = k;
      nk[var] -= 1;
      p.add_term(std::move(nk), c * k[var]);
    }
    return p;
  }

  /// var := value. Negative exponents require value != 0.
  SparsePoly substitute_value(std::size_t var, const Rational& value) const {
    SparsePoly p(nvars_);
    for (const auto& [k, c] : terms_) {
      Key nk = k;
      nk[var] = 0;
      p.add_term(std::move(nk), c * rational_pow(value, k[var]));
    }
    return p;
  }

  /// var := replacement (a polynomial over the same variables; the variable
  /// itself must occur with nonnegative exponents).
  SparsePoly substitute_poly(std::size_t var, const SparsePoly& replacement) const {
    check(replacement);
    std::map<std::int64_t, SparsePoly> pow_cache;
    SparsePoly out(nvars_);
    for (const auto& [k, c] : terms_) {
      std::int64_t e = k[var];
      if (e < 0) throw std::domain_error("polynomial substitution into a negative exponent");
      auto it = pow_cache.find(e);
      if (it == pow_cache.end()) it = pow_cache.emplace(e, replacement.pow(e)).first;
      Key nk = k;
      nk[var] = 0;
      out += it->second * monomial(nvars_, std::move(nk), c);
    }
    return out;
  }

  /// Full evaluation; Laurent exponents require nonzero coordinates there.
  Rational eval(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("eval: point width mismatch");
    Rational acc(0);
    for (const auto& [k, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        if (k[i] != 0) t *= rational_pow(point[i], k[i]);
      acc += t;
    }
    return acc;
  }

  std::int64_t max_exponent(std::size_t var) const {
    std::int64_t m = 0;
    for (const auto& [k, c] : terms_)
      if (k[var] > m) m = k[var];
    return m;
  }
  std::int64_t min_exponent(std::size_t var) const {
    std::int64_t m = 0;
    for (const auto& [k, c] : terms_)
      if (k[var] < m) m = k[var];
    return m;
  }

  /// Canonical rendering, e.g. "q^2 - 2*q + 1" or "2*lambda1^-1*mu2".
  std::string to_string(const std::vector<std::string>& names) const {
    if (names.size() != nvars_) throw std::invalid_argument("to_string: name count mismatch");
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      Rational ac = c < 0 ? Rational(-c) : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      std::string mono;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (k[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (k[i] != 1) mono += "^" + std::to_string(k[i]);
      }
      if (mono.empty()) {
        out += rational_str(ac);
      } else {
        if (ac != 1) out += rational_str(ac) + "*";
        out += mono;
      }
    }
    return out;
  }

 private:
  void check(const SparsePoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("mixing polynomials over different variable sets");
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

}  // namespace qas
