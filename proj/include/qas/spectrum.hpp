#pragma once

#include "qas/bicharacter.hpp"
#include "qas/numeric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qas {

/// Three-valued answer for order queries that may hinge on symbolic
/// parameters ("indeterminate" = neither forced equal nor forced distinct).
enum class Tri { no, yes, indeterminate };

/// Value of a character at a lattice vector: a nonzero rational times a
/// monomial in named symbolic parameters (family coordinates like "b", "c").
/// Distinct symbols are unconstrained nonzero scalars.
struct ChiValue {
  Rational coeff = Rational(1);
  std::map<std::string, std::int64_t> syms;

  static ChiValue one() { return {}; }
  static ChiValue rational(const Rational& r) {
    if (r == 0) throw std::invalid_argument("character values must be nonzero");
    return {r, {}};
  }
  static ChiValue symbol(const std::string& name) { return {Rational(1), {{name, 1}}}; }

  bool is_rational() const { return syms.empty(); }

  ChiValue operator*(const ChiValue& o) const {
    ChiValue r{coeff * o.coeff, syms};
    for (const auto& [s, e] : o.syms) {
      r.syms[s] += e;
      if (r.syms[s] == 0) r.syms.erase(s);
    }
    return r;
  }
  ChiValue pow(std::int64_t e) const {
    ChiValue r{rational_pow(coeff, e), {}};
    if (e != 0)
      for (const auto& [s, x] : syms) r.syms[s] = x * e;
    return r;
  }
  bool operator==(const ChiValue& o) const { return coeff == o.coeff && syms == o.syms; }

  std::string str() const {
    std::string mono;
    for (const auto& [s, e] : syms) {
      if (!mono.empty()) mono += "*";
      mono += s;
      if (e != 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) return rational_str(coeff);
    if (coeff == 1) return mono;
    if (coeff == -1) return "-" + mono;
    return rational_str(coeff) + "*" + mono;
  }
};

/// Equal iff forced equal for every parameter choice; unequal iff forced
/// distinct; otherwise indeterminate. With identical symbol monomials the
/// rational parts decide; with different monomials some nonzero choice of
/// the symbols realizes equality and some realizes inequality.
inline Tri chi_equal(const ChiValue& a, const ChiValue& b) {
  if (a.syms == b.syms) return a.coeff == b.coeff ? Tri::yes : Tri::no;
  return Tri::indeterminate;
}

enum class Side { poisson, quantum };
enum class Direction { poisson_to_quantum, quantum_to_poisson };

/// Label (w, chi) of one Poisson-primitive / primitive ideal: w is the set
/// of vanishing generators, chi assigns a value to each basis vector of the
/// radical S_w. The named ideal is generated by {x_i : i in w} together
/// with the binomials x^{a+} - chi(a) x^{a-} over the basis of S_w.
struct IdealLabel {
  IndexSet w;
  std::vector<ChiValue> chi;
  Side side = Side::poisson;

  bool operator==(const IdealLabel& o) const {
    return w == o.w && chi == o.chi && side == o.side;
  }
};

/// Everything the stratum-by-stratum picture records about one w.
struct StratumReport {
  IndexSet w;
  Lattice S;                          // the radical S_w
  std::size_t rank = 0;               // = S.rank()
  std::vector<IntVec> center_monomials;  // basis vectors, exponents of x^a
  std::size_t family_dimension = 0;   // = rank
  bool is_singleton = false;          // rank 0: the stratum holds J_w alone
};

inline StratumReport stratum_report(const Bicharacter& b, const IndexSet& w_in) {
  IndexSet w = normalize_index_set(w_in, b.n);
  StratumReport r;
  r.w = w;
  r.S = radical(b, w);
  r.rank = r.S.rank();
  for (std::size_t i = 0; i < r.rank; ++i) r.center_monomials.push_back(r.S.basis.row(i));
  r.family_dimension = r.rank;
  r.is_singleton = (r.rank == 0);
  return r;
}

inline constexpr std::size_t kDefaultStratumBound = 16;

/// All 2^n strata in binary-counting order of the subset bitmask
/// (bit i-1 set iff generator i is in w).
inline std::vector<StratumReport> full_spectrum(const Bicharacter& b,
                                                std::size_t bound = kDefaultStratumBound) {
  if (b.n > bound)
    throw std::invalid_argument("full_spectrum: n = " + std::to_string(b.n) +
                                " exceeds the configured bound " + std::to_string(bound));
  std::vector<StratumReport> out;
  out.reserve(1ULL << b.n);
  for (std::uint64_t mask = 0; mask < (1ULL << b.n); ++mask)
    out.push_back(stratum_report(b, from_bitmask(mask, b.n)));
  return out;
}

/// Poisson core of the maximal ideal at a point: w is the vanishing
/// pattern, and chi records the values of the center monomials x^a at the
/// point (a over the basis of S_w).
inline IdealLabel poisson_core(const Bicharacter& b, const std::vector<Rational>& point) {
  if (point.size() != b.n) throw std::invalid_argument("point length must equal n");
  IdealLabel lab;
  lab.side = Side::poisson;
  for (std::size_t i = 0; i < b.n; ++i)
    if (point[i] == 0) lab.w.push_back(static_cast<int>(i + 1));
  Lattice S = radical(b, lab.w);
  for (std::size_t r = 0; r < S.rank(); ++r) {
    Rational v(1);
    for (std::size_t i = 0; i < b.n; ++i) {
      std::int64_t e = to_int64(S.basis.at(r, i));
      if (e != 0) v *= rational_pow(point[i], e);
    }
    lab.chi.push_back(ChiValue::rational(v));
  }
  return lab;
}

/// Label with fresh symbolic character values t1, t2, ... (a generic member
/// of the stratum's family).
inline IdealLabel generic_label(const Bicharacter& b, const IndexSet& w_in, Side side,
                                const std::string& prefix = "t") {
  IndexSet w = normalize_index_set(w_in, b.n);
  Lattice S = radical(b, w);
  IdealLabel lab{w, {}, side};
  for (std::size_t r = 0; r < S.rank(); ++r)
    lab.chi.push_back(ChiValue::symbol(prefix + std::to_string(r + 1)));
  return lab;
}

enum class CoreKind { single_point, full_stratum, binomial_orbit };

/// Symplectic core through a point: the vanishing pattern plus the binomial
/// equations prod b_i^{a_i} = chi(a) over the S_w basis.
struct CoreDescriptor {
  IndexSet w;
  std::vector<std::pair<IntVec, ChiValue>> equations;
  std::size_t dimension = 0;  // |complement of w| - rank S_w
  CoreKind kind = CoreKind::full_stratum;
};

inline CoreDescriptor symplectic_core(const Bicharacter& b, const std::vector<Rational>& point) {
  IdealLabel lab = poisson_core(b, point);
  Lattice S = radical(b, lab.w);
  CoreDescriptor d;
  d.w = lab.w;
  for (std::size_t r = 0; r < S.rank(); ++r)
    d.equations.emplace_back(S.basis.row(r), lab.chi[r]);
  std::size_t torus_dim = b.n - lab.w.size();
  d.dimension = torus_dim - S.rank();
  if (S.rank() == 0) {
    d.kind = CoreKind::full_stratum;
  } else {
    IndexSet wbar = complement(lab.w, b.n);
    IntMatrix units(wbar.size(), b.n);
    for (std::size_t r = 0; r < wbar.size(); ++r)
      units.at(r, static_cast<std::size_t>(wbar[r] - 1)) = 1;
    d.kind = (S == make_lattice(b.n, units)) ? CoreKind::single_point
                                             : CoreKind::binomial_orbit;
  }
  return d;
}

/// The basis-fixing linear isomorphism moves a label verbatim to the other
/// side; only the side flag changes.
inline IdealLabel phi_transport(const IdealLabel& label, Direction dir) {
  IdealLabel out = label;
  out.side = (dir == Direction::poisson_to_quantum) ? Side::quantum : Side::poisson;
  return out;
}

/// chi extended multiplicatively from the basis of S to a member vector.
inline std::optional<ChiValue> chi_extend(const Lattice& S,
                                          const std::vector<ChiValue>& chi, const IntVec& a) {
  auto coords = solve_membership(S, a);
  if (!coords) return std::nullopt;
  ChiValue v = ChiValue::one();
  for (std::size_t r = 0; r < coords->size(); ++r)
    v = v * chi[r].pow(to_int64((*coords)[r]));
  return v;
}

namespace detail {

inline bool supp_meets(const IntVec& a, const IndexSet& w, bool positive_part) {
  for (int i : w) {
    const Int& v = a[static_cast<std::size_t>(i - 1)];
    if (positive_part ? v > 0 : v < 0) return true;
  }
  return false;
}

}  // namespace detail

/// Decision rule for containment of labeled ideals (commutative reading,
/// where the ideal of (w, chi) is I_w plus the S_w binomials):
///   (1) w_P must be contained in w_Q;
///   (2) each S_{w_P} basis binomial must land in Q: off w_Q it must be one
///       of Q's binomials (membership in S_{w_Q} with matching chi); if
///       exactly one of its two monomials dies on w_Q it cannot be in the
///       prime Q; if both die it is absorbed by I_{w_Q}.
/// Symbolic character comparisons can come back indeterminate.
inline Tri contains(const Bicharacter& b, const IdealLabel& P, const IdealLabel& Q) {
  if (!is_subset(P.w, Q.w)) return Tri::no;
  Lattice SP = radical(b, P.w);
  Lattice SQ = radical(b, Q.w);
  if (SP.rank() != P.chi.size() || SQ.rank() != Q.chi.size())
    throw std::invalid_argument("label does not match its stratum rank");
  bool saw_indeterminate = false;
  for (std::size_t r = 0; r < SP.rank(); ++r) {
    IntVec a = SP.basis.row(r);
    bool plus_meets = detail::supp_meets(a, Q.w, true);
    bool minus_meets = detail::supp_meets(a, Q.w, false);
    if (!plus_meets && !minus_meets) {
      std::optional<ChiValue> cq = chi_extend(SQ, Q.chi, a);
      if (!cq) return Tri::no;
      switch (chi_equal(*cq, P.chi[r])) {
        case Tri::no: return Tri::no;
        case Tri::indeterminate: saw_indeterminate = true; break;
        case Tri::yes: break;
      }
    } else if (plus_meets != minus_meets) {
      return Tri::no;
    }
    // both parts meet w_Q: no constraint
  }
  return saw_indeterminate ? Tri::indeterminate : Tri::yes;
}

/// Existential order on strata: some member of the w-family lies below some
/// member of the w'-family. With both characters free, a chi constraint off
/// w' is always satisfiable, so only the lattice conditions remain.
inline bool stratum_leq(const Bicharacter& b, const IndexSet& w, const IndexSet& wp) {
  if (!is_subset(w, wp)) return false;
  Lattice SP = radical(b, w);
  Lattice SQ = radical(b, wp);
  for (std::size_t r = 0; r < SP.rank(); ++r) {
    IntVec a = SP.basis.row(r);
    bool plus_meets = detail::supp_meets(a, wp, true);
    bool minus_meets = detail::supp_meets(a, wp, false);
    if (!plus_meets && !minus_meets) {
      if (!lattice_contains(SQ, a)) return false;
    } else if (plus_meets != minus_meets) {
      return false;
    }
  }
  return true;
}

/// Full 2^n x 2^n existential-order matrix, indexed by subset bitmask.
inline std::vector<std::vector<bool>> stratum_order(const Bicharacter& b,
                                                    std::size_t bound = kDefaultStratumBound) {
  if (b.n > bound) throw std::invalid_argument("stratum_order: n exceeds the configured bound");
  std::size_t count = 1ULL << b.n;
  std::vector<IndexSet> ws(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) ws[mask] = from_bitmask(mask, b.n);
  std::vector<std::vector<bool>> leq(count, std::vector<bool>(count, false));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) leq[i][j] = stratum_leq(b, ws[i], ws[j]);
  return leq;
}

/// Cover relations (transitive reduction) of the existential stratum order.
inline std::vector<std::pair<IndexSet, IndexSet>> cover_edges(
    const Bicharacter& b, std::size_t bound = kDefaultStratumBound) {
  std::vector<std::vector<bool>> leq = stratum_order(b, bound);
  std::size_t count = leq.size();
  std::vector<std::pair<IndexSet, IndexSet>> out;
  for (std::uint64_t i = 0; i < count; ++i)
    for (std::uint64_t j = 0; j < count; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool covered = true;
      for (std::uint64_t k = 0; k < count && covered; ++k)
        if (k != i && k != j && leq[i][k] && leq[k][j]) covered = false;
      if (covered) out.emplace_back(from_bitmask(i, b.n), from_bitmask(j, b.n));
    }
  return out;
}

enum class HasseGranularity { strata };

/// Graphviz export of the stratum order; nodes are named "w_<bitstring>"
/// and annotated with the family dimension. Node and edge order is fixed by
/// the subset bitmask, so output is byte-stable.
inline std::string hasse_diagram(const Bicharacter& b,
                                 HasseGranularity granularity = HasseGranularity::strata,
                                 std::size_t bound = kDefaultStratumBound) {
  (void)granularity;  // strata is the only level
  std::ostringstream os;
  os << "digraph hasse {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (std::uint64_t mask = 0; mask < (1ULL << b.n); ++mask) {
    IndexSet w = from_bitmask(mask, b.n);
    StratumReport r = stratum_report(b, w);
    os << "  \"w_" << bitstring(w, b.n) << "\" [label=\"w=" << index_set_str(w)
       << " dim=" << r.rank << (r.is_singleton ? " singleton" : "") << "\"];\n";
  }
  for (const auto& [lo, hi] : cover_edges(b, bound))
    os << "  \"w_" << bitstring(lo, b.n) << "\" -> \"w_" << bitstring(hi, b.n) << "\";\n";
  os << "}\n";
  return os.str();
}

/// Generator strings for a labeled ideal: x_i for i in w, then one binomial
/// per S_w basis vector.
inline std::vector<std::string> generator_strings(const Bicharacter& b,
                                                  const IdealLabel& label) {
  auto mono_str = [](const IntVec& part) {
    std::string s;
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (part[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += "x" + std::to_string(i + 1);
      if (part[i] != 1) s += "^" + part[i].str();
    }
    return s;
  };
  std::vector<std::string> out;
  for (int i : label.w) out.push_back("x" + std::to_string(i));
  Lattice S = radical(b, label.w);
  if (S.rank() != label.chi.size())
    throw std::invalid_argument("label does not match its stratum rank");
  for (std::size_t r = 0; r < S.rank(); ++r) {
    IntVec a = S.basis.row(r);
    IntVec plus(a.size()), minus(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > 0) plus[i] = a[i];
      if (a[i] < 0) minus[i] = -a[i];
    }
    const ChiValue& c = label.chi[r];
    std::string rhs = mono_str(minus);
    std::string coeff = c.str();
    std::string term;
    if (rhs.empty()) {
      term = coeff;
    } else if (coeff == "1") {
      term = rhs;
    } else {
      term = coeff + "*" + rhs;
    }
    out.push_back(mono_str(plus) + " - " + term);
  }
  return out;
}

}  // namespace qas
