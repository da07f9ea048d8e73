#pragma once

#include "qas/limit.hpp"
#include "qas/rng.hpp"
#include "qas/spectrum.hpp"
#include "qas/toric.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qas {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input; the CLI maps this to exit code 2.
struct SpecError : std::runtime_error {
  explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

struct MuEntry {
  bool symbolic = true;
  std::string name;  // display name when symbolic
  Rational value;    // exact value otherwise
};

/// Parsed and validated problem description.
struct InputSpec {
  Bicharacter b;
  std::vector<std::string> parameter_names;  // lambda display names, size m
  std::vector<MuEntry> mu;                   // size m
  FSpec f;                                   // size m
  bool sigma_rebased = false;
  bool uniparameter = false;
  std::optional<GradingData> toric;
  Json echo;  // normalized input, re-emitted in reports

  std::vector<std::string> mu_names() const {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < mu.size(); ++k)
      out.push_back(mu[k].symbolic ? mu[k].name : rational_str(mu[k].value));
    return out;
  }
  MuAssignment mu_assignment() const {
    MuAssignment a = MuAssignment::symbolic(b.m);
    for (std::size_t k = 0; k < b.m; ++k)
      if (!mu[k].symbolic) a.value[k] = mu[k].value;
    return a;
  }
};

namespace io_detail {

inline std::int64_t expect_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw SpecError(where + ": expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

inline IntMatrix parse_matrix(const Json& j, std::size_t rows, std::size_t cols,
                              const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    throw SpecError(where + ": expected " + std::to_string(rows) + " rows");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != cols)
      throw SpecError(where + "[" + std::to_string(i + 1) + "]: expected " +
                      std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      m.at(i, c) = expect_int(row[c], where + "[" + std::to_string(i + 1) + "][" +
                                          std::to_string(c + 1) + "]");
  }
  return m;
}

inline Rational parse_rational_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw SpecError(where + ": not a rational: " + j.dump());
    }
  }
  throw SpecError(where + ": expected an integer or \"p/q\" string");
}

inline bool looks_rational(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  bool digits = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '/' ) continue;
    if (s[i] < '0' || s[i] > '9') return false;
    digits = true;
  }
  return digits;
}

}  // namespace io_detail

/// Accepted f options: "quadratic", "linear", "monomial:<r>".
inline FOption parse_f_option(const std::string& text, const std::string& where) {
  if (text == "quadratic") return FQuadratic{};
  if (text == "linear") return FLinear{};
  if (text.rfind("monomial:", 0) == 0) {
    try {
      std::int64_t r = std::stoll(text.substr(9));
      if (r == 0) throw SpecError(where + ": monomial exponent must be nonzero");
      return FMonomial{r};
    } catch (const std::logic_error&) {
      throw SpecError(where + ": bad monomial exponent in '" + text + "'");
    }
  }
  throw SpecError(where + ": unknown f option '" + text +
                  "' (expected quadratic | linear | monomial:<r>)");
}

inline InputSpec parse_spec(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError(std::string("syntax error: ") + e.what());
  }
  if (!j.is_object()) throw SpecError("top level must be a JSON object");

  if (!j.contains("n")) throw SpecError("missing field \"n\"");
  std::int64_t n_raw = io_detail::expect_int(j["n"], "n");
  if (n_raw < 1) throw SpecError("n must be positive");
  std::size_t n = static_cast<std::size_t>(n_raw);

  bool has_L = j.contains("L");
  bool has_r = j.contains("r");
  if (has_L && has_r) throw SpecError("\"L\" and \"r\" are mutually exclusive");
  if (!has_L && !has_r) throw SpecError("one of \"L\" or \"r\" is required");

  InputSpec spec;
  Json echo;
  echo["n"] = n_raw;

  if (has_r) {
    IntMatrix r = io_detail::parse_matrix(j["r"], n, n, "r");
    try {
      spec.b = Bicharacter::from_uniparameter(r);
    } catch (const std::invalid_argument& e) {
      throw SpecError(std::string("r: ") + e.what());
    }
    spec.uniparameter = true;
    echo["r"] = j["r"];
  } else {
    const Json& lj = j["L"];
    if (!lj.is_array() || lj.empty())
      throw SpecError("L: expected a nonempty array of matrices");
    std::vector<IntMatrix> mats;
    for (std::size_t k = 0; k < lj.size(); ++k)
      mats.push_back(io_detail::parse_matrix(lj[k], n, n, "L[" + std::to_string(k + 1) + "]"));
    std::string encodes = j.value("encodes", std::string("c"));
    if (encodes != "c" && encodes != "sigma")
      throw SpecError("encodes: expected \"c\" or \"sigma\"");
    try {
      if (encodes == "sigma") {
        SigmaRebase r = bicharacter_from_sigma(std::move(mats), n);
        spec.b = std::move(r.b);
        spec.sigma_rebased = r.rebased;
      } else {
        spec.b = Bicharacter::validate(std::move(mats), n);
      }
    } catch (const std::invalid_argument& e) {
      throw SpecError(e.what());
    }
    echo["encodes"] = encodes;
    echo["L"] = j["L"];
  }
  std::size_t m = spec.b.m;
  if (j.contains("m") && io_detail::expect_int(j["m"], "m") != static_cast<std::int64_t>(m))
    throw SpecError("m does not match the number of exponent matrices");
  echo["m"] = m;

  // lambda display names
  for (std::size_t k = 1; k <= m; ++k)
    spec.parameter_names.push_back("lambda" + std::to_string(k));
  if (j.contains("parameter_names")) {
    const Json& pn = j["parameter_names"];
    if (!pn.is_array() || pn.size() != m)
      throw SpecError("parameter_names: expected " + std::to_string(m) + " strings");
    for (std::size_t k = 0; k < m; ++k) {
      if (!pn[k].is_string()) throw SpecError("parameter_names: entries must be strings");
      spec.parameter_names[k] = pn[k].get<std::string>();
    }
  }
  if (spec.sigma_rebased)
    for (auto& name : spec.parameter_names) name = "sqrt_" + name;
  echo["parameter_names"] = spec.parameter_names;

  // mu entries: "symbolic", a rational, or a custom symbol name
  spec.mu.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    spec.mu[k].symbolic = !spec.uniparameter;
    spec.mu[k].name = "mu" + std::to_string(k + 1);
    if (spec.uniparameter) spec.mu[k].value = Rational(1);
  }
  if (j.contains("mu")) {
    const Json& mj = j["mu"];
    if (!mj.is_array() || mj.size() != m)
      throw SpecError("mu: expected " + std::to_string(m) + " entries");
    for (std::size_t k = 0; k < m; ++k) {
      std::string where = "mu[" + std::to_string(k + 1) + "]";
      if (mj[k].is_string()) {
        std::string s = mj[k].get<std::string>();
        if (s == "symbolic") {
          spec.mu[k] = {true, "mu" + std::to_string(k + 1), Rational(0)};
        } else if (io_detail::looks_rational(s)) {
          spec.mu[k] = {false, "", io_detail::parse_rational_json(mj[k], where)};
        } else {
          spec.mu[k] = {true, s, Rational(0)};  // custom symbol name
        }
      } else {
        spec.mu[k] = {false, "", io_detail::parse_rational_json(mj[k], where)};
      }
    }
  }
  {
    Json mu_echo = Json::array();
    for (const auto& e : spec.mu)
      mu_echo.push_back(e.symbolic ? Json(e.name) : Json(rational_str(e.value)));
    echo["mu"] = mu_echo;
  }

  // f options
  spec.f = default_fspec(spec.b);
  if (j.contains("f")) {
    const Json& fj = j["f"];
    if (!fj.is_array() || fj.size() != m)
      throw SpecError("f: expected " + std::to_string(m) + " entries");
    spec.f.clear();
    for (std::size_t k = 0; k < m; ++k) {
      if (!fj[k].is_string()) throw SpecError("f: entries must be strings");
      spec.f.push_back(parse_f_option(fj[k].get<std::string>(),
                                      "f[" + std::to_string(k + 1) + "]"));
    }
  }
  {
    Json f_echo = Json::array();
    for (const auto& opt : spec.f) {
      if (std::holds_alternative<FQuadratic>(opt)) {
        f_echo.push_back("quadratic");
      } else if (const FMonomial* mo = std::get_if<FMonomial>(&opt)) {
        f_echo.push_back("monomial:" + std::to_string(mo->r));
      } else {
        f_echo.push_back("linear");
      }
    }
    echo["f"] = f_echo;
  }

  if (j.contains("toric")) {
    const Json& tj = j["toric"];
    if (!tj.is_object()) throw SpecError("toric: expected an object");
    if (!tj.contains("d") || !tj.contains("degrees") || !tj.contains("L"))
      throw SpecError("toric: fields d, degrees, L are required");
    std::int64_t d_raw = io_detail::expect_int(tj["d"], "toric.d");
    if (d_raw < 1) throw SpecError("toric.d must be positive");
    std::size_t d = static_cast<std::size_t>(d_raw);
    IntMatrix degrees = io_detail::parse_matrix(tj["degrees"], d, n, "toric.degrees");
    const Json& gl = tj["L"];
    if (!gl.is_array() || gl.empty())
      throw SpecError("toric.L: expected a nonempty array of matrices");
    std::vector<IntMatrix> gmats;
    for (std::size_t k = 0; k < gl.size(); ++k)
      gmats.push_back(
          io_detail::parse_matrix(gl[k], d, d, "toric.L[" + std::to_string(k + 1) + "]"));
    try {
      spec.toric = GradingData::make(degrees, Bicharacter::validate(std::move(gmats), d));
    } catch (const std::invalid_argument& e) {
      throw SpecError(std::string("toric: ") + e.what());
    }
    echo["toric"] = tj;
  }

  spec.echo = std::move(echo);
  return spec;
}

inline InputSpec parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

// ---------------------------------------------------------------------------
// report builders

namespace io_detail {

inline Json intvec_json(const IntVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_int64(x));
  return a;
}

inline Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) rows.push_back(intvec_json(m.row(i)));
  return rows;
}

inline std::string core_kind_str(CoreKind k) {
  switch (k) {
    case CoreKind::single_point: return "single_point";
    case CoreKind::full_stratum: return "full_stratum";
    case CoreKind::binomial_orbit: return "binomial_orbit";
  }
  return "";
}

inline std::string torus_monomial(const IntVec& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (a[i] != 1) s += "^" + a[i].str();
  }
  return s.empty() ? "1" : s;
}

inline constexpr const char* kOrderRule =
    "label containment decided by S_w lattice and character arithmetic; "
    "validated against the worked three-generator example and point sampling";

}  // namespace io_detail

inline Json run_analyze(const InputSpec& spec) {
  Json out;
  out["command"] = "analyze";
  out["input"] = spec.echo;
  std::vector<StratumReport> strata = full_spectrum(spec.b);
  Json arr = Json::array();
  Json ranks = Json::array();
  for (const auto& r : strata) {
    Json s;
    s["w"] = r.w;
    s["bits"] = bitstring(r.w, spec.b.n);
    s["rank"] = r.rank;
    s["dimension"] = r.family_dimension;
    s["singleton"] = r.is_singleton;
    Json cm = Json::array();
    for (const auto& v : r.center_monomials) cm.push_back(io_detail::intvec_json(v));
    s["center_monomials"] = cm;
    s["ideal_family"] = generator_strings(spec.b, generic_label(spec.b, r.w, Side::poisson));
    arr.push_back(s);
    ranks.push_back(r.rank);
  }
  out["strata"] = arr;
  out["rank_vector"] = ranks;
  out["order_rule"] = io_detail::kOrderRule;
  return out;
}

inline Json run_limit(const InputSpec& spec) {
  Json out;
  out["command"] = "limit";
  out["input"] = spec.echo;
  LimitVars vars{spec.b.m};
  std::vector<std::string> names = vars.names(spec.parameter_names, spec.mu_names());

  Json fs = Json::array();
  for (std::size_t k = 1; k <= spec.b.m; ++k) {
    FParts fp = f_parts(vars, k, spec.f[k - 1]);
    fs.push_back(SymbolicScalar(fp.num, fp.den).to_string(names));
  }
  out["f"] = fs;

  PoissonMatrix U = poisson_matrix(spec.b, spec.mu_assignment());
  std::vector<std::string> mu_display = spec.mu_names();
  Json rows = Json::array();
  for (std::size_t i = 0; i < U.n; ++i) {
    Json row = Json::array();
    for (std::size_t jj = 0; jj < U.n; ++jj) row.push_back(U.at(i, jj).to_string(mu_display));
    rows.push_back(row);
  }
  out["poisson_matrix"] = rows;

  // commutation units, rendered in factored form
  Json qt = Json::array();
  for (std::size_t i = 1; i <= spec.b.n; ++i) {
    Json row = Json::array();
    for (std::size_t jj = 1; jj <= spec.b.n; ++jj) {
      std::string cell;
      for (std::size_t k = 1; k <= spec.b.m; ++k) {
        std::int64_t e = 2 * to_int64(spec.b.L[k - 1].at(i - 1, jj - 1));
        if (e == 0) continue;
        FParts fp = f_parts(vars, k, spec.f[k - 1]);
        std::string base = SymbolicScalar(fp.num, fp.den).to_string(names);
        if (base.find_first_of(" */") != std::string::npos) base = "(" + base + ")";
        if (!cell.empty()) cell += "*";
        cell += base;
        if (e != 1) cell += "^" + std::to_string(e);
      }
      row.push_back(cell.empty() ? "1" : cell);
    }
    qt.push_back(row);
  }
  out["qtilde"] = qt;

  // the limit identity on all generator pairs
  std::size_t pairs = 0, passed = 0;
  for (std::size_t i = 0; i < spec.b.n; ++i)
    for (std::size_t jj = 0; jj < spec.b.n; ++jj) {
      Monomial s(spec.b.n, 0), t(spec.b.n, 0);
      s[i] = 1;
      t[jj] = 1;
      ++pairs;
      if (verify_limit(spec.b, spec.f, s, t).pass()) ++passed;
    }
  out["generator_check"] = Json{{"pairs", pairs}, {"passed", passed}};
  return out;
}

inline Json run_core(const InputSpec& spec, const std::vector<Rational>& point) {
  Json out;
  out["command"] = "core";
  Json pj = Json::array();
  for (const auto& x : point) pj.push_back(rational_str(x));
  out["point"] = pj;

  IdealLabel label = poisson_core(spec.b, point);
  out["w"] = label.w;
  out["poisson_core_generators"] = generator_strings(spec.b, label);

  CoreDescriptor core = symplectic_core(spec.b, point);
  Json cj;
  cj["kind"] = io_detail::core_kind_str(core.kind);
  cj["dimension"] = core.dimension;
  Json eqs = Json::array();
  for (const auto& [a, chi] : core.equations)
    eqs.push_back(io_detail::torus_monomial(a) + " = " + chi.str());
  cj["equations"] = eqs;
  out["symplectic_core"] = cj;
  return out;
}

inline std::string run_hasse(const InputSpec& spec) { return hasse_diagram(spec.b); }

struct VerifyResult {
  Json report;
  bool pass = true;
};

inline VerifyResult run_verify(const InputSpec& spec, std::uint64_t samples,
                               std::uint64_t seed, std::int64_t max_degree) {
  VerifyResult res;
  res.report["command"] = "verify";
  res.report["seed"] = seed;
  res.report["samples"] = samples;
  res.report["max_degree"] = max_degree;
  Json checks = Json::array();
  auto add_check = [&](const std::string& name, std::uint64_t passed, std::uint64_t total) {
    checks.push_back(Json{{"name", name}, {"passed", passed}, {"total", total}});
    if (passed != total) res.pass = false;
  };

  // interpolation conditions for each f_k
  {
    LimitVars vars{spec.b.m};
    std::uint64_t ok = 0;
    for (std::size_t k = 1; k <= spec.b.m; ++k) {
      FParts fp = f_parts(vars, k, spec.f[k - 1]);
      bool at1 = SymbolicScalar(fp.num.substitute_value(LimitVars::z, Rational(1)),
                                fp.den.substitute_value(LimitVars::z, Rational(1))) ==
                 SymbolicScalar::constant(vars.count(), 1);
      bool atq = SymbolicScalar(fp.num.substitute_poly(LimitVars::z, vars.poly_q()),
                                fp.den.substitute_poly(LimitVars::z, vars.poly_q())) ==
                 lambda_reading(vars, k, spec.f[k - 1]);
      bool d1 = SymbolicScalar(
                    fp.num.derivative(LimitVars::z).substitute_value(LimitVars::z, Rational(1)),
                    fp.den.substitute_value(LimitVars::z, Rational(1))) ==
                SymbolicScalar(psi_value(vars, k, spec.f[k - 1]));
      if (at1 && atq && d1) ++ok;
    }
    add_check("f_conditions", ok, spec.b.m);
  }

  // the limit formula over the whole degree box on this instance
  {
    LimitSweepReport sweep = verify_limit_sweep(spec.b, spec.f, max_degree);
    add_check("limit_pairs", sweep.pairs - sweep.failures, sweep.pairs);
  }

  SplitMix64 rng(seed);

  // Poisson axioms at sampled monomials
  {
    PoissonMatrix U = poisson_matrix(spec.b, spec.mu_assignment());
    auto rand_mono = [&] {
      Monomial s(spec.b.n);
      for (auto& v : s) v = rng.below(4);
      return AlgebraElement::monomial(spec.b.n, spec.b.m, s);
    };
    std::uint64_t jac_ok = 0, lei_ok = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
      AlgebraElement a = rand_mono(), c = rand_mono(), d = rand_mono();
      AlgebraElement jac = poisson_bracket(U, a, poisson_bracket(U, c, d)) +
                           poisson_bracket(U, c, poisson_bracket(U, d, a)) +
                           poisson_bracket(U, d, poisson_bracket(U, a, c));
      if (jac.is_zero()) ++jac_ok;
      AlgebraElement lhs = poisson_bracket(U, a, multiply_commutative(c, d));
      AlgebraElement rhs = multiply_commutative(poisson_bracket(U, a, c), d) +
                           multiply_commutative(c, poisson_bracket(U, a, d));
      if (lhs == rhs) ++lei_ok;
    }
    add_check("poisson_jacobi", jac_ok, samples);
    add_check("poisson_leibniz", lei_ok, samples);
  }

  // twisted-algebra laws at sampled monomials
  {
    std::uint64_t ok = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
      auto rand_mono = [&] {
        Monomial s(spec.b.n);
        for (auto& v : s) v = rng.below(4);
        return AlgebraElement::monomial(spec.b.n, spec.b.m, s);
      };
      AlgebraElement x = rand_mono(), y = rand_mono(), z = rand_mono();
      bool assoc = multiply(spec.b, multiply(spec.b, x, y), z) ==
                   multiply(spec.b, x, multiply(spec.b, y, z));
      Monomial s = x.terms.begin()->first, t = y.terms.begin()->first;
      ExponentValue sig = eval_sigma(spec.b, monomial_to_intvec(s), monomial_to_intvec(t));
      SparsePoly::Key key(spec.b.m);
      for (std::size_t k = 0; k < spec.b.m; ++k) key[k] = to_int64(sig.e[k]);
      bool comm = multiply(spec.b, x, y) ==
                  multiply(spec.b, y, x)
                      .scaled(SparsePoly::monomial(spec.b.m, key, Rational(1)));
      if (assoc && comm) ++ok;
    }
    add_check("algebra_laws", ok, samples);
  }

  // phi transport involution on sampled core labels
  {
    std::uint64_t ok = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
      std::vector<Rational> p(spec.b.n);
      for (auto& x : p) x = Rational(rng.below(3) == 0 ? 0 : rng.nonzero(4));
      IdealLabel lab = poisson_core(spec.b, p);
      IdealLabel round =
          phi_transport(phi_transport(lab, Direction::poisson_to_quantum),
                        Direction::quantum_to_poisson);
      if (round == lab) ++ok;
    }
    add_check("phi_involution", ok, samples);
  }

  if (spec.toric) {
    std::uint64_t total = 0, ok = 0;
    Monomial cur(spec.toric->n(), 0);
    for (;;) {
      std::int64_t deg = 0;
      for (auto v : cur) deg += v;
      if (deg <= max_degree) {
        ++total;
        if (diagram_commute_check(*spec.toric, cur).pass) ++ok;
      }
      std::size_t i = 0;
      while (i < cur.size() && cur[i] == max_degree) cur[i++] = 0;
      if (i == cur.size()) break;
      ++cur[i];
    }
    add_check("toric_diagram", ok, total);
  }

  res.report["checks"] = checks;
  res.report["pass"] = res.pass;
  return res;
}

inline Json run_toric_pullback(const InputSpec& spec) {
  if (!spec.toric) throw SpecError("no toric block in the input");
  Json out;
  out["command"] = "toric-pullback";
  out["d"] = spec.toric->d;
  out["n"] = spec.toric->n();
  Bicharacter hat = pullback(*spec.toric);
  Json mats = Json::array();
  for (const auto& L : hat.L) mats.push_back(io_detail::matrix_json(L));
  out["pullback_L"] = mats;
  return out;
}

struct ToricCheckResult {
  Json report;
  bool pass = true;
};

inline ToricCheckResult run_toric_check(const InputSpec& spec, std::int64_t max_total_degree) {
  if (!spec.toric) throw SpecError("no toric block in the input");
  ToricCheckResult res;
  res.report["command"] = "toric-check";
  res.report["max_total_degree"] = max_total_degree;
  std::uint64_t total = 0, ok = 0;
  Monomial cur(spec.toric->n(), 0);
  for (;;) {
    std::int64_t deg = 0;
    for (auto v : cur) deg += v;
    if (deg <= max_total_degree) {
      ++total;
      if (diagram_commute_check(*spec.toric, cur).pass) ++ok;
    }
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == static_cast<std::int64_t>(max_total_degree)) cur[i++] = 0;
    if (i == cur.size()) break;
    ++cur[i];
  }
  res.report["monomials_checked"] = total;
  res.report["passed"] = ok;
  res.pass = (ok == total);
  res.report["pass"] = res.pass;
  return res;
}

/// The built-in worked example: three generators, two parameters, the
/// monomial/linear f pair and mu = (1, alpha).
inline std::string example3_text() {
  return R"({
  "n": 3,
  "m": 2,
  "parameter_names": ["lambda1", "lambda2"],
  "L": [
    [[0, 1, 0], [-1, 0, 0], [0, 0, 0]],
    [[0, 0, 1], [0, 0, 0], [-1, 0, 0]]
  ],
  "mu": [1, "alpha"],
  "f": ["monomial:1", "linear"]
}
)";
}

inline Json run_example3() {
  InputSpec spec = parse_spec(example3_text());
  Json out;
  out["command"] = "example3";
  Json analyze = run_analyze(spec);
  analyze.erase("command");
  analyze.erase("input");
  Json limit = run_limit(spec);
  limit.erase("command");
  limit.erase("input");
  out["input"] = spec.echo;
  out["analyze"] = analyze;
  out["limit"] = limit;

  Json cores = Json::array();
  const std::vector<std::vector<long>> sample_points = {
      {1, 0, 0}, {0, 2, 3}, {2, 3, 0}, {2, 0, 3}, {1, 2, 3}};
  for (const auto& raw : sample_points) {
    std::vector<Rational> p;
    for (long v : raw) p.emplace_back(v);
    Json c = run_core(spec, p);
    c.erase("command");
    cores.push_back(c);
  }
  out["cores"] = cores;

  Json edges = Json::array();
  for (const auto& [lo, hi] : cover_edges(spec.b))
    edges.push_back("w_" + bitstring(lo, spec.b.n) + " -> w_" + bitstring(hi, spec.b.n));
  out["hasse_cover_edges"] = edges;

  VerifyResult v = run_verify(spec, 50, 7, 2);
  Json vr = v.report;
  vr.erase("command");
  out["verify"] = vr;
  return out;
}

}  // namespace qas
