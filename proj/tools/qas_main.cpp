#include "qas/spec_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

std::vector<qas::Rational> parse_point(const std::string& text) {
  std::vector<qas::Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                      : comma - start);
    try {
      out.push_back(qas::parse_rational(piece));
    } catch (const std::invalid_argument&) {
      throw qas::SpecError("--point: not a rational: '" + piece + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void emit(const qas::Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spectra and semiclassical limits of multiparameter quantum affine spaces"};
  app.require_subcommand(1);

  std::string input_path, dot_path, point_str;
  std::uint64_t samples = 200;
  std::uint64_t seed = 0;
  std::int64_t max_degree = 3;
  std::int64_t toric_degree = 4;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("-i,--input", input_path, "input description (JSON)")->required();
  };

  CLI::App* analyze = app.add_subcommand("analyze", "stratum-by-stratum spectrum report");
  add_input(analyze);

  CLI::App* limit = app.add_subcommand("limit", "semiclassical-limit report");
  add_input(limit);

  CLI::App* core = app.add_subcommand("core", "poisson core and symplectic core at a point");
  add_input(core);
  core->add_option("--point", point_str, "comma-separated exact rationals")->required();

  CLI::App* hasse = app.add_subcommand("hasse", "stratum order as Graphviz DOT");
  add_input(hasse);
  hasse->add_option("--dot", dot_path, "write the DOT text to this file instead of stdout");

  CLI::App* verify = app.add_subcommand("verify", "run the exact property checks");
  add_input(verify);
  verify->add_option("--samples", samples, "random samples per property check");
  verify->add_option("--seed", seed, "seed for all randomness");
  verify->add_option("--max-degree", max_degree, "entry bound for the limit-formula sweep");

  CLI::App* toric = app.add_subcommand("toric", "graded twist utilities");
  toric->require_subcommand(1);
  CLI::App* toric_pullback =
      toric->add_subcommand("pullback", "pull the grading bicharacter back to the generators");
  add_input(toric_pullback);
  CLI::App* toric_check =
      toric->add_subcommand("check", "verify the commuting square on monomials");
  add_input(toric_check);
  toric_check->add_option("--max-degree", toric_degree, "total-degree bound for monomials");

  app.add_subcommand("example3", "run the built-in worked example");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      emit(qas::run_analyze(qas::parse_spec_file(input_path)));
    } else if (limit->parsed()) {
      emit(qas::run_limit(qas::parse_spec_file(input_path)));
    } else if (core->parsed()) {
      qas::InputSpec spec = qas::parse_spec_file(input_path);
      std::vector<qas::Rational> point = parse_point(point_str);
      if (point.size() != spec.b.n)
        throw qas::SpecError("--point: expected " + std::to_string(spec.b.n) + " coordinates");
      emit(qas::run_core(spec, point));
    } else if (hasse->parsed()) {
      std::string dot = qas::run_hasse(qas::parse_spec_file(input_path));
      if (dot_path.empty()) {
        std::cout << dot;
      } else {
        std::ofstream out(dot_path);
        if (!out) throw qas::SpecError("cannot write: " + dot_path);
        out << dot;
      }
    } else if (verify->parsed()) {
      qas::VerifyResult res =
          qas::run_verify(qas::parse_spec_file(input_path), samples, seed, max_degree);
      emit(res.report);
      return res.pass ? 0 : 1;
    } else if (toric_pullback->parsed()) {
      emit(qas::run_toric_pullback(qas::parse_spec_file(input_path)));
    } else if (toric_check->parsed()) {
      qas::ToricCheckResult res =
          qas::run_toric_check(qas::parse_spec_file(input_path), toric_degree);
      emit(res.report);
      return res.pass ? 0 : 1;
    } else {
      emit(qas::run_example3());
    }
  } catch (const qas::SpecError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
