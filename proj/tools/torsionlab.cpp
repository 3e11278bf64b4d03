#include <iostream>

#include <CLI11.hpp>

#include "torsionlab/cli/commands.hpp"

using namespace torsionlab::cli;

int main(int argc, char** argv) {
  CLI::App app{"Joint torsion of Toeplitz operator pairs"};
  app.require_subcommand(1);

  TorsionOptions topt;
  auto* torsion = app.add_subcommand("torsion", "Compute tau(T_f, T_g) by every applicable method");
  torsion->add_option("--f", topt.f, "First symbol")->required();
  torsion->add_option("--g", topt.g, "Second symbol")->required();
  torsion->add_option("--method", topt.method, "all|det|tame|integral|factorized|exp")
      ->check(CLI::IsMember({"all", "det", "tame", "integral", "factorized", "exp"}));
  torsion->add_option("--nmax", topt.nmax, "Largest section dimension")->check(CLI::PositiveNumber);
  torsion->add_option("--tol", topt.tol, "Allowed pairwise disagreement")->check(CLI::NonNegativeNumber);
  torsion->add_option("--json", topt.json_path, "Write the JSON report here");
  torsion->add_option("--csv", topt.csv_path, "Write the CSV summary here");
  torsion->add_option("--basepoint", topt.basepoint, "Basepoint angle of the integral formula");

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Run a property suite over a seeded corpus");
  verify->add_option("--suite", vopt.suite, "golden|steinberg|bounds|traces|index|all")
      ->check(CLI::IsMember({"golden", "steinberg", "bounds", "traces", "index", "all"}));
  verify->add_option("--seed", vopt.seed, "Corpus seed");
  verify->add_option("--corpus-size", vopt.corpus_size, "Instances per property")->check(CLI::PositiveNumber);

  BoundsOptions bopt;
  auto* bounds = app.add_subcommand("bounds", "Functional-calculus discrepancy against its bounds");
  bounds->add_option("--phi", bopt.phi, "Symbol")->required();
  bounds->add_option("--func", bopt.func, "exp or poly:c0,c1,...")->required();
  bounds->add_option("--p", bopt.p, "Schatten exponent")->required();
  bounds->add_option("--t", bopt.t, "Also estimate the unitary group at this time");
  bounds->add_option("--nmax", bopt.nmax, "Largest corner dimension");
  bounds->add_option("--csv", bopt.csv_path, "Write the CSV here instead of standard output");

  ReportOptions ropt;
  auto* report = app.add_subcommand("report", "Merge JSON run reports into CSV series");
  report->add_option("--from", ropt.from, "JSON report paths");
  report->add_option("--csv", ropt.csv_path, "Write the CSV here instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*torsion) return cmd_torsion(topt, std::cout, std::cerr);
    if (*verify) return cmd_verify(vopt, std::cout, std::cerr);
    if (*bounds) return cmd_bounds(bopt, std::cout, std::cerr);
    if (*report) return cmd_report(ropt, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_numeric;
  }
  return exit_usage;
}
