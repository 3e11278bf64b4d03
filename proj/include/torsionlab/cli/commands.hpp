#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "torsionlab/cli/report.hpp"
#include "torsionlab/cli/symbol_expr.hpp"

namespace torsionlab::cli {

enum ExitCode { exit_ok = 0, exit_check_failure = 1, exit_usage = 2, exit_numeric = 3 };

struct TorsionOptions {
  std::string f, g;
  std::string method = "all";  // all|det|tame|integral|factorized|exp
  int nmax = 256;
  double tol = 1e-6;
  std::optional<std::string> json_path, csv_path;
  double basepoint = 0.0;
};

// Every applicable method (or the one requested) on the parsed pair.
// Failures of attempted methods are collected in the report.
RunReport run_torsion(const SymbolExpr& f, const SymbolExpr& g, const TorsionOptions& opts);

// 0 when all pairwise disagreements are within tol, 1 otherwise; 2 on parse
// errors, 3 when a method fails.
int cmd_torsion(const TorsionOptions& opts, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 1;
  int corpus_size = 20;
};

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

struct BoundsOptions {
  std::string phi;
  std::string func;  // exp | poly:c0,c1,...
  double p = 1.0;
  std::optional<double> t;
  int nmax = 128;
  std::optional<std::string> csv_path;
};

int cmd_bounds(const BoundsOptions& opts, std::ostream& out, std::ostream& err);

struct ReportOptions {
  std::vector<std::string> from;
  std::optional<std::string> csv_path;
};

// Merges run reports into one CSV with a row per dimension and, for every
// report and method, the step size and the distance to the report's
// consensus value at that dimension.
int cmd_report(const ReportOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace torsionlab::cli
