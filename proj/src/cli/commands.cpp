#include "torsionlab/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "torsionlab/cli/suites.hpp"
#include "torsionlab/errors.hpp"
#include "torsionlab/funcalc/discrepancy.hpp"
#include "torsionlab/torsion/det.hpp"
#include "torsionlab/torsion/exponential.hpp"
#include "torsionlab/torsion/factorized.hpp"
#include "torsionlab/torsion/integral.hpp"
#include "torsionlab/torsion/tame.hpp"
#include "torsionlab/util/parallel.hpp"

namespace torsionlab::cli {

using nlohmann::json;
using torsion::Method;
using torsion::TorsionResult;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool tame_applicable(const SymbolExpr& e) {
  return e.rational && e.rational->scale() != cplx(0.0) && e.rational->circle_regular();
}

bool exp_applicable(const SymbolExpr& e) { return e.structured && e.structured->rational.is_constant(); }

std::vector<int> det_dims(int nmax) {
  std::vector<int> dims;
  for (int d = 32; d <= nmax; d *= 2) dims.push_back(d);
  if (dims.empty()) dims = {std::max(2, nmax / 2), std::max(4, nmax)};
  return dims;
}

bool write_file(const std::string& path, const std::string& content, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "cannot write " << path << "\n";
    return false;
  }
  f << content;
  return true;
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

RunReport run_torsion(const SymbolExpr& f, const SymbolExpr& g, const TorsionOptions& opts) {
  const auto t0 = Clock::now();
  RunReport report;
  report.inputs = {{"f", f.source},
                   {"g", g.source},
                   {"f_normal_form", normal_form(f)},
                   {"g_normal_form", normal_form(g)},
                   {"f_class", to_string(f.classification)},
                   {"g_class", to_string(g.classification)},
                   {"exact_lowering", tame_applicable(f) && tame_applicable(g)},
                   {"method", opts.method},
                   {"nmax", opts.nmax},
                   {"tol", opts.tol},
                   {"basepoint", opts.basepoint}};

  std::vector<Method> methods;
  if (opts.method == "all") {
    if (tame_applicable(f) && tame_applicable(g)) methods.push_back(Method::tame);
    methods.insert(methods.end(), {Method::det, Method::integral, Method::factorized});
    if (exp_applicable(f) && exp_applicable(g)) methods.push_back(Method::exp);
  } else {
    const auto m = torsion::method_from_string(opts.method);
    if (!m || *m == Method::lefschetz) throw std::invalid_argument("unknown method '" + opts.method + "'");
    methods.push_back(*m);
  }

  // Fourier forms are shared by the numeric methods; a failure here is a
  // failure of each of them.
  std::optional<symbols::FourierSymbol> F, G;
  std::string fourier_error;
  const bool need_fourier = std::any_of(methods.begin(), methods.end(), [&](Method m) {
    return m == Method::det || m == Method::integral || (m == Method::factorized && !(f.structured && g.structured));
  });
  if (need_fourier) {
    try {
      F = f.fourier();
      G = g.fourier();
    } catch (const std::exception& e) {
      fourier_error = e.what();
    }
  }

  const auto run = [&](Method m) -> TorsionResult {
    switch (m) {
      case Method::tame:
        if (!(tame_applicable(f) && tame_applicable(g)))
          throw DomainError("tame path needs circle-regular rational symbols");
        return torsion::torsion_tame(*f.rational, *g.rational);
      case Method::det: {
        if (!F) throw DomainError(fourier_error);
        torsion::DetOptions o;
        o.schedule.dims = det_dims(opts.nmax);
        return torsion::torsion_det(*F, *G, o);
      }
      case Method::integral: {
        if (!F) throw DomainError(fourier_error);
        torsion::IntegralOptions o;
        o.basepoint = opts.basepoint;
        return torsion::torsion_integral(*F, *G, o);
      }
      case Method::factorized:
        if (f.structured && g.structured) return torsion::torsion_factorized(*f.structured, *g.structured);
        if (!F) throw DomainError(fourier_error);
        return torsion::torsion_factorized(*F, *G);
      case Method::exp:
        if (!(exp_applicable(f) && exp_applicable(g)))
          throw DomainError("exp path needs symbols of the form c exp(h)");
        return torsion::exp_torsion(f.structured->exponent, g.structured->exponent);
      default:
        throw DomainError("method not available from the command line");
    }
  };

  std::vector<std::optional<MethodRun>> runs(methods.size());
  std::vector<std::string> errors(methods.size());
  util::parallel_for(static_cast<int>(methods.size()), [&](int i) {
    const auto t = Clock::now();
    try {
      MethodRun r;
      r.result = run(methods[i]);
      r.runtime_ms = ms_since(t);
      r.exact = methods[i] == Method::tame;
      runs[i] = r;
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < methods.size(); ++i) {
    if (runs[i]) report.results.push_back(*runs[i]);
    else report.failures.push_back({torsion::to_string(methods[i]), errors[i]});
  }
  report.compute_disagreements();
  report.runtime_ms = ms_since(t0);
  return report;
}

int cmd_torsion(const TorsionOptions& opts, std::ostream& out, std::ostream& err) {
  SymbolExpr f, g;
  try {
    f = parse_symbol(opts.f);
    g = parse_symbol(opts.g);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_usage;
  } catch (const TorsionError& e) {
    err << "invalid symbol: " << e.what() << "\n";
    return exit_usage;
  }
  RunReport report;
  try {
    report = run_torsion(f, g, opts);
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return exit_usage;
  }
  out << "f = " << normal_form(f) << "  [" << to_string(f.classification) << "]\n";
  out << "g = " << normal_form(g) << "  [" << to_string(g.classification) << "]\n";
  out << report.to_table();
  if (opts.json_path && !write_file(*opts.json_path, report.to_json().dump(2) + "\n", err)) return exit_usage;
  if (opts.csv_path && !write_file(*opts.csv_path, report.to_csv(), err)) return exit_usage;
  if (!report.failures.empty() || report.results.empty()) return exit_numeric;
  return report.max_disagreement() <= opts.tol ? exit_ok : exit_check_failure;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<std::string> names;
  if (opts.suite == "all") names = suite_names();
  else if (std::find(suite_names().begin(), suite_names().end(), opts.suite) != suite_names().end())
    names = {opts.suite};
  else {
    err << "unknown suite '" << opts.suite << "'\n";
    return exit_usage;
  }
  if (opts.corpus_size < 1) {
    err << "corpus size must be positive\n";
    return exit_usage;
  }
  bool all_pass = true;
  for (const auto& name : names) {
    const auto cases = run_suite(name, {opts.seed, opts.corpus_size});
    std::map<std::string, std::pair<int, int>> tally;  // property -> (passed, total)
    std::map<std::string, double> elapsed;
    std::vector<std::string> order;
    for (const auto& c : cases) {
      if (!tally.count(c.property)) order.push_back(c.property);
      auto& t = tally[c.property];
      t.second++;
      if (c.pass) t.first++;
      elapsed[c.property] += c.runtime_ms;
    }
    for (const auto& p : order) {
      const auto [pass, total] = tally[p];
      char line[200];
      std::snprintf(line, sizeof line, "%-10s %-44s %4d/%-4d %9.0f ms  %s\n", name.c_str(), p.c_str(), pass, total,
                    elapsed[p], pass == total ? "PASS" : "FAIL");
      out << line;
    }
    for (const auto& c : cases) {
      if (c.pass) continue;
      all_pass = false;
      json replay = c.replay;
      replay["property"] = c.property;
      replay["instance"] = c.instance;
      out << "FAIL " << name << " / " << c.property << " #" << c.instance << ": " << c.detail << "\n";
      out << "  replay: " << replay.dump() << "\n";
    }
  }
  return all_pass ? exit_ok : exit_check_failure;
}

int cmd_bounds(const BoundsOptions& opts, std::ostream& out, std::ostream& err) {
  symbols::FourierSymbol phi;
  sections::FunctionSpec f = sections::FunctionSpec::exp();
  try {
    phi = parse_symbol(opts.phi).fourier();
  } catch (const std::exception& e) {
    err << "invalid --phi: " << e.what() << "\n";
    return exit_usage;
  }
  if (opts.func.rfind("poly:", 0) == 0) {
    std::vector<cplx> c;
    std::stringstream ss(opts.func.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        c.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        err << "invalid polynomial coefficient '" << item << "'\n";
        return exit_usage;
      }
    }
    if (c.empty()) {
      err << "empty polynomial\n";
      return exit_usage;
    }
    f = sections::FunctionSpec::polynomial(c);
  } else if (opts.func != "exp") {
    err << "--func must be exp or poly:COEFFS\n";
    return exit_usage;
  }
  if (!(opts.p >= 1.0) || opts.nmax < 8) {
    err << "need p >= 1 and nmax >= 8\n";
    return exit_usage;
  }
  std::vector<int> dims;
  for (int d = 8; d <= opts.nmax; d *= 2) dims.push_back(d);

  try {
    const auto d = funcalc::calculus_discrepancy(phi, f, opts.p, dims);
    std::vector<std::string> header{"dim", "measured_2p", "bound_2p", "measured_p", "bound_p"};
    std::vector<std::string> constant_values;
    for (const auto& [k, v] : d.two_p.constants) {
      header.push_back(k);
      constant_values.push_back(num(v));
    }
    std::optional<funcalc::BoundReport> u;
    if (opts.t) {
      u = funcalc::exp_unitary_estimate(phi, *opts.t, opts.p);
      for (const char* k : {"t", "unitary_measured", "unitary_bound", "c1", "c2"}) header.push_back(k);
    }
    std::string csv = csv_row(header);
    for (std::size_t k = 0; k < dims.size(); ++k) {
      std::vector<std::string> row{std::to_string(dims[k]), num(d.two_p.history[k]), num(d.two_p.bound),
                                   num(d.p.history[k]), num(d.p.bound)};
      row.insert(row.end(), constant_values.begin(), constant_values.end());
      if (u) {
        for (double v : {*opts.t, u->measured, u->bound, u->constants.at("c1"), u->constants.at("c2")})
          row.push_back(num(v));
      }
      csv += csv_row(row);
    }
    if (opts.csv_path) {
      if (!write_file(*opts.csv_path, csv, err)) return exit_usage;
    } else {
      out << csv;
    }
    out << "L^2p: measured " << d.two_p.measured << " bound " << d.two_p.bound << (d.two_p.pass ? " pass" : " FAIL")
        << "\n";
    out << "L^p:  measured " << d.p.measured << " bound " << d.p.bound << (d.p.pass ? " pass" : " FAIL") << "\n";
    bool pass = d.two_p.pass && d.p.pass;
    if (u) {
      out << "unitary t=" << *opts.t << ": measured " << u->measured << " bound " << u->bound
          << (u->pass ? " pass" : " FAIL") << "\n";
      pass = pass && u->pass;
    }
    return pass ? exit_ok : exit_check_failure;
  } catch (const TorsionError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return exit_numeric;
  }
}

int cmd_report(const ReportOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.from.empty()) {
    err << "no input reports\n";
    return exit_usage;
  }
  std::vector<RunReport> reports;
  for (const auto& path : opts.from) {
    std::ifstream in(path);
    if (!in) {
      err << "cannot read " << path << "\n";
      return exit_usage;
    }
    try {
      reports.push_back(RunReport::from_json(json::parse(in)));
    } catch (const std::exception& e) {
      err << path << ": " << e.what() << "\n";
      return exit_usage;
    }
  }
  struct Series {
    std::string name;
    std::map<int, double> step, disagreement;
  };
  std::vector<Series> series;
  std::set<int> dims;
  for (std::size_t r = 0; r < reports.size(); ++r) {
    const auto& rep = reports[r];
    cplx consensus = 0.0;
    for (const auto& m : rep.results) consensus += m.result.value;
    if (!rep.results.empty()) consensus /= static_cast<double>(rep.results.size());
    for (const auto& m : rep.results) {
      const auto& res = m.result;
      if (res.history.size() != res.dims.size() || res.dims.empty()) continue;
      Series s;
      s.name = "report" + std::to_string(r + 1) + "." + torsion::to_string(res.method);
      for (std::size_t k = 0; k < res.dims.size(); ++k) {
        dims.insert(res.dims[k]);
        s.disagreement[res.dims[k]] = std::abs(res.history[k] - consensus);
        if (k > 0) s.step[res.dims[k]] = std::abs(res.history[k] - res.history[k - 1]);
      }
      series.push_back(std::move(s));
    }
  }
  std::vector<std::string> header{"dim"};
  for (const auto& s : series) {
    header.push_back(s.name + ".step");
    header.push_back(s.name + ".disagreement");
  }
  std::string csv = csv_row(header);
  for (int d : dims) {
    std::vector<std::string> row{std::to_string(d)};
    for (const auto& s : series) {
      row.push_back(s.step.count(d) ? num(s.step.at(d)) : "");
      row.push_back(s.disagreement.count(d) ? num(s.disagreement.at(d)) : "");
    }
    csv += csv_row(row);
  }
  if (opts.csv_path) return write_file(*opts.csv_path, csv, err) ? exit_ok : exit_usage;
  out << csv;
  return exit_ok;
}

}  // namespace torsionlab::cli
