#include "torsionlab/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace torsionlab::cli {

using nlohmann::json;

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json complex_json(cplx c) { return {{"re", c.real()}, {"im", c.imag()}}; }

cplx complex_from(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

}  // namespace

void RunReport::compute_disagreements() {
  const auto n = static_cast<Eigen::Index>(results.size());
  disagreements = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < i; ++j)
      disagreements(i, j) = disagreements(j, i) = std::abs(results[i].result.value - results[j].result.value);
}

double RunReport::max_disagreement() const { return disagreements.size() ? disagreements.maxCoeff() : 0.0; }

json RunReport::to_json() const {
  json j;
  j["inputs"] = inputs;
  j["results"] = json::array();
  for (const auto& r : results) {
    json e;
    e["method"] = torsion::to_string(r.result.method);
    e["value"] = complex_json(r.result.value);
    e["err_estimate"] = r.result.err_estimate;
    e["dims"] = r.result.dims;
    e["history"] = json::array();
    for (const auto& h : r.result.history) e["history"].push_back(complex_json(h));
    e["notes"] = r.result.notes;
    e["exact"] = r.exact;
    e["runtime_ms"] = r.runtime_ms;
    j["results"].push_back(e);
  }
  json d;
  d["methods"] = json::array();
  for (const auto& r : results) d["methods"].push_back(torsion::to_string(r.result.method));
  d["matrix"] = json::array();
  for (Eigen::Index i = 0; i < disagreements.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < disagreements.cols(); ++k) row.push_back(disagreements(i, k));
    d["matrix"].push_back(row);
  }
  d["failures"] = json::array();
  for (const auto& f : failures) d["failures"].push_back({{"method", f.method}, {"message", f.message}});
  j["disagreements"] = d;
  j["runtime_ms"] = runtime_ms;
  return j;
}

RunReport RunReport::from_json(const json& j) {
  RunReport r;
  try {
    r.inputs = j.at("inputs");
    for (const auto& e : j.at("results")) {
      MethodRun m;
      const auto name = e.at("method").get<std::string>();
      const auto method = torsion::method_from_string(name);
      if (!method) throw std::runtime_error("unknown method '" + name + "'");
      m.result.method = *method;
      m.result.value = complex_from(e.at("value"));
      m.result.err_estimate = e.at("err_estimate").get<double>();
      m.result.dims = e.at("dims").get<std::vector<int>>();
      if (e.contains("history"))
        for (const auto& h : e["history"]) m.result.history.push_back(complex_from(h));
      if (e.contains("exact")) m.exact = e["exact"].get<bool>();
      if (e.contains("runtime_ms")) m.runtime_ms = e["runtime_ms"].get<double>();
      r.results.push_back(m);
    }
    j.at("disagreements");
    r.runtime_ms = j.at("runtime_ms").get<double>();
  } catch (const json::exception& ex) {
    throw std::runtime_error(std::string("malformed report: ") + ex.what());
  }
  r.compute_disagreements();
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t k = 0; k < fields.size(); ++k) out += (k ? "," : "") + csv_field(fields[k]);
  return out + "\r\n";
}

std::string RunReport::to_csv() const {
  std::string out = csv_row({"method", "re", "im", "err_estimate", "dims", "exact", "runtime_ms"});
  for (const auto& r : results) {
    std::string dims;
    for (std::size_t k = 0; k < r.result.dims.size(); ++k) dims += (k ? ";" : "") + std::to_string(r.result.dims[k]);
    out += csv_row({torsion::to_string(r.result.method), num(r.result.value.real()), num(r.result.value.imag()),
                    num(r.result.err_estimate), dims, r.exact ? "true" : "false", num(r.runtime_ms)});
  }
  return out;
}

std::string RunReport::to_table() const {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-11s %24s %24s %11s %8s %10s\n", "method", "re", "im", "err", "dim",
                "ms");
  os << line;
  for (const auto& r : results) {
    const int dim = r.result.dims.empty() ? 0 : r.result.dims.back();
    std::snprintf(line, sizeof line, "%-11s %24.16g %24.16g %11.3g %8d %10.1f%s\n",
                  torsion::to_string(r.result.method).c_str(), r.result.value.real(), r.result.value.imag(),
                  r.result.err_estimate, dim, r.runtime_ms, r.exact ? "  exact" : "");
    os << line;
  }
  for (const auto& f : failures) os << f.method << " failed: " << f.message << "\n";
  if (results.size() > 1) os << "max disagreement " << max_disagreement() << "\n";
  return os.str();
}

}  // namespace torsionlab::cli
