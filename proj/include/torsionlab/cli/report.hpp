#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "torsionlab/torsion/result.hpp"

namespace torsionlab::cli {

struct MethodRun {
  torsion::TorsionResult result;
  double runtime_ms = 0.0;
  bool exact = false;  // value from an exact rational lowering
};

struct MethodFailure {
  std::string method;
  std::string message;
};

struct RunReport {
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<MethodRun> results;
  std::vector<MethodFailure> failures;
  Eigen::MatrixXd disagreements;  // |v_i - v_j| over results
  double runtime_ms = 0.0;

  void compute_disagreements();
  double max_disagreement() const;

  // Top-level keys inputs, results, disagreements, runtime_ms.
  nlohmann::json to_json() const;
  // Throws std::runtime_error naming the missing or malformed field.
  static RunReport from_json(const nlohmann::json& j);

  // One row per method: method, re, im, err_estimate, dims, exact, runtime_ms.
  std::string to_csv() const;
  std::string to_table() const;
};

// RFC-4180 field quoting.
std::string csv_field(const std::string& s);
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace torsionlab::cli
