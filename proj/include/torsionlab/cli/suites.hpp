#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace torsionlab::cli {

struct SuiteCase {
  std::string suite;
  std::string property;
  int instance = 0;
  bool pass = false;
  std::string detail;
  nlohmann::json replay;  // inputs needed to rerun the instance
  double runtime_ms = 0.0;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  int corpus_size = 20;
};

// golden, steinberg, bounds, traces, index.
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite name.
std::vector<SuiteCase> run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace torsionlab::cli
