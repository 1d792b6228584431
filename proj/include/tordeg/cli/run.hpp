#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tordeg/cli/json_io.hpp"

namespace tordeg {

enum ExitCode { kExitOk = 0, kExitError = 1, kExitBudget = 2, kExitMismatch = 3 };

struct RunConfig {
  std::string command;
  int n = 4;
  std::string word;
  std::string weight = "rho";       // "rho" or a comma-separated vector
  std::string layout = "plucker";   // or "extension" for the tabulated n = 5 vectors
  std::optional<std::string> convention;  // "min" or "max"; per-command default when unset
  bool fflv = false;
  std::optional<size_t> cone;
  int depth = 1;
  size_t budget = 500000;
  unsigned threads = 1;
  std::string table;
  std::string ideal_file;
  std::vector<std::string> inputs;
  std::string cache_dir;  // empty disables the cache
};

struct Report {
  Json json;
  std::string csv;  // set by table reports
  int exit_code = kExitOk;
};

// Validates the config and dispatches. Module errors become a JSON error body with a nonzero exit code.
Report run(const RunConfig& config);

// 64-bit FNV-1a, as lowercase hex.
std::string content_hash(const std::string& text);

}  // namespace tordeg
