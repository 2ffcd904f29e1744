#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nalg/magma.hpp"

namespace nalg {

struct CheckOverrides {
  std::optional<int> n_max;  // shrink/extend the default sweep range
};

struct CheckResult {
  std::string id;
  bool pass = false;
  std::vector<std::string> detail;  // key=value records for machine reports
  std::string counterexample;       // minimal witness on failure
  double runtime_ms = 0.0;
};

struct TheoremCheck {
  std::string id;
  std::string summary;
  std::function<CheckResult(const CheckOverrides&)> run;
  // mutation fixture expected to FAIL, guarding against vacuous passes
  std::function<CheckResult(const CheckOverrides&)> negative_control;
};

const std::vector<TheoremCheck>& check_registry();
CheckResult run_check(const std::string& id, const CheckOverrides& ov = {});

// Golden table fixtures transcribed cell-for-cell, with a documented
// errata list for known transcription slips.
struct TableDiff {
  struct Cell {
    std::string row, col, generated, transcribed;
    bool documented = false;
  };
  std::string table_id;
  std::vector<Cell> mismatches;
  bool clean() const { return mismatches.empty(); }
  bool only_documented() const {
    for (const auto& c : mismatches)
      if (!c.documented) return false;
    return true;
  }
};

const std::vector<std::string>& golden_table_ids();
TableDiff regenerate_and_diff(const std::string& table_id);

// machine-readable rendering: line-oriented key=value grouped by check
std::string render_check_result(const CheckResult& r);

}  // namespace nalg
