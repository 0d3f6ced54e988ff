#pragma once

#include <string>
#include <vector>

namespace meso {

struct CriterionResult {
  std::string id;
  std::string title;
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
  double seconds = 0.0;
  std::string details;
};

// Runs every release criterion against the shipped fixtures. Missing fixture
// files throw Error("fixture", ...).
std::vector<CriterionResult> run_acceptance(const std::string& fixtures_dir);

// One "PASS criterion-N ..." / "FAIL ..." line per criterion.
void print_acceptance(const std::vector<CriterionResult>& results);

}  // namespace meso
