#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace acceptance {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0;
  std::optional<double> budget;  // wall-clock seconds, when the criterion states one

  bool within_budget() const { return !budget || seconds <= *budget; }
  bool passed() const;
};

constexpr int criteria = 8;

// Criteria 1 to 7 run their own experiments; 8 runs 1 to 7 and judges the total.
CriterionResult run_criterion(int id, std::uint64_t seed);
// All eight results in order; criterion 8 reuses the timings of the first seven.
std::vector<CriterionResult> run_all(std::uint64_t seed);

// "criterion <id> PASS|FAIL <title> (<seconds> s[ / <budget> s])" plus failed checks.
std::string summary_line(const CriterionResult& r);
void print_table(std::ostream& out, const std::vector<CriterionResult>& results, bool verbose);

}  // namespace acceptance
