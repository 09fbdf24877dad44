#pragma once

#include <string>
#include <vector>

namespace lieindex {

struct CheckResult {
  int id = 0;
  std::string name;
  std::string scope;
  bool passed = false;
  std::string detail;
  std::vector<std::string> failures;  // individual counterexamples, capped
  std::vector<std::string> warnings;  // known tensions with the reference tables, never fatal
  double seconds = 0;
};

// Scopes: all, cascade, chevalley, realform, parabolic, index.
bool valid_scope(const std::string& scope);
std::vector<int> criteria_in_scope(const std::string& scope);
CheckResult run_criterion(int id);
std::vector<CheckResult> run_scope(const std::string& scope);

}  // namespace lieindex
