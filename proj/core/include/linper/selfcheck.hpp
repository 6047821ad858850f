#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace linper {

/// Sweep sizes for the self-check. Defaults are the acceptance sizes; a
/// bound may be raised up to its hard cap but never lowered.
class Bounds {
 public:
  struct Entry {
    int value;
    int default_value;
    int cap;
    std::string help;
  };

  Bounds();
  int get(std::string_view key) const;
  /// Throws std::invalid_argument for unknown keys, values below the
  /// default, or values above the cap. Returns true if raised above default.
  bool set(std::string_view key, int value);
  /// Parses "key=value".
  bool set_from_string(std::string_view assignment);
  const std::map<std::string, Entry, std::less<>>& entries() const { return entries_; }

 private:
  std::map<std::string, Entry, std::less<>> entries_;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool checks_passed = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::size_t cases = 0;
  std::string detail;
  std::vector<std::string> failures;

  bool within_budget() const { return seconds < budget_seconds; }
  bool passed() const { return checks_passed && within_budget(); }
  /// "PASS  3 flag-count-recursion  cases=... 1.23s/120s  detail".
  std::string summary_line() const;
};

constexpr int kCriterionCount = 9;

std::string criterion_name(int id);
CriterionResult run_criterion(int id, const Bounds& bounds, int jobs);
std::vector<CriterionResult> run_all_criteria(const Bounds& bounds, int jobs);

}  // namespace linper
