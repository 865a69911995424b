#pragma once

// Exhaustive and randomized property suites over every module. Each suite
// is deterministic: fixed universes, fixed seeds, thread-count independent
// results.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace ordnot {

// Explicit cap on the work units (individual checks) a suite may perform.
class Budget {
 public:
  static constexpr std::uint64_t kDefault = 20'000'000'000ULL;

  explicit Budget(std::uint64_t limit = kDefault) : limit_(limit) {}
  // Throws BudgetExceeded once the running total passes the limit.
  void charge(std::uint64_t units, std::string_view what);
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t cases = 0;
  std::vector<std::string> violations;  // empty on pass; capped sample
  std::uint64_t violation_count = 0;
  std::optional<double> wall_ms;

  bool passed() const { return violation_count == 0; }
  void fail(std::string message);
  nlohmann::json to_json() const;
};

struct SuiteInfo {
  std::string name;
  std::string description;
};

const std::vector<SuiteInfo>& suite_catalogue();

// Throws DomainError for an unknown name and BudgetExceeded when the suite
// needs more than `budget` work units.
SuiteReport run_suite(std::string_view name, Budget& budget);

}  // namespace ordnot
