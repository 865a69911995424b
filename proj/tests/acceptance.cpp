// Runs every property suite and prints one PASS/FAIL line per criterion.
// Suite names given as arguments restrict the run.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "ordnot/suites.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> only(argv + 1, argv + argc);
  int failed = 0;
  int number = 0;
  for (const auto& info : ordnot::suite_catalogue()) {
    ++number;
    if (!only.empty() && std::find(only.begin(), only.end(), info.name) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    ordnot::Budget budget;
    try {
      const auto report = ordnot::run_suite(info.name, budget);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::printf("%s  %2d %-18s %12llu checks  %7.2fs  %s\n", report.passed() ? "PASS" : "FAIL", number,
                  info.name.c_str(), static_cast<unsigned long long>(report.cases), secs, info.description.c_str());
      for (const auto& v : report.violations) std::printf("        %s\n", v.c_str());
      if (!report.passed()) {
        std::printf("        %llu violations in total\n", static_cast<unsigned long long>(report.violation_count));
        ++failed;
      }
    } catch (const std::exception& e) {
      std::printf("FAIL  %2d %-18s %s\n", number, info.name.c_str(), e.what());
      ++failed;
    }
    std::fflush(stdout);
  }
  if (only.empty()) std::printf("%d/%d criteria passed\n", number - failed, number);
  return failed == 0 ? 0 : 1;
}
