#ifndef DUALPAIR_CORE_VERIFY_HPP
#define DUALPAIR_CORE_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

namespace dualpair::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;   // what was checked / first failure
  long long millis = 0;
};

struct Check {
  std::string name;
  std::string summary;
  std::function<CheckResult()> run;
};

// The named identity suites.  "all" runs everything in order.
const std::vector<Check>& checks();
std::vector<CheckResult> run_suite(const std::string& name);
bool suite_exists(const std::string& name);
std::vector<std::string> suite_names();

}  // namespace dualpair::verify

#endif
