// One line per acceptance criterion, aggregated from the fixture suite checks.
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "sgb/error.hpp"
#include "sgb/fixture_suite.hpp"

int main(int argc, char** argv) {
  sgb::SuiteOptions options;
  options.fixture_dir = argc > 1 ? argv[1] : SGB_FIXTURE_DIR;

  sgb::SuiteReport report;
  try {
    report = sgb::run_fixture_suite(options);
  } catch (const sgb::Error& e) {
    std::cerr << "acceptance: " << e.what() << "\n";
    return 2;
  }

  std::map<int, std::vector<const sgb::CheckResult*>> by_criterion;
  for (const auto& c : report.checks) {
    if (c.name.rfind("AC", 0) != 0) continue;
    by_criterion[std::stoi(c.name.substr(2))].push_back(&c);
  }

  bool all = true;
  for (int ac = 1; ac <= 10; ++ac) {
    const auto it = by_criterion.find(ac);
    bool pass = it != by_criterion.end() && !it->second.empty();
    std::string detail = pass ? "" : " (no checks ran)";
    if (it != by_criterion.end()) {
      for (const auto* c : it->second) {
        if (!c->passed) {
          pass = false;
          detail += " | FAILED " + c->name + ": " + c->detail;
        }
      }
      if (pass) detail = " (" + std::to_string(it->second.size()) + " checks)";
    }
    std::cout << "AC" << ac << " " << (pass ? "PASS" : "FAIL") << detail << "\n";
    if (it != by_criterion.end()) {
      for (const auto* c : it->second) std::cout << "    " << c->name << ": " << c->detail << "\n";
    }
    all = all && pass;
  }
  for (const auto& c : report.checks) {
    if (c.name.rfind("AC", 0) == 0) continue;
    std::cout << "  [" << c.group << "] " << c.name << ": " << (c.passed ? "ok" : "FAIL")
              << (c.informational ? " (informational)" : "") << " " << c.detail << "\n";
    if (!c.informational) all = all && c.passed;
  }
  return all ? 0 : 1;
}
