#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace bsk {

struct Violation {
  std::string instance;
  std::string expected;
  std::string got;
};

// Outcome of one verification sweep.
struct SuiteReport {
  std::string suite;
  std::vector<long> k;
  nlohmann::ordered_json box = nlohmann::ordered_json::object();
  long checked = 0;
  long skipped = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void check(bool pass, std::string instance, std::string expected, std::string got) {
    ++checked;
    if (!pass) violations.push_back({std::move(instance), std::move(expected), std::move(got)});
  }
  void merge(const SuiteReport& other) {
    checked += other.checked;
    skipped += other.skipped;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

nlohmann::ordered_json to_json(const SuiteReport& r);

}  // namespace bsk
