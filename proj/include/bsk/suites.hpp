#pragma once

#include "bsk/report.hpp"

#include <string>
#include <vector>

namespace bsk {

struct SuiteConfig {
  std::vector<long> k = {2, 3, 6};
  long z_max = 3;
  long i_max = 3;
  long m_max = 3;
  long ring_max = 20;
  std::vector<long> n_range = {-4, -3, -2, -1, 1, 2, 3, 4};
  long n_max = 8;
  long z_search = 200;
  long i_search = 8;
  unsigned long seed = 1;
  int samples = 200;
  bool mutate = false;
};

// Throws std::invalid_argument on a bad configuration.
void validate(const SuiteConfig& cfg);

std::vector<std::string> suite_names();  // facts, group, interp, definable, biinterp, nonstd

SuiteReport facts_suite(const SuiteConfig& cfg);
SuiteReport group_suite(long k, const SuiteConfig& cfg);
SuiteReport interp_suite(long k, const SuiteConfig& cfg);
SuiteReport definable_suite(long k, const SuiteConfig& cfg);
SuiteReport biinterp_suite(long k, const SuiteConfig& cfg);
SuiteReport nonstd_suite(long k, const SuiteConfig& cfg);

// One suite over every k of the config, or "all" with the per-suite reports under "suites".
nlohmann::ordered_json run_check(const std::string& name, const SuiteConfig& cfg);

}  // namespace bsk
