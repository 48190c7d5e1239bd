#pragma once

// Enumeration drivers behind `modeta verify`: each property is checked over
// all small forms and classes within the configured bounds.

#include <cstdint>
#include <string>
#include <vector>

namespace modeta {

struct VerifyConfig {
  int max_rank = 4;
  int max_coord = 3;
  std::uint64_t seed = 20211;
};

struct PropertyResult {
  std::string name;
  std::int64_t checked = 0;
  std::int64_t failed = 0;
  std::string first_failure;
};

std::vector<PropertyResult> run_property_suites(const VerifyConfig& config);

}  // namespace modeta
