#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace props {

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  bool ok() const { return cases > 0 && failures == 0; }
};

PropertyResult tensor_balance(std::uint64_t seed, int cases);
PropertyResult associator(std::uint64_t seed, int cases);
PropertyResult unit_constraint(std::uint64_t seed, int cases);
PropertyResult frobenius_invariants(std::uint64_t seed, int cases);
PropertyResult graded_construction(std::uint64_t seed, int cases);
PropertyResult symmetric_agreement(std::uint64_t seed, int cases);

std::vector<PropertyResult> all_properties(std::uint64_t seed, int cases);

}  // namespace props
