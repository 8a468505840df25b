#ifndef MW_SCENARIOS_HPP
#define MW_SCENARIOS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mw/json_io.hpp"

namespace mw {

struct ScenarioInfo {
  std::string name;
  std::string description;
};

struct ScenarioOptions {
  std::uint64_t seed = 0;
  std::size_t budget = 1000;
};

/// ex2.7, ex3.7, ex3.13.
std::vector<ScenarioInfo> scenarios();

/// Runs a built-in scenario and returns its report. Every report carries a
/// boolean "reproduced" that is true iff all expected outcomes were observed.
/// Throws FormatError for an unknown name.
Json run_scenario(const std::string& name, const ScenarioOptions& options = {});

}  // namespace mw

#endif  // MW_SCENARIOS_HPP
