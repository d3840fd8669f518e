#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k3lat/cli/report.hpp"
#include "k3lat/cli/scenario.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat::cli {

struct RunOptions {
  std::optional<Integer> max_degree;
  bool timing = true;
};

// Linear combination of basis labels and named classes, e.g. "L - 2E + 3*G1" or "0".
// Throws std::invalid_argument with a column-free message on malformed input.
DivisorClass parse_class_expression(const LatticePtr& lattice, std::string_view text,
                                    const std::map<std::string, DivisorClass>& named = {});

// Names of the operations usable in assertions, sorted.
std::vector<std::string> operation_names();

// Resolves every declaration and assertion first (ScenarioError on failure), then evaluates the
// assertions in order.
Report run_scenario(std::string_view text, const std::string& source, const RunOptions& options);

}  // namespace k3lat::cli
