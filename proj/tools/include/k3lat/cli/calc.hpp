#pragma once

#include <string>
#include <vector>

namespace k3lat::cli {

struct CalcOp {
  std::string name;
  std::string usage;  // argument names, e.g. "g k"
  std::string description;
};

// Numerology operations available to `k3lat calc`, sorted by name.
const std::vector<CalcOp>& calc_operations();

// Evaluates one operation on decimal arguments and returns the printed result.
// Throws std::invalid_argument for unknown operations or malformed arguments; k3lat::Error propagates.
std::string run_calc(const std::string& op, const std::vector<std::string>& args);

}  // namespace k3lat::cli
