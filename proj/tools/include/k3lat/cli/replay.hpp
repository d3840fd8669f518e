#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3lat/cli/report.hpp"
#include "k3lat/named_lattices.hpp"

namespace k3lat::cli {

struct ReplayOptions {
  std::uint64_t seed = 20240611;
  int vectors_per_genus = 3;  // d-vectors per genus for the Omega checks; the first one is fixed
  std::optional<Integer> max_degree;
  bool timing = true;
};

struct Selector {
  std::string name;
  std::vector<std::string> aliases;
  std::string description;
};

// Every built-in check group, in replay order.
const std::vector<Selector>& replay_selectors();

// Canonical selector name for a name or alias; "all" maps to itself.
std::optional<std::string> resolve_selector(const std::string& name);

// Throws std::invalid_argument for an unknown selector.
Report replay(const std::string& selector, const ReplayOptions& options = {});

// Odd genera covered by the Omega checks.
const std::vector<int>& replay_genera();

// Admissible d-vectors used for genus g: the first has every entry equal to min(3, L.E - 1) except
// d8 = 1, the others are drawn from the seeded generator.
std::vector<OmegaParams> replay_omega_params(int g, const ReplayOptions& options);

}  // namespace k3lat::cli
