#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fza/model.hpp"

namespace fza {

struct SolveOptions {
  std::uint64_t seed = 0;
  std::optional<VertexId> root;  // rooted, gen-rooted-path
  std::optional<int> cuts;       // gen-rooted-path only
  bool diagnostics = false;
};

std::vector<std::string> const& algorithm_names();
bool is_randomized(std::string const& algorithm);

// Runs the named algorithm on a normalized instance. Unknown names and
// missing required options throw invalid_input.
SolveResult solve_by_name(std::string const& algorithm, Instance const& instance,
                          SolveOptions const& options = {});

}  // namespace fza
