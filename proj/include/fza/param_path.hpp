#pragma once

#include <cstdint>

#include "fza/model.hpp"

namespace fza {

// Exact path solvers. Each refuses (capacity_exceeded) when its table bound
// exceeds the budget and throws invalid_input on a non-path tree.

// Sliding window of the u_max+1 rightmost cuts; bound n^(u_max+2).
SolveResult dp_umax(Instance const& instance, std::uint64_t table_budget = 10'000'000);

// Cut pattern of the last p_max edges; bound 2^p_max.
SolveResult dp_pmax(Instance const& instance, std::uint64_t window_budget = 1U << 22);

// Slack vector over commodities crossing the current edge; bound
// max_j prod (u_i + 3).
SolveResult dp_congestion(Instance const& instance, std::uint64_t table_budget = 10'000'000);

}  // namespace fza
