#pragma once

#include <optional>
#include <vector>

#include "fza/model.hpp"

namespace fza {

inline constexpr int brute_force_max_edges = 24;

// Exhaustive search over all 2^|E| cut sets. Ties go to the lexicographically
// smallest sorted edge-id list. Throws capacity_exceeded above 24 edges.
SolveResult brute_force(Instance const& instance);

// A commodity of a rooted sub-problem: path from the root to `vertex`.
struct RootedTarget {
  VertexId vertex = 0;
  int budget = 0;
  Rational weight;
};

struct RootedSolution {
  CutSet cuts;
  Rational value;
};

// Exact DP on the subtree reachable from `root` through edges in `allowed`.
// Cuts are confined to that subtree; ties prefer not cutting.
RootedSolution solve_rooted(TreeIndex const& tree, EdgeSet const& allowed, VertexId root,
                            std::vector<RootedTarget> const& targets,
                            PricingFunction const& pricing);

// Requires every commodity to have `root` as an endpoint.
SolveResult rooted_dp(Instance const& instance, VertexId root);

struct GeneralizedPathCommodity {
  int end = 1;  // number of path edges covered, counted from the root
  int budget = 0;
  Rational weight{1};
  std::vector<Rational> pricing;  // f_i(0..), at least budget+1 entries
};

// Path with edge positions 0..num_edges-1 counted from the root; every
// commodity starts at the root.
struct GeneralizedPathInstance {
  int num_edges = 0;
  std::vector<GeneralizedPathCommodity> commodities;
};

struct GeneralizedPathSolution {
  std::vector<int> cut_positions;  // ascending
  Rational revenue;
};

// Best cut set with exactly y cuts. Throws invalid_input for y outside
// [0, num_edges] or a malformed commodity.
GeneralizedPathSolution generalized_rooted_path_dp(GeneralizedPathInstance const& gpi,
                                                   int y);

Rational generalized_revenue(GeneralizedPathInstance const& gpi,
                             std::vector<int> const& cut_positions);

// Path instance rooted at an end vertex, shared pricing table.
GeneralizedPathInstance to_generalized(Instance const& instance, VertexId root,
                                       std::vector<EdgeId>* position_to_edge = nullptr);

}  // namespace fza
