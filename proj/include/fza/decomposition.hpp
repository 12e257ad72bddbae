#pragma once

#include <optional>
#include <vector>

#include "fza/model.hpp"

namespace fza {

struct Fragment {
  std::vector<EdgeId> edges;  // ascending
  int parent = -1;            // index into the previous level
  std::vector<int> children;  // indices into the next level
};

// levels[0] = {E}; each level partitions E and refines the previous one; the
// last level consists of single edges.
struct Decomposition {
  int d = 2;
  std::vector<std::vector<Fragment>> levels;

  int num_levels() const { return static_cast<int>(levels.size()); }
};

// Edge-disjoint connected pieces of a connected fragment with |E'| >= d, each
// of size in [|E'|/(3d), 3|E'|/d]. Throws std::logic_error if no carving
// meets the bounds.
std::vector<std::vector<EdgeId>> almost_balanced_decomposition(
    TreeIndex const& tree, std::vector<EdgeId> const& fragment, int d);

// max(2, ceil(sqrt(log2 n))).
int default_branching(int num_vertices);

Decomposition build_decomposition(TreeIndex const& tree, std::optional<int> d = std::nullopt);

inline constexpr int extra_class = -1;

struct CommodityAssignment {
  std::vector<int> level_of;     // 0-based level, or extra_class for |P| = 1
  std::vector<int> fragment_of;  // fragment index on that level
  std::vector<std::vector<std::vector<int>>> by_fragment;  // [level][fragment]
  std::vector<int> extra;
};

// Commodity i lands on the deepest level whose fragment contains every edge
// of P_i. Single-edge paths go to the extra class.
CommodityAssignment classify_commodities(Decomposition const& dec, Instance const& instance);

struct Segment {
  std::vector<VertexId> vertices;  // terminal ... terminal
  std::vector<EdgeId> edges;       // edges[q] joins vertices[q], vertices[q+1]
};

struct SkeletonInfo {
  std::vector<VertexId> border;
  std::vector<VertexId> vertices;  // skeleton vertices, ascending
  std::vector<EdgeId> edges;       // skeleton edges, ascending
  std::vector<VertexId> junctions;
  std::vector<Segment> segments;
};

SkeletonInfo compute_skeleton(TreeIndex const& tree, std::vector<EdgeId> const& fragment,
                              std::vector<std::vector<EdgeId>> const& children);

}  // namespace fza
