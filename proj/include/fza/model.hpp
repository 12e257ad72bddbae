#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fza/rational.hpp"

namespace fza {

using VertexId = int;
using EdgeId = int;

// Sorted, duplicate-free list of edge ids.
using CutSet = std::vector<EdgeId>;

// Fixed-size bitset over edge ids. Intersections are popcounts over words.
class EdgeSet {
public:
  EdgeSet() = default;
  explicit EdgeSet(int size);
  EdgeSet(int size, std::span<EdgeId const> ids);

  void set(EdgeId e);
  void reset(EdgeId e);
  void flip(EdgeId e);
  bool test(EdgeId e) const;

  int size() const { return size_; }
  int count() const;
  int count_common(EdgeSet const& other) const;
  bool is_subset_of(EdgeSet const& other) const;
  bool empty() const { return count() == 0; }
  CutSet ids() const;

  friend bool operator==(EdgeSet const&, EdgeSet const&) = default;

private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct Tree {
  int num_vertices = 1;
  std::vector<std::pair<VertexId, VertexId>> edges;  // edge id = index

  int num_edges() const { return static_cast<int>(edges.size()); }
};

// Adjacency and a BFS rooting at vertex 0. Construction validates the tree.
class TreeIndex {
public:
  explicit TreeIndex(Tree const& tree);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return static_cast<int>(endpoints_.size()); }

  std::vector<std::pair<VertexId, EdgeId>> const& neighbors(VertexId v) const {
    return adj_[v];
  }
  std::pair<VertexId, VertexId> endpoints(EdgeId e) const { return endpoints_[e]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }

  VertexId parent(VertexId v) const { return parent_[v]; }
  EdgeId parent_edge(VertexId v) const { return parent_edge_[v]; }
  int depth(VertexId v) const { return depth_[v]; }
  int height() const;

  // Edge ids of the unique s-t path, ordered from s to t.
  std::vector<EdgeId> path_edges(VertexId s, VertexId t) const;

  bool is_path() const;

  // For path graphs: edges ordered from the end vertex with the smaller id.
  std::vector<EdgeId> path_order() const;

  // Number of edges other than e between e and `root` (the distance used by
  // the modular offset candidates).
  std::vector<int> edge_depths(VertexId root) const;

private:
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj_;
  std::vector<std::pair<VertexId, VertexId>> endpoints_;
  std::vector<VertexId> parent_;
  std::vector<EdgeId> parent_edge_;
  std::vector<int> depth_;
};

struct PricingFunction {
  std::vector<Rational> values;  // f(0), f(1), ...

  Rational const& operator()(int x) const;
  int size() const { return static_cast<int>(values.size()); }
  bool has_base_revenue() const { return !values.empty() && values[0] > 0; }
};

// Throws invalid_input unless the table is non-negative, non-decreasing,
// concave and has at least `min_length` entries.
void validate_pricing(PricingFunction const& f, int min_length);

struct Commodity {
  VertexId source = 0;
  VertexId target = 0;
  int budget = 0;
  Rational weight{1};
};

struct Instance {
  Tree tree;
  PricingFunction pricing;
  std::vector<Commodity> commodities;

  // Derived by normalize().
  std::vector<EdgeSet> paths;
  std::shared_ptr<TreeIndex const> index;

  bool normalized() const {
    return index != nullptr && paths.size() == commodities.size();
  }
  int num_vertices() const { return tree.num_vertices; }
  int num_edges() const { return tree.num_edges(); }
  int num_commodities() const { return static_cast<int>(commodities.size()); }
  int path_length(int i) const { return paths[i].count(); }
};

struct SolveDiagnostics {
  std::size_t candidates = 0;
  double runtime_ms = 0.0;
  std::string detail_json;  // optional solver-specific dump
};

struct SolveResult {
  CutSet cuts;
  Rational revenue;
  std::vector<bool> served;
  std::string algorithm;
  std::optional<std::uint64_t> seed;
  SolveDiagnostics diagnostics;
};

struct Parameters {
  int u_max = 0;
  int p_max = 0;
  int congestion = 0;
};

std::vector<EdgeId> resolve_path(Tree const& tree, VertexId s, VertexId t);

// Validates the tree and pricing, resolves paths, clamps budgets to path
// length and merges commodities with equal (path, budget).
Instance normalize(Instance instance);

// Throws std::invalid_argument unless `instance` came out of normalize().
void require_normalized(Instance const& instance);

Rational revenue_of_commodity(Instance const& instance, int i, EdgeSet const& cuts);
Rational total_revenue(Instance const& instance, EdgeSet const& cuts);
Rational total_revenue(Instance const& instance, CutSet const& cuts);

// Revenue restricted to the listed commodities.
Rational revenue_of(Instance const& instance, std::span<int const> commodities,
                    EdgeSet const& cuts);

EdgeSet to_edge_set(Instance const& instance, CutSet const& cuts);

Parameters parameters(Instance const& instance);

// Builds a SolveResult with revenue and served flags recomputed from `cuts`.
SolveResult make_result(Instance const& instance, CutSet cuts, std::string algorithm,
                        std::optional<std::uint64_t> seed = std::nullopt);

// Smallest L with 2^L >= n (0 for n <= 1).
int ceil_log2(int n);

}  // namespace fza
