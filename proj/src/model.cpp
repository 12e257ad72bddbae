#include "fza/model.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "fza/errors.hpp"

namespace fza {

// EdgeSet

EdgeSet::EdgeSet(int size) : size_(size), words_((size + 63) / 64, 0) {}

EdgeSet::EdgeSet(int size, std::span<EdgeId const> ids) : EdgeSet(size) {
  for (auto e : ids) {
    set(e);
  }
}

void EdgeSet::set(EdgeId e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
void EdgeSet::reset(EdgeId e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
void EdgeSet::flip(EdgeId e) { words_[e >> 6] ^= std::uint64_t{1} << (e & 63); }
bool EdgeSet::test(EdgeId e) const { return (words_[e >> 6] >> (e & 63)) & 1U; }

int EdgeSet::count() const {
  int c = 0;
  for (auto w : words_) {
    c += std::popcount(w);
  }
  return c;
}

int EdgeSet::count_common(EdgeSet const& other) const {
  int c = 0;
  auto const n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    c += std::popcount(words_[i] & other.words_[i]);
  }
  return c;
}

bool EdgeSet::is_subset_of(EdgeSet const& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto const o = i < other.words_.size() ? other.words_[i] : 0;
    if ((words_[i] & ~o) != 0) {
      return false;
    }
  }
  return true;
}

CutSet EdgeSet::ids() const {
  CutSet out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<EdgeId>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

// TreeIndex

TreeIndex::TreeIndex(Tree const& tree) {
  auto const n = tree.num_vertices;
  if (n < 1) {
    throw invalid_input("tree needs at least one vertex");
  }
  if (tree.num_edges() != n - 1) {
    throw invalid_input("tree with " + std::to_string(n) + " vertices needs " +
                        std::to_string(n - 1) + " edges, got " +
                        std::to_string(tree.num_edges()));
  }
  adj_.resize(n);
  endpoints_ = tree.edges;
  std::map<std::pair<VertexId, VertexId>, EdgeId> seen;
  for (EdgeId e = 0; e < tree.num_edges(); ++e) {
    auto [u, v] = tree.edges[e];
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw invalid_input("edge " + std::to_string(e) + " has an invalid vertex id");
    }
    if (u == v) {
      throw invalid_input("edge " + std::to_string(e) + " is a self-loop");
    }
    if (!seen.emplace(std::minmax(u, v), e).second) {
      throw invalid_input("edge " + std::to_string(e) + " is a duplicate");
    }
    adj_[u].emplace_back(v, e);
    adj_[v].emplace_back(u, e);
  }
  for (auto& a : adj_) {
    std::sort(a.begin(), a.end());
  }

  parent_.assign(n, -1);
  parent_edge_.assign(n, -1);
  depth_.assign(n, -1);
  depth_[0] = 0;
  std::queue<VertexId> q;
  q.push(0);
  int reached = 1;
  while (!q.empty()) {
    auto const v = q.front();
    q.pop();
    for (auto [w, e] : adj_[v]) {
      if (depth_[w] < 0) {
        depth_[w] = depth_[v] + 1;
        parent_[w] = v;
        parent_edge_[w] = e;
        ++reached;
        q.push(w);
      }
    }
  }
  if (reached != n) {
    throw invalid_input("edge list is not connected (it contains a cycle)");
  }
}

int TreeIndex::height() const {
  return depth_.empty() ? 0 : *std::max_element(depth_.begin(), depth_.end());
}

std::vector<EdgeId> TreeIndex::path_edges(VertexId s, VertexId t) const {
  std::vector<EdgeId> from_s;
  std::vector<EdgeId> from_t;
  while (s != t) {
    if (depth_[s] >= depth_[t]) {
      from_s.push_back(parent_edge_[s]);
      s = parent_[s];
    } else {
      from_t.push_back(parent_edge_[t]);
      t = parent_[t];
    }
  }
  from_s.insert(from_s.end(), from_t.rbegin(), from_t.rend());
  return from_s;
}

bool TreeIndex::is_path() const {
  return std::all_of(adj_.begin(), adj_.end(),
                     [](auto const& a) { return a.size() <= 2; });
}

std::vector<EdgeId> TreeIndex::path_order() const {
  if (!is_path()) {
    throw invalid_input("tree is not a path");
  }
  std::vector<EdgeId> order;
  if (num_edges() == 0) {
    return order;
  }
  VertexId start = 0;
  while (degree(start) != 1) {
    ++start;
  }
  VertexId prev = -1;
  VertexId cur = start;
  while (static_cast<int>(order.size()) < num_edges()) {
    for (auto [w, e] : adj_[cur]) {
      if (w != prev) {
        order.push_back(e);
        prev = cur;
        cur = w;
        break;
      }
    }
  }
  return order;
}

std::vector<int> TreeIndex::edge_depths(VertexId root) const {
  std::vector<int> vdepth(num_vertices(), -1);
  std::vector<int> out(num_edges(), 0);
  std::queue<VertexId> q;
  vdepth[root] = 0;
  q.push(root);
  while (!q.empty()) {
    auto const v = q.front();
    q.pop();
    for (auto [w, e] : adj_[v]) {
      if (vdepth[w] < 0) {
        vdepth[w] = vdepth[v] + 1;
        out[e] = vdepth[v];
        q.push(w);
      }
    }
  }
  return out;
}

// Pricing

Rational const& PricingFunction::operator()(int x) const {
  if (x < 0 || x >= size()) {
    throw std::out_of_range("pricing table has no entry f(" + std::to_string(x) + ")");
  }
  return values[x];
}

void validate_pricing(PricingFunction const& f, int min_length) {
  if (f.size() < min_length) {
    throw invalid_input("pricing table needs at least " + std::to_string(min_length) +
                        " entries, got " + std::to_string(f.size()));
  }
  for (int x = 0; x < f.size(); ++x) {
    if (f.values[x] < 0) {
      throw invalid_input("pricing value f(" + std::to_string(x) + ") is negative");
    }
    if (x >= 1 && f.values[x] < f.values[x - 1]) {
      throw invalid_input("pricing table decreases at x=" + std::to_string(x));
    }
    if (x >= 2 && f.values[x] - f.values[x - 1] > f.values[x - 1] - f.values[x - 2]) {
      throw invalid_input("pricing table is not concave at x=" + std::to_string(x - 1));
    }
  }
}

// Instance

std::vector<EdgeId> resolve_path(Tree const& tree, VertexId s, VertexId t) {
  TreeIndex const index(tree);
  if (s < 0 || s >= tree.num_vertices || t < 0 || t >= tree.num_vertices) {
    throw invalid_input("commodity endpoint out of range");
  }
  if (s == t) {
    throw invalid_input("commodity endpoints coincide");
  }
  auto p = index.path_edges(s, t);
  std::sort(p.begin(), p.end());
  return p;
}

Instance normalize(Instance instance) {
  auto index = std::make_shared<TreeIndex const>(instance.tree);
  auto const n = instance.tree.num_vertices;
  validate_pricing(instance.pricing, n);

  std::vector<Commodity> merged;
  std::vector<EdgeSet> paths;
  std::map<std::tuple<VertexId, VertexId, int>, std::size_t> slot;
  for (auto const& c : instance.commodities) {
    if (c.source < 0 || c.source >= n || c.target < 0 || c.target >= n) {
      throw invalid_input("commodity endpoint out of range");
    }
    if (c.source == c.target) {
      throw invalid_input("commodity endpoints coincide (vertex " +
                          std::to_string(c.source) + ")");
    }
    if (c.budget < 0) {
      throw invalid_input("commodity budget is negative");
    }
    if (c.weight <= 0) {
      throw invalid_input("commodity weight must be positive");
    }
    auto const edges = index->path_edges(c.source, c.target);
    auto clamped = c;
    clamped.budget = std::min<int>(c.budget, static_cast<int>(edges.size()));
    auto const [lo, hi] = std::minmax(c.source, c.target);
    auto const [it, fresh] = slot.emplace(std::tuple{lo, hi, clamped.budget}, merged.size());
    if (fresh) {
      merged.push_back(clamped);
      paths.emplace_back(instance.tree.num_edges(), edges);
    } else {
      merged[it->second].weight += c.weight;
    }
  }
  // k is O(n^3) once (path, budget) pairs are distinct.
  assert(merged.size() <= static_cast<std::size_t>(n) * n * n);

  instance.commodities = std::move(merged);
  instance.paths = std::move(paths);
  instance.index = std::move(index);
  return instance;
}

void require_normalized(Instance const& instance) {
  if (!instance.normalized()) {
    throw std::invalid_argument("instance must be normalized first");
  }
}

Rational revenue_of_commodity(Instance const& instance, int i, EdgeSet const& cuts) {
  auto const z = instance.paths[i].count_common(cuts);
  auto const& c = instance.commodities[i];
  if (z > c.budget) {
    return 0;
  }
  return c.weight * instance.pricing(z);
}

Rational total_revenue(Instance const& instance, EdgeSet const& cuts) {
  Rational sum = 0;
  for (int i = 0; i < instance.num_commodities(); ++i) {
    sum += revenue_of_commodity(instance, i, cuts);
  }
  return sum;
}

Rational total_revenue(Instance const& instance, CutSet const& cuts) {
  return total_revenue(instance, to_edge_set(instance, cuts));
}

Rational revenue_of(Instance const& instance, std::span<int const> commodities,
                    EdgeSet const& cuts) {
  Rational sum = 0;
  for (auto i : commodities) {
    sum += revenue_of_commodity(instance, i, cuts);
  }
  return sum;
}

EdgeSet to_edge_set(Instance const& instance, CutSet const& cuts) {
  for (auto e : cuts) {
    if (e < 0 || e >= instance.num_edges()) {
      throw invalid_input("cut edge id " + std::to_string(e) + " out of range");
    }
  }
  return EdgeSet(instance.num_edges(), cuts);
}

Parameters parameters(Instance const& instance) {
  Parameters p;
  std::vector<int> load(instance.num_edges(), 0);
  for (int i = 0; i < instance.num_commodities(); ++i) {
    p.u_max = std::max(p.u_max, instance.commodities[i].budget);
    p.p_max = std::max(p.p_max, instance.path_length(i));
    for (auto e : instance.paths[i].ids()) {
      p.congestion = std::max(p.congestion, ++load[e]);
    }
  }
  return p;
}

SolveResult make_result(Instance const& instance, CutSet cuts, std::string algorithm,
                        std::optional<std::uint64_t> seed) {
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  auto const set = to_edge_set(instance, cuts);
  SolveResult r;
  r.served.resize(instance.num_commodities());
  r.revenue = 0;
  for (int i = 0; i < instance.num_commodities(); ++i) {
    r.served[i] = instance.paths[i].count_common(set) <= instance.commodities[i].budget;
    r.revenue += revenue_of_commodity(instance, i, set);
  }
  r.cuts = std::move(cuts);
  r.algorithm = std::move(algorithm);
  r.seed = seed;
  return r;
}

int ceil_log2(int n) {
  int l = 0;
  while ((1LL << l) < n) {
    ++l;
  }
  return l;
}

}  // namespace fza
