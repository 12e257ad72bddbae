#include "fza/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fza {

namespace {

using Adjacency = std::map<VertexId, std::vector<std::pair<VertexId, EdgeId>>>;

Adjacency local_adjacency(TreeIndex const& tree, std::vector<EdgeId> const& edges) {
  Adjacency adj;
  for (auto e : edges) {
    auto [u, v] = tree.endpoints(e);
    adj[u].emplace_back(v, e);
    adj[v].emplace_back(u, e);
  }
  for (auto& [v, a] : adj) {
    std::sort(a.begin(), a.end());
  }
  return adj;
}

bool within_bounds(std::size_t piece, std::size_t total, int d) {
  auto const dd = static_cast<std::size_t>(d);
  return 3 * dd * piece >= total && dd * piece <= 3 * total;
}

std::vector<std::vector<EdgeId>> carve(TreeIndex const& tree, Adjacency const& adj,
                                       VertexId root, std::size_t total, int d) {
  auto const k = (total + d - 1) / static_cast<std::size_t>(d);
  std::vector<VertexId> order{root};
  std::map<VertexId, VertexId> parent{{root, -1}};
  for (std::size_t h = 0; h < order.size(); ++h) {
    auto const v = order[h];
    for (auto [w, e] : adj.at(v)) {
      if (!parent.contains(w)) {
        parent[w] = v;
        order.push_back(w);
      }
    }
  }

  std::vector<std::vector<EdgeId>> pieces;
  std::map<VertexId, std::vector<EdgeId>> residual;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto const v = *it;
    std::vector<EdgeId> group;
    for (auto [c, e] : adj.at(v)) {
      if (c == parent[v]) {
        continue;
      }
      auto& bundle = residual[c];
      group.insert(group.end(), bundle.begin(), bundle.end());
      group.push_back(e);
      bundle.clear();
      if (group.size() >= k) {
        pieces.push_back(std::move(group));
        group.clear();
      }
    }
    residual[v] = std::move(group);
  }

  auto rest = std::move(residual[root]);
  if (!rest.empty()) {
    if (3 * static_cast<std::size_t>(d) * rest.size() >= total || pieces.empty()) {
      pieces.push_back(std::move(rest));
    } else {
      // Merge into the smallest piece sharing a vertex with the remainder.
      std::set<VertexId> touched;
      for (auto e : rest) {
        auto [u, v] = tree.endpoints(e);
        touched.insert(u);
        touched.insert(v);
      }
      int target = -1;
      for (int p = 0; p < static_cast<int>(pieces.size()); ++p) {
        bool adjacent = false;
        for (auto e : pieces[p]) {
          auto [u, v] = tree.endpoints(e);
          if (touched.contains(u) || touched.contains(v)) {
            adjacent = true;
            break;
          }
        }
        if (adjacent && (target < 0 || pieces[p].size() < pieces[target].size())) {
          target = p;
        }
      }
      pieces[target].insert(pieces[target].end(), rest.begin(), rest.end());
    }
  }
  for (auto& p : pieces) {
    std::sort(p.begin(), p.end());
  }
  std::sort(pieces.begin(), pieces.end());
  return pieces;
}

}  // namespace

std::vector<std::vector<EdgeId>> almost_balanced_decomposition(
    TreeIndex const& tree, std::vector<EdgeId> const& fragment, int d) {
  auto const total = fragment.size();
  if (d < 2 || total < static_cast<std::size_t>(d)) {
    throw std::invalid_argument("almost balanced decomposition needs d >= 2 and |E'| >= d");
  }
  auto const adj = local_adjacency(tree, fragment);
  for (auto const& [root, unused] : adj) {
    auto pieces = carve(tree, adj, root, total, d);
    bool ok = pieces.size() >= 2;
    for (auto const& p : pieces) {
      ok = ok && within_bounds(p.size(), total, d);
    }
    if (ok) {
      return pieces;
    }
  }
  if (total <= 3 * static_cast<std::size_t>(d)) {
    std::vector<std::vector<EdgeId>> singles;
    for (auto e : fragment) {
      singles.push_back({e});
    }
    std::sort(singles.begin(), singles.end());
    return singles;
  }
  throw std::logic_error("no almost balanced decomposition found for a fragment of " +
                         std::to_string(total) + " edges with d=" + std::to_string(d));
}

int default_branching(int num_vertices) {
  int d = 1;
  // Smallest d with d^2 >= log2 n, i.e. 2^(d^2) >= n.
  while (d * d < 31 && (1LL << (d * d)) < num_vertices) {
    ++d;
  }
  return std::max(2, d);
}

Decomposition build_decomposition(TreeIndex const& tree, std::optional<int> d) {
  Decomposition dec;
  dec.d = d.value_or(default_branching(tree.num_vertices()));
  if (dec.d < 2) {
    throw std::invalid_argument("branching parameter d must be at least 2");
  }
  if (tree.num_edges() == 0) {
    return dec;
  }
  Fragment whole;
  for (EdgeId e = 0; e < tree.num_edges(); ++e) {
    whole.edges.push_back(e);
  }
  dec.levels.push_back({whole});
  auto unfinished = [](std::vector<Fragment> const& level) {
    return std::any_of(level.begin(), level.end(),
                       [](Fragment const& f) { return f.edges.size() > 1; });
  };
  while (unfinished(dec.levels.back())) {
    auto& prev = dec.levels.back();
    std::vector<Fragment> next;
    for (int p = 0; p < static_cast<int>(prev.size()); ++p) {
      auto const& edges = prev[p].edges;
      std::vector<std::vector<EdgeId>> parts;
      if (edges.size() < static_cast<std::size_t>(dec.d)) {
        for (auto e : edges) {
          parts.push_back({e});
        }
      } else {
        parts = almost_balanced_decomposition(tree, edges, dec.d);
      }
      for (auto& part : parts) {
        prev[p].children.push_back(static_cast<int>(next.size()));
        next.push_back({std::move(part), p, {}});
      }
    }
    dec.levels.push_back(std::move(next));
  }
  return dec;
}

CommodityAssignment classify_commodities(Decomposition const& dec, Instance const& instance) {
  require_normalized(instance);
  auto const levels = dec.num_levels();
  std::vector<std::vector<int>> frag_of(levels, std::vector<int>(instance.num_edges(), -1));
  for (int l = 0; l < levels; ++l) {
    for (int f = 0; f < static_cast<int>(dec.levels[l].size()); ++f) {
      for (auto e : dec.levels[l][f].edges) {
        frag_of[l][e] = f;
      }
    }
  }
  CommodityAssignment out;
  out.by_fragment.resize(levels);
  for (int l = 0; l < levels; ++l) {
    out.by_fragment[l].resize(dec.levels[l].size());
  }
  for (int i = 0; i < instance.num_commodities(); ++i) {
    auto const path = instance.paths[i].ids();
    if (path.size() == 1) {
      out.level_of.push_back(extra_class);
      out.fragment_of.push_back(-1);
      out.extra.push_back(i);
      continue;
    }
    int level = 0;
    while (level + 1 < levels &&
           std::all_of(path.begin(), path.end(), [&](EdgeId e) {
             return frag_of[level + 1][e] == frag_of[level + 1][path.front()];
           })) {
      ++level;
    }
    auto const frag = frag_of[level][path.front()];
    out.level_of.push_back(level);
    out.fragment_of.push_back(frag);
    out.by_fragment[level][frag].push_back(i);
  }
  return out;
}

SkeletonInfo compute_skeleton(TreeIndex const& tree, std::vector<EdgeId> const& fragment,
                              std::vector<std::vector<EdgeId>> const& children) {
  SkeletonInfo info;
  std::map<VertexId, int> membership;
  for (auto const& child : children) {
    std::set<VertexId> vs;
    for (auto e : child) {
      auto [u, v] = tree.endpoints(e);
      vs.insert(u);
      vs.insert(v);
    }
    for (auto v : vs) {
      ++membership[v];
    }
  }
  std::set<VertexId> border;
  for (auto [v, c] : membership) {
    if (c >= 2) {
      border.insert(v);
    }
  }
  info.border.assign(border.begin(), border.end());

  // Prune non-border leaves until only the span of the border remains.
  auto adj = local_adjacency(tree, fragment);
  std::map<VertexId, int> degree;
  for (auto const& [v, a] : adj) {
    degree[v] = static_cast<int>(a.size());
  }
  std::set<EdgeId> removed;
  std::set<VertexId> gone;
  std::vector<VertexId> leaves;
  for (auto const& [v, deg] : degree) {
    if (deg <= 1 && !border.contains(v)) {
      leaves.push_back(v);
    }
  }
  while (!leaves.empty()) {
    auto const v = leaves.back();
    leaves.pop_back();
    if (gone.contains(v)) {
      continue;
    }
    gone.insert(v);
    for (auto [w, e] : adj[v]) {
      if (removed.insert(e).second) {
        if (--degree[w] <= 1 && !border.contains(w) && !gone.contains(w)) {
          leaves.push_back(w);
        }
      }
    }
  }
  std::map<VertexId, std::vector<std::pair<VertexId, EdgeId>>> skel;
  for (auto e : fragment) {
    if (!removed.contains(e)) {
      info.edges.push_back(e);
      auto [u, v] = tree.endpoints(e);
      skel[u].emplace_back(v, e);
      skel[v].emplace_back(u, e);
    }
  }
  std::sort(info.edges.begin(), info.edges.end());
  std::set<VertexId> verts(border.begin(), border.end());
  for (auto const& [v, a] : skel) {
    verts.insert(v);
  }
  info.vertices.assign(verts.begin(), verts.end());
  for (auto& [v, a] : skel) {
    std::sort(a.begin(), a.end());
    if (!border.contains(v) && a.size() >= 3) {
      info.junctions.push_back(v);
    }
  }

  auto terminal = [&](VertexId v) {
    return border.contains(v) ||
           std::binary_search(info.junctions.begin(), info.junctions.end(), v);
  };
  std::set<EdgeId> walked;
  for (auto const& [start, a] : skel) {
    if (!terminal(start)) {
      continue;
    }
    for (auto [next, e0] : a) {
      if (walked.contains(e0)) {
        continue;
      }
      Segment seg;
      seg.vertices.push_back(start);
      VertexId prev = start;
      VertexId cur = next;
      EdgeId e = e0;
      while (true) {
        walked.insert(e);
        seg.edges.push_back(e);
        seg.vertices.push_back(cur);
        if (terminal(cur)) {
          break;
        }
        for (auto [w, f] : skel[cur]) {
          if (w != prev) {
            prev = cur;
            cur = w;
            e = f;
            break;
          }
        }
      }
      info.segments.push_back(std::move(seg));
    }
  }
  std::sort(info.segments.begin(), info.segments.end(),
            [](Segment const& x, Segment const& y) {
              return *std::min_element(x.edges.begin(), x.edges.end()) <
                     *std::min_element(y.edges.begin(), y.edges.end());
            });
  return info;
}

}  // namespace fza
