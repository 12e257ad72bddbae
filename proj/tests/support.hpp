#pragma once

// Test-side oracles. They read only the raw instance fields and share no
// path, revenue or enumeration code with the library.

#include <cstdint>
#include <bit>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "fza/exact.hpp"
#include "fza/generators.hpp"
#include "fza/model.hpp"

namespace fza::test {

inline PricingFunction table(std::vector<int> const& xs) {
  PricingFunction f;
  for (auto x : xs) {
    f.values.emplace_back(x);
  }
  return f;
}

// 13 vertices v1..v13 as ids 0..12; 8 unit-weight commodities.
inline Instance fig1(bool affine) {
  Instance inst;
  inst.tree.num_vertices = 13;
  inst.tree.edges = {{0, 1}, {1, 2},  {3, 4},  {4, 5}, {7, 8}, {8, 9},
                     {10, 11}, {11, 12}, {2, 6}, {6, 10}, {5, 6}, {6, 7}};
  inst.pricing = make_pricing(affine ? PricingPreset::affine : PricingPreset::linear, 13);
  inst.commodities = {{1, 8, 0, Rational(1)}, {0, 8, 0, Rational(1)}, {1, 9, 1, Rational(1)},
                      {0, 3, 1, Rational(1)}, {3, 9, 5, Rational(1)}, {3, 9, 3, Rational(1)},
                      {3, 12, 3, Rational(1)}, {9, 12, 4, Rational(1)}};
  return inst;
}

// Edge ids on the s-t path, by depth-first search over the raw edge list.
inline std::vector<int> oracle_path(Tree const& tree, int s, int t) {
  std::vector<std::vector<std::pair<int, int>>> adj(tree.num_vertices);
  for (int e = 0; e < tree.num_edges(); ++e) {
    adj[tree.edges[e].first].emplace_back(tree.edges[e].second, e);
    adj[tree.edges[e].second].emplace_back(tree.edges[e].first, e);
  }
  std::vector<int> via(tree.num_vertices, -2);
  std::vector<int> from(tree.num_vertices, -1);
  std::vector<int> stack{s};
  via[s] = -1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto [w, e] : adj[v]) {
      if (via[w] == -2) {
        via[w] = e;
        from[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> path;
  for (int v = t; v != s; v = from[v]) {
    path.push_back(via[v]);
  }
  return path;
}

inline Rational oracle_revenue(Instance const& raw, std::vector<bool> const& cut) {
  Rational total = 0;
  for (auto const& c : raw.commodities) {
    int z = 0;
    for (auto e : oracle_path(raw.tree, c.source, c.target)) {
      z += cut[e] ? 1 : 0;
    }
    if (z <= c.budget) {
      total += c.weight * raw.pricing.values[z];
    }
  }
  return total;
}

// Maximum revenue over all 2^|E| cut sets.
inline Rational oracle_opt(Instance const& raw) {
  auto const m = raw.tree.num_edges();
  std::vector<std::vector<int>> paths;
  for (auto const& c : raw.commodities) {
    paths.push_back(oracle_path(raw.tree, c.source, c.target));
  }
  Rational best = 0;
  bool first = true;
  std::vector<bool> cut(m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    for (int e = 0; e < m; ++e) {
      cut[e] = ((mask >> e) & 1U) != 0;
    }
    Rational total = 0;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      int z = 0;
      for (auto e : paths[i]) {
        z += cut[e] ? 1 : 0;
      }
      if (z <= raw.commodities[i].budget) {
        total += raw.commodities[i].weight * raw.pricing.values[z];
      }
    }
    if (first || total > best) {
      best = total;
      first = false;
    }
  }
  return best;
}

inline Rational oracle_gpi_revenue(GeneralizedPathInstance const& gpi,
                                   std::vector<bool> const& cut_at) {
  Rational total = 0;
  for (auto const& c : gpi.commodities) {
    int z = 0;
    for (int p = 1; p <= c.end; ++p) {
      z += cut_at[p] ? 1 : 0;
    }
    if (z <= c.budget) {
      total += c.weight * c.pricing[z];
    }
  }
  return total;
}

// Best revenue over all cut sets with exactly y edges.
inline Rational oracle_gpi_opt(GeneralizedPathInstance const& gpi, int y) {
  auto const m = gpi.num_edges;
  std::optional<Rational> best;
  std::vector<bool> cut_at(m + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (std::popcount(mask) != y) {
      continue;
    }
    for (int p = 1; p <= m; ++p) {
      cut_at[p] = ((mask >> (p - 1)) & 1U) != 0;
    }
    auto const r = oracle_gpi_revenue(gpi, cut_at);
    if (!best || r > *best) {
      best = r;
    }
  }
  return *best;
}

// Non-negative, non-decreasing, concave table of the given length.
inline std::vector<Rational> random_concave_table(std::mt19937_64& rng, int length) {
  std::uniform_int_distribution<int> start(0, 2);
  std::vector<Rational> t{Rational(start(rng))};
  int step = std::uniform_int_distribution<int>(0, 4)(rng);
  for (int x = 1; x < length; ++x) {
    t.push_back(t.back() + step);
    step = std::uniform_int_distribution<int>(0, step)(rng);
  }
  return t;
}

inline GeneralizedPathInstance random_gpi(std::mt19937_64& rng, int num_edges, int k) {
  GeneralizedPathInstance gpi;
  gpi.num_edges = num_edges;
  for (int i = 0; i < k; ++i) {
    GeneralizedPathCommodity c;
    c.end = std::uniform_int_distribution<int>(1, num_edges)(rng);
    c.budget = std::uniform_int_distribution<int>(0, c.end)(rng);
    c.weight = Rational(std::uniform_int_distribution<int>(1, 4)(rng),
                        std::uniform_int_distribution<int>(1, 3)(rng));
    c.weight.canonicalize();
    c.pricing = random_concave_table(rng, c.end + 1);
    gpi.commodities.push_back(std::move(c));
  }
  return gpi;
}

// Path 0-1-...-(n-1) with edge p = (p, p+1). Commodities have length at most
// max_len, budget at most max_budget, and edge load at most max_load.
inline Instance random_path_instance(std::mt19937_64& rng, int n, int k, int max_len,
                                     int max_budget, int max_load, PricingPreset preset) {
  Instance inst;
  inst.tree.num_vertices = n;
  for (int v = 0; v + 1 < n; ++v) {
    inst.tree.edges.emplace_back(v, v + 1);
  }
  inst.pricing = make_pricing(preset, n);
  std::vector<int> load(n - 1, 0);
  for (int attempt = 0; attempt < 20 * k && static_cast<int>(inst.commodities.size()) < k;
       ++attempt) {
    auto const len = std::uniform_int_distribution<int>(1, std::min(max_len, n - 1))(rng);
    auto const s = std::uniform_int_distribution<int>(0, n - 1 - len)(rng);
    bool fits = true;
    for (int e = s; e < s + len; ++e) {
      fits = fits && load[e] < max_load;
    }
    if (!fits) {
      continue;
    }
    for (int e = s; e < s + len; ++e) {
      ++load[e];
    }
    auto const u = std::uniform_int_distribution<int>(0, std::min(len, max_budget))(rng);
    auto const w = std::uniform_int_distribution<int>(1, 3)(rng);
    bool flip = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    inst.commodities.push_back(
        {flip ? s + len : s, flip ? s : s + len, u, Rational(w)});
  }
  return inst;
}

struct MeanStat {
  double mean = 0;
  double stderr_ = 0;
};

inline MeanStat mean_and_stderr(std::vector<double> const& xs) {
  MeanStat s;
  for (auto x : xs) {
    s.mean += x;
  }
  s.mean /= static_cast<double>(xs.size());
  double var = 0;
  for (auto x : xs) {
    var += (x - s.mean) * (x - s.mean);
  }
  if (xs.size() > 1) {
    var /= static_cast<double>(xs.size() - 1);
  }
  s.stderr_ = std::sqrt(var / static_cast<double>(xs.size()));
  return s;
}

inline std::vector<bool> mask_of(int num_edges, CutSet const& cuts) {
  std::vector<bool> m(num_edges, false);
  for (auto e : cuts) {
    m[e] = true;
  }
  return m;
}

}  // namespace fza::test
