#include "fza/exact.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>

#include "fza/errors.hpp"

namespace fza {

namespace {

// True if the sorted id list of `a` is lexicographically smaller than `b`'s.
bool lex_less(std::uint32_t a, std::uint32_t b) {
  auto const diff = a ^ b;
  if (diff == 0) {
    return false;
  }
  auto const d = std::countr_zero(diff);
  auto const above = ~((std::uint32_t{2} << d) - 1);
  if ((a >> d) & 1U) {
    return (b & above) != 0;
  }
  return (a & above) == 0;
}

CutSet mask_ids(std::uint32_t mask) {
  CutSet out;
  for (; mask != 0; mask &= mask - 1) {
    out.push_back(std::countr_zero(mask));
  }
  return out;
}

// Per-commodity value tables val[i][z]; 0 once z exceeds the budget.
template <typename Value>
std::uint32_t gray_search(Instance const& instance,
                          std::vector<std::vector<Value>> const& val) {
  auto const m = instance.num_edges();
  auto const k = instance.num_commodities();
  std::vector<std::vector<int>> through(m);
  for (int i = 0; i < k; ++i) {
    for (auto e : instance.paths[i].ids()) {
      through[e].push_back(i);
    }
  }
  std::vector<int> z(k, 0);
  Value cur = 0;
  for (int i = 0; i < k; ++i) {
    cur += val[i][0];
  }
  Value best = cur;
  std::uint32_t best_mask = 0;
  std::uint32_t mask = 0;
  auto const total = std::uint64_t{1} << m;
  for (std::uint64_t step = 1; step < total; ++step) {
    auto const e = std::countr_zero(step);
    mask ^= std::uint32_t{1} << e;
    int const delta = ((mask >> e) & 1U) ? 1 : -1;
    for (auto i : through[e]) {
      cur -= val[i][z[i]];
      z[i] += delta;
      cur += val[i][z[i]];
    }
    if (cur > best || (cur == best && lex_less(mask, best_mask))) {
      best = cur;
      best_mask = mask;
    }
  }
  return best_mask;
}

}  // namespace

SolveResult brute_force(Instance const& instance) {
  require_normalized(instance);
  auto const m = instance.num_edges();
  if (m > brute_force_max_edges) {
    throw capacity_exceeded("brute force refuses " + std::to_string(m) + " edges (limit " +
                            std::to_string(brute_force_max_edges) + ")");
  }
  auto const k = instance.num_commodities();
  std::vector<std::vector<Rational>> val(k);
  mpz_class scale = 1;
  for (int i = 0; i < k; ++i) {
    auto const& c = instance.commodities[i];
    auto const len = instance.path_length(i);
    val[i].assign(len + 1, Rational(0));
    for (int x = 0; x <= std::min(c.budget, len); ++x) {
      val[i][x] = c.weight * instance.pricing(x);
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), val[i][x].get_den_mpz_t());
    }
  }

  // Integer fast path when the scaled maximum total fits comfortably.
  mpz_class bound = 0;
  for (auto const& row : val) {
    Rational top = *std::max_element(row.begin(), row.end());
    mpz_class const scaled = top.get_num() * (scale / top.get_den());
    bound += scaled;
  }
  std::uint32_t best_mask = 0;
  if (bound < mpz_class(std::numeric_limits<std::int64_t>::max() / 4)) {
    std::vector<std::vector<std::int64_t>> ival(k);
    for (int i = 0; i < k; ++i) {
      for (auto const& v : val[i]) {
        mpz_class const s = v.get_num() * (scale / v.get_den());
        ival[i].push_back(s.get_si());
      }
    }
    best_mask = gray_search(instance, ival);
  } else {
    best_mask = gray_search(instance, val);
  }
  auto r = make_result(instance, mask_ids(best_mask), "brute");
  r.diagnostics.candidates = std::size_t{1} << m;
  return r;
}

RootedSolution solve_rooted(TreeIndex const& tree, EdgeSet const& allowed, VertexId root,
                            std::vector<RootedTarget> const& targets,
                            PricingFunction const& pricing) {
  auto const n = tree.num_vertices();
  std::vector<int> depth(n, -1);
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> children(n);
  std::vector<VertexId> order;
  depth[root] = 0;
  order.push_back(root);
  for (std::size_t h = 0; h < order.size(); ++h) {
    auto const v = order[h];
    for (auto [w, e] : tree.neighbors(v)) {
      if (allowed.test(e) && depth[w] < 0) {
        depth[w] = depth[v] + 1;
        children[v].emplace_back(w, e);
        order.push_back(w);
      }
    }
  }
  std::vector<std::vector<int>> at(n);
  for (int i = 0; i < static_cast<int>(targets.size()); ++i) {
    auto const v = targets[i].vertex;
    if (depth[v] < 0) {
      throw std::invalid_argument("rooted target outside the allowed subtree");
    }
    at[v].push_back(i);
  }

  // R[v][x]: best revenue inside T[v] given x cuts on the root-v path.
  std::vector<std::vector<Rational>> R(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto const v = *it;
    auto& row = R[v];
    row.assign(depth[v] + 1, Rational(0));
    for (int x = 0; x <= depth[v]; ++x) {
      for (auto i : at[v]) {
        if (x <= targets[i].budget) {
          row[x] += targets[i].weight * pricing(x);
        }
      }
      for (auto [c, e] : children[v]) {
        row[x] += std::max(R[c][x], R[c][x + 1]);
      }
    }
  }

  RootedSolution out;
  out.value = R[root][0];
  std::vector<std::pair<VertexId, int>> stack{{root, 0}};
  while (!stack.empty()) {
    auto const [v, x] = stack.back();
    stack.pop_back();
    for (auto [c, e] : children[v]) {
      if (R[c][x + 1] > R[c][x]) {
        out.cuts.push_back(e);
        stack.emplace_back(c, x + 1);
      } else {
        stack.emplace_back(c, x);
      }
    }
  }
  std::sort(out.cuts.begin(), out.cuts.end());
  return out;
}

SolveResult rooted_dp(Instance const& instance, VertexId root) {
  require_normalized(instance);
  if (root < 0 || root >= instance.num_vertices()) {
    throw invalid_input("root vertex out of range");
  }
  std::vector<RootedTarget> targets;
  for (auto const& c : instance.commodities) {
    if (c.source != root && c.target != root) {
      throw invalid_input("commodity " + std::to_string(c.source) + "-" +
                          std::to_string(c.target) + " does not touch root " +
                          std::to_string(root));
    }
    targets.push_back({c.source == root ? c.target : c.source, c.budget, c.weight});
  }
  EdgeSet all(instance.num_edges());
  for (EdgeId e = 0; e < instance.num_edges(); ++e) {
    all.set(e);
  }
  auto sol = solve_rooted(*instance.index, all, root, targets, instance.pricing);
  auto r = make_result(instance, std::move(sol.cuts), "rooted");
  r.diagnostics.candidates = 1;
  return r;
}

GeneralizedPathSolution generalized_rooted_path_dp(GeneralizedPathInstance const& gpi,
                                                   int y) {
  auto const L = gpi.num_edges;
  if (y < 0 || y > L) {
    throw invalid_input("cut count " + std::to_string(y) + " outside [0, " +
                        std::to_string(L) + "]");
  }
  std::vector<std::vector<int>> ending(L + 1);
  for (int i = 0; i < static_cast<int>(gpi.commodities.size()); ++i) {
    auto const& c = gpi.commodities[i];
    if (c.end < 1 || c.end > L) {
      throw invalid_input("commodity end position out of range");
    }
    if (c.budget < 0 || c.weight <= 0) {
      throw invalid_input("commodity budget or weight out of range");
    }
    validate_pricing(PricingFunction{c.pricing}, std::min(c.budget, c.end) + 1);
    ending[c.end].push_back(i);
  }
  auto gain = [&](int k, int x) {
    Rational g = 0;
    for (auto i : ending[k]) {
      auto const& c = gpi.commodities[i];
      if (x <= c.budget) {
        g += c.weight * c.pricing[x];
      }
    }
    return g;
  };

  // R[k][x]: best revenue from vertices k..L given x cuts before vertex k.
  using Cell = std::optional<Rational>;
  std::vector<std::vector<Cell>> R(L + 1);
  R[L].assign(std::min(L, y) + 1, std::nullopt);
  R[L][y] = gain(L, y);
  for (int k = L - 1; k >= 0; --k) {
    auto const top = std::min(k, y);
    R[k].assign(top + 1, std::nullopt);
    auto const& next = R[k + 1];
    for (int x = 0; x <= top; ++x) {
      Cell const& keep = next[x];
      Cell const& cut = x + 1 < static_cast<int>(next.size()) ? next[x + 1] : std::nullopt;
      Cell const* best = &keep;
      if (cut && (!keep || *cut > *keep)) {
        best = &cut;
      }
      if (*best) {
        R[k][x] = gain(k, x) + **best;
      }
    }
  }

  GeneralizedPathSolution out;
  out.revenue = *R[0][0];
  int x = 0;
  for (int k = 0; k < L; ++k) {
    auto const& next = R[k + 1];
    bool const can_cut = x + 1 < static_cast<int>(next.size()) && next[x + 1];
    bool const can_keep = x < static_cast<int>(next.size()) && next[x];
    if (can_cut && (!can_keep || *next[x + 1] > *next[x])) {
      out.cut_positions.push_back(k);
      ++x;
    }
  }
  return out;
}

Rational generalized_revenue(GeneralizedPathInstance const& gpi,
                             std::vector<int> const& cut_positions) {
  Rational sum = 0;
  for (auto const& c : gpi.commodities) {
    auto const z = static_cast<int>(
        std::count_if(cut_positions.begin(), cut_positions.end(),
                      [&](int p) { return p < c.end; }));
    if (z <= c.budget) {
      sum += c.weight * c.pricing.at(z);
    }
  }
  return sum;
}

GeneralizedPathInstance to_generalized(Instance const& instance, VertexId root,
                                       std::vector<EdgeId>* position_to_edge) {
  require_normalized(instance);
  auto const& tree = *instance.index;
  if (!tree.is_path()) {
    throw invalid_input("tree is not a path");
  }
  if (root < 0 || root >= tree.num_vertices() || tree.degree(root) > 1) {
    throw invalid_input("root must be an end vertex of the path");
  }
  std::vector<int> pos_of_vertex(tree.num_vertices(), 0);
  std::vector<EdgeId> order;
  VertexId prev = -1;
  VertexId cur = root;
  while (static_cast<int>(order.size()) < tree.num_edges()) {
    for (auto [w, e] : tree.neighbors(cur)) {
      if (w != prev) {
        order.push_back(e);
        prev = cur;
        cur = w;
        pos_of_vertex[cur] = static_cast<int>(order.size());
        break;
      }
    }
  }
  GeneralizedPathInstance gpi;
  gpi.num_edges = tree.num_edges();
  for (auto const& c : instance.commodities) {
    if (c.source != root && c.target != root) {
      throw invalid_input("commodity does not touch the root");
    }
    auto const far = c.source == root ? c.target : c.source;
    gpi.commodities.push_back({pos_of_vertex[far], c.budget, c.weight,
                               instance.pricing.values});
  }
  if (position_to_edge != nullptr) {
    *position_to_edge = std::move(order);
  }
  return gpi;
}

}  // namespace fza
