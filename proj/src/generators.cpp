#include "fza/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "fza/errors.hpp"

namespace fza {

PricingPreset parse_pricing_preset(std::string const& name) {
  if (name == "linear") {
    return PricingPreset::linear;
  }
  if (name == "affine") {
    return PricingPreset::affine;
  }
  if (name == "capped") {
    return PricingPreset::capped;
  }
  throw invalid_input("unknown pricing preset '" + name + "'");
}

std::string to_string(PricingPreset preset) {
  switch (preset) {
    case PricingPreset::linear:
      return "linear";
    case PricingPreset::affine:
      return "affine";
    case PricingPreset::capped:
      return "capped";
  }
  return "linear";
}

PricingFunction make_pricing(PricingPreset preset, int length, int cap) {
  PricingFunction f;
  for (int x = 0; x < std::max(length, 1); ++x) {
    switch (preset) {
      case PricingPreset::linear:
        f.values.emplace_back(x);
        break;
      case PricingPreset::affine:
        f.values.emplace_back(x + 1);
        break;
      case PricingPreset::capped:
        f.values.emplace_back(std::min(x, cap));
        break;
    }
  }
  return f;
}

namespace {

std::vector<std::pair<VertexId, VertexId>> prufer_tree(int n, std::mt19937_64& rng) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (n == 2) {
    edges.emplace_back(0, 1);
  }
  if (n <= 2) {
    return edges;
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2);
  for (auto& s : seq) {
    s = pick(rng);
  }
  std::vector<int> degree(n, 1);
  for (auto s : seq) {
    ++degree[s];
  }
  std::set<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      leaves.insert(v);
    }
  }
  for (auto s : seq) {
    auto const leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, s);
    if (--degree[s] == 1) {
      leaves.insert(s);
    }
  }
  auto const a = *leaves.begin();
  auto const b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return edges;
}

}  // namespace

Instance gen_random(GenSpec const& spec) {
  auto const n = spec.num_vertices;
  if (n < 1) {
    throw invalid_input("generator needs at least one vertex");
  }
  if (spec.num_commodities > 0 && n < 2) {
    throw invalid_input("commodities need a tree with at least two vertices");
  }
  if (spec.max_weight < 1) {
    throw invalid_input("max_weight must be at least 1");
  }
  if (spec.root && (*spec.root < 0 || *spec.root >= n)) {
    throw invalid_input("root vertex out of range");
  }
  std::mt19937_64 rng(spec.seed);
  std::vector<std::pair<VertexId, VertexId>> raw;
  if (spec.family == GenSpec::Family::random_path) {
    for (int v = 0; v + 1 < n; ++v) {
      raw.emplace_back(v, v + 1);
    }
  } else {
    raw = prufer_tree(n, rng);
  }
  std::vector<VertexId> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::shuffle(raw.begin(), raw.end(), rng);

  Instance inst;
  inst.tree.num_vertices = n;
  for (auto [u, v] : raw) {
    inst.tree.edges.emplace_back(label[u], label[v]);
  }
  inst.pricing = make_pricing(spec.pricing, n, spec.cap);

  if (spec.num_commodities > 0) {
    TreeIndex const index(inst.tree);
    std::uniform_int_distribution<int> vertex(0, n - 1);
    std::uniform_int_distribution<int> weight(1, spec.max_weight);
    std::set<std::tuple<VertexId, VertexId, int>> used;
    int attempts = 0;
    while (static_cast<int>(inst.commodities.size()) < spec.num_commodities &&
           attempts < 50 * spec.num_commodities + 100) {
      ++attempts;
      auto s = spec.root ? *spec.root : vertex(rng);
      auto t = vertex(rng);
      if (s == t) {
        continue;
      }
      auto const len = static_cast<int>(index.path_edges(s, t).size());
      auto const top = std::min(len, spec.max_budget.value_or(len));
      std::uniform_int_distribution<int> budget(0, std::max(top, 0));
      auto const u = budget(rng);
      auto const w = weight(rng);
      if (!used.emplace(std::min(s, t), std::max(s, t), u).second) {
        continue;
      }
      inst.commodities.push_back({s, t, u, Rational(w)});
    }
  }
  return inst;
}

ReductionInstance gen_star_from_2sat(Formula2CNF const& phi) {
  validate_formula(phi);
  auto const n = phi.num_vars;
  auto const m = static_cast<int>(phi.clauses.size());
  auto vertex_of = [](Literal const& l) { return 2 * l.var + (l.negated ? 2 : 1); };

  ReductionInstance out;
  auto& inst = out.instance;
  inst.tree.num_vertices = 2 * n + 1;
  for (int v = 0; v < n; ++v) {
    inst.tree.edges.emplace_back(0, 2 * v + 1);
    inst.tree.edges.emplace_back(0, 2 * v + 2);
  }
  inst.pricing = make_pricing(PricingPreset::affine, inst.tree.num_vertices);
  for (int v = 0; v < n; ++v) {
    inst.commodities.push_back({2 * v + 1, 2 * v + 2, 1, Rational(9, 2)});
  }
  for (auto const& [a, b] : phi.clauses) {
    if (a == b) {
      throw invalid_input("star reduction cannot encode a clause repeating one literal");
    }
    inst.commodities.push_back({0, vertex_of(a), 1, Rational(2)});
    inst.commodities.push_back({0, vertex_of(b), 1, Rational(2)});
    inst.commodities.push_back({vertex_of(a), vertex_of(b), 1, Rational(1)});
  }
  out.base = 9 * n + 5 * m;
  out.slope = 3;
  return out;
}

ReductionInstance gen_path_from_2sat(Formula2CNF const& phi, Rational const& big_m) {
  validate_formula(phi);
  auto const n = phi.num_vars;
  auto const m = static_cast<int>(phi.clauses.size());
  if (big_m <= m) {
    throw invalid_input("path reduction needs M > m = " + std::to_string(m));
  }
  ReductionInstance out;
  auto& inst = out.instance;
  auto const edges = 10 * n;
  inst.tree.num_vertices = edges + 1;
  for (int e = 0; e < edges; ++e) {
    inst.tree.edges.emplace_back(e, e + 1);
  }
  inst.pricing = make_pricing(PricingPreset::affine, inst.tree.num_vertices);

  // Gadget g covers edges 5g..5g+4: A = 5g, B = 5g+1..5g+3, C = 5g+4.
  for (int g = 0; g < 2 * n; ++g) {
    auto const a = 5 * g;
    inst.commodities.push_back({a, a + 5, 3, big_m});
    inst.commodities.push_back({a + 1, a + 4, 3, 4 * big_m});
    inst.commodities.push_back({a + 1, a + 4, 1, big_m});
    inst.commodities.push_back({a, a + 4, 2, big_m});
    inst.commodities.push_back({a + 1, a + 5, 2, big_m});
  }
  for (int v = 0; v < n; ++v) {
    // C of x_v through A of its negation.
    inst.commodities.push_back({10 * v + 4, 10 * v + 6, 1, big_m});
  }
  auto gadget = [](Literal const& l) { return 2 * l.var + (l.negated ? 1 : 0); };
  for (auto const& [a, b] : phi.clauses) {
    auto left = gadget(a);
    auto right = gadget(b);
    if (left == right) {
      throw invalid_input("path reduction cannot encode a clause repeating one literal");
    }
    if (left > right) {
      std::swap(left, right);
    }
    auto const blocks = right - left - 1;
    auto const from = 5 * left + 4;
    auto const to = 5 * right + 1;
    inst.commodities.push_back({from, to, 3 * blocks + 1, Rational(1, 3 * blocks + 2)});
    inst.commodities.push_back(
        {from, to, 3 * blocks, Rational(1, (3 * blocks + 1) * (3 * blocks + 2))});
  }
  out.base = 42 * big_m * n;
  out.slope = 1;
  return out;
}

}  // namespace fza
