#include "fza/density.hpp"

#include <algorithm>
#include <json.hpp>

#include "fza/errors.hpp"
#include "fza/rng.hpp"

namespace fza {

namespace {

constexpr VertexId density_root = 0;

// Only nonempty classes contribute candidates. Candidates are scanned in order; a later one wins only if strictly better.
class Selector {
public:
  Selector(Instance const& instance) : instance_(instance) {
    best_revenue_ = total_revenue(instance, best_);
    ++count_;
  }

  void offer(CutSet cuts, int j, int theta) {
    ++count_;
    auto const r = total_revenue(instance_, cuts);
    if (r > best_revenue_) {
      best_revenue_ = r;
      best_ = std::move(cuts);
      j_ = j;
      theta_ = theta;
    }
  }

  SolveResult finish(std::string algorithm, std::optional<std::uint64_t> seed) {
    auto r = make_result(instance_, std::move(best_), std::move(algorithm), seed);
    r.diagnostics.candidates = count_;
    nlohmann::json d;
    d["chosen_class"] = j_;
    d["chosen_offset"] = theta_;
    r.diagnostics.detail_json = d.dump();
    return r;
  }

private:
  Instance const& instance_;
  CutSet best_;
  Rational best_revenue_;
  std::size_t count_ = 0;
  int j_ = 0;
  int theta_ = 0;
};

}  // namespace

DensityClassification classify_by_density(Instance const& instance, int min_budget) {
  require_normalized(instance);
  DensityClassification out;
  auto const L = ceil_log2(instance.num_vertices());
  out.num_classes_minus_one = L;
  out.classes.resize(L + 1);
  for (int i = 0; i < instance.num_commodities(); ++i) {
    auto const u = instance.commodities[i].budget;
    auto const len = instance.path_length(i);
    out.density.emplace_back(u, len);
    out.density.back().canonicalize();
    int j = 0;
    if (u >= min_budget && u >= 1) {
      // Smallest j with u * 2^j > |P|; then d lies in (2^-j, 2^(1-j)].
      j = 1;
      while ((static_cast<long long>(u) << j) <= len) {
        ++j;
      }
    }
    out.class_of.push_back(j);
    out.classes[j].push_back(i);
  }
  return out;
}

CutSet offset_candidate(Instance const& instance, VertexId root, int j, int theta) {
  auto const depth = instance.index->edge_depths(root);
  auto const mod = 1LL << (j + 1);
  CutSet out;
  for (EdgeId e = 0; e < instance.num_edges(); ++e) {
    if (depth[e] % mod == theta) {
      out.push_back(e);
    }
  }
  return out;
}

CutSet thinned_candidate(Instance const& instance, VertexId root, int j, int theta,
                         std::uint64_t seed) {
  SeededRng rng(seed, {static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(theta)});
  CutSet out;
  for (auto e : offset_candidate(instance, root, j, theta)) {
    if (!rng.coin()) {
      out.push_back(e);
    }
  }
  return out;
}

CutSet path_offset_candidate(Instance const& instance, int j, int theta) {
  auto const order = instance.index->path_order();
  auto const step = 1LL << j;
  CutSet out;
  for (long long pos = theta; pos <= static_cast<long long>(order.size()); pos += step) {
    out.push_back(order[pos - 1]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CutSet simplified_candidate(Instance const& instance, int j, std::uint64_t seed) {
  SeededRng rng(seed, {static_cast<std::uint64_t>(j)});
  CutSet out;
  for (EdgeId e = 0; e < instance.num_edges(); ++e) {
    // Top j+1 bits all zero: probability 2^(-j-1).
    if ((rng.next() >> (63 - j)) == 0) {
      out.push_back(e);
    }
  }
  return out;
}

SolveResult single_density(Instance const& instance, std::uint64_t seed) {
  require_normalized(instance);
  Selector sel(instance);
  auto const L = ceil_log2(instance.num_vertices());
  auto const cls = classify_by_density(instance);
  for (int j = 1; j <= L; ++j) {
    if (cls.classes[j].empty()) {
      continue;
    }
    for (int theta = 0; theta < (1 << (j + 1)); ++theta) {
      sel.offer(thinned_candidate(instance, density_root, j, theta, seed), j, theta);
    }
  }
  return sel.finish("single-density", seed);
}

SolveResult single_density_path(Instance const& instance) {
  require_normalized(instance);
  if (!instance.index->is_path()) {
    throw invalid_input("single-density-path needs a path instance");
  }
  Selector sel(instance);
  auto const L = ceil_log2(instance.num_vertices());
  auto const cls = classify_by_density(instance);
  for (int j = 1; j <= L; ++j) {
    if (cls.classes[j].empty()) {
      continue;
    }
    for (int theta = 1; theta <= (1 << j); ++theta) {
      sel.offer(path_offset_candidate(instance, j, theta), j, theta);
    }
  }
  return sel.finish("single-density-path", std::nullopt);
}

SolveResult single_density_base(Instance const& instance) {
  require_normalized(instance);
  if (!instance.pricing.has_base_revenue()) {
    throw invalid_input("single-density-base needs f(0) > 0; use single-density instead");
  }
  Selector sel(instance);
  auto const L = ceil_log2(instance.num_vertices());
  auto const cls = classify_by_density(instance, 2);
  for (int j = 1; j <= L; ++j) {
    if (cls.classes[j].empty()) {
      continue;
    }
    for (int theta = 0; theta < (1 << (j + 1)); ++theta) {
      sel.offer(offset_candidate(instance, density_root, j, theta), j, theta);
    }
  }
  return sel.finish("single-density-base", std::nullopt);
}

SolveResult simplified_single_density(Instance const& instance, std::uint64_t seed) {
  require_normalized(instance);
  Selector sel(instance);
  auto const L = ceil_log2(instance.num_vertices());
  auto const cls = classify_by_density(instance);
  for (int j = 1; j <= L; ++j) {
    if (cls.classes[j].empty()) {
      continue;
    }
    sel.offer(simplified_candidate(instance, j, seed), j, 0);
  }
  return sel.finish("simplified", seed);
}

}  // namespace fza
