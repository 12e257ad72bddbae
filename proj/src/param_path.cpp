#include "fza/param_path.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>

#include "fza/errors.hpp"

namespace fza {

namespace {

// Edges in path order e(1..m) and each commodity's [first, last] position.
struct PathLayout {
  std::vector<EdgeId> edge_at;  // edge_at[p - 1] = e(p)
  std::vector<int> first;
  std::vector<int> last;
  std::vector<std::vector<int>> starting;  // commodities whose first edge is p
  std::vector<std::vector<int>> covering;  // commodities containing e(p)
};

PathLayout layout_of(Instance const& instance) {
  require_normalized(instance);
  if (!instance.index->is_path()) {
    throw invalid_input("parameterized solvers need a path instance");
  }
  PathLayout lay;
  lay.edge_at = instance.index->path_order();
  auto const m = static_cast<int>(lay.edge_at.size());
  std::vector<int> pos_of(instance.num_edges());
  for (int p = 1; p <= m; ++p) {
    pos_of[lay.edge_at[p - 1]] = p;
  }
  lay.starting.resize(m + 1);
  lay.covering.resize(m + 1);
  for (int i = 0; i < instance.num_commodities(); ++i) {
    int lo = m + 1;
    int hi = 0;
    for (auto e : instance.paths[i].ids()) {
      lo = std::min(lo, pos_of[e]);
      hi = std::max(hi, pos_of[e]);
    }
    lay.first.push_back(lo);
    lay.last.push_back(hi);
    lay.starting[lo].push_back(i);
    for (int p = lo; p <= hi; ++p) {
      lay.covering[p].push_back(i);
    }
  }
  return lay;
}

template <typename State>
struct Entry {
  Rational value;
  bool cut = false;
  State pred;
};

template <typename State>
using Layer = std::map<State, Entry<State>>;

// Keeps the better entry; ties prefer no cut, then the smaller predecessor.
template <typename State>
void relax(Layer<State>& layer, State const& key, Rational value, bool cut, State const& pred) {
  auto it = layer.find(key);
  if (it == layer.end()) {
    layer.emplace(key, Entry<State>{std::move(value), cut, pred});
    return;
  }
  auto& cur = it->second;
  bool better = value > cur.value;
  if (value == cur.value) {
    better = (cur.cut && !cut) || (cur.cut == cut && pred < cur.pred);
  }
  if (better) {
    cur = Entry<State>{std::move(value), cut, pred};
  }
}

template <typename State>
SolveResult finish(Instance const& instance, PathLayout const& lay,
                   std::vector<Layer<State>> const& layers, std::string algorithm) {
  auto const& final_layer = layers.back();
  auto best = final_layer.begin();
  for (auto it = final_layer.begin(); it != final_layer.end(); ++it) {
    if (it->second.value > best->second.value) {
      best = it;
    }
  }
  CutSet cuts;
  State state = best->first;
  std::size_t states = 0;
  for (auto const& l : layers) {
    states += l.size();
  }
  for (auto p = static_cast<int>(layers.size()) - 1; p >= 1; --p) {
    auto const& entry = layers[p].at(state);
    if (entry.cut) {
      cuts.push_back(lay.edge_at[p - 1]);
    }
    state = entry.pred;
  }
  auto r = make_result(instance, std::move(cuts), std::move(algorithm));
  r.diagnostics.candidates = states;
  if (r.revenue != best->second.value) {
    throw std::logic_error(r.algorithm + ": table value disagrees with reconstructed cuts");
  }
  return r;
}

// Marginal gain of one more cut on commodity i that already has z cuts.
Rational marginal(Instance const& instance, int i, int z) {
  auto const& c = instance.commodities[i];
  if (z < c.budget) {
    return c.weight * (instance.pricing(z + 1) - instance.pricing(z));
  }
  if (z == c.budget) {
    return -c.weight * instance.pricing(z);
  }
  return 0;
}

Rational base_at(Instance const& instance, PathLayout const& lay, int p) {
  Rational sum = 0;
  for (auto i : lay.starting[p]) {
    sum += instance.commodities[i].weight * instance.pricing(0);
  }
  return sum;
}

bool exceeds(std::uint64_t base, int exponent, std::uint64_t budget) {
  std::uint64_t acc = 1;
  for (int k = 0; k < exponent; ++k) {
    if (acc > budget / std::max<std::uint64_t>(base, 1)) {
      return true;
    }
    acc *= base;
  }
  return acc > budget;
}

}  // namespace

SolveResult dp_umax(Instance const& instance, std::uint64_t table_budget) {
  auto const lay = layout_of(instance);
  auto const m = static_cast<int>(lay.edge_at.size());
  auto const ell = parameters(instance).u_max;
  if (exceeds(static_cast<std::uint64_t>(instance.num_vertices()), ell + 2, table_budget)) {
    throw capacity_exceeded("dp-umax table n^(u_max+2) exceeds the budget");
  }
  // Window of the ell+1 rightmost cut positions; artificial cuts sit at
  // positions -ell..0.
  using Window = std::vector<int>;
  std::vector<Layer<Window>> layers(m + 1);
  Window init;
  for (int p = -ell; p <= 0; ++p) {
    init.push_back(p);
  }
  layers[0].emplace(init, Entry<Window>{Rational(0), false, init});
  for (int p = 1; p <= m; ++p) {
    auto const base = base_at(instance, lay, p);
    auto& next = layers[p];
    for (auto const& [w, entry] : layers[p - 1]) {
      relax(next, w, entry.value + base, false, w);
      Rational gain = base;
      for (auto i : lay.covering[p]) {
        // Counting over the whole window: ell+1 cuts on P_i mark a dropout.
        auto const z = static_cast<int>(std::count_if(
            w.begin(), w.end(), [&](int q) { return q >= lay.first[i]; }));
        gain += marginal(instance, i, z);
      }
      Window shifted(w.begin() + 1, w.end());
      shifted.push_back(p);
      relax(next, shifted, entry.value + gain, true, w);
    }
  }
  return finish(instance, lay, layers, "dp-umax");
}

SolveResult dp_pmax(Instance const& instance, std::uint64_t window_budget) {
  auto const lay = layout_of(instance);
  auto const m = static_cast<int>(lay.edge_at.size());
  auto const ell = std::max(1, parameters(instance).p_max);
  if (ell >= 63 || (std::uint64_t{1} << ell) > window_budget) {
    throw capacity_exceeded("dp-pmax window 2^p_max exceeds the budget");
  }
  // Bit b set: position p-b is cut.
  using Mask = std::uint64_t;
  auto const full = (Mask{1} << ell) - 1;
  std::vector<Layer<Mask>> layers(m + 1);
  layers[0].emplace(0, Entry<Mask>{Rational(0), false, 0});
  for (int p = 1; p <= m; ++p) {
    auto const base = base_at(instance, lay, p);
    auto& next = layers[p];
    for (auto const& [c, entry] : layers[p - 1]) {
      relax(next, (c << 1) & full, entry.value + base, false, c);
      Rational gain = base;
      for (auto i : lay.covering[p]) {
        auto const span = p - lay.first[i];  // earlier positions of P_i
        auto const z = std::popcount(c & ((Mask{1} << span) - 1));
        gain += marginal(instance, i, z);
      }
      relax(next, ((c << 1) | 1) & full, entry.value + gain, true, c);
    }
  }
  return finish(instance, lay, layers, "dp-pmax");
}

SolveResult dp_congestion(Instance const& instance, std::uint64_t table_budget) {
  auto const lay = layout_of(instance);
  auto const m = static_cast<int>(lay.edge_at.size());
  for (int p = 1; p <= m; ++p) {
    std::uint64_t size = 1;
    for (auto i : lay.covering[p]) {
      auto const f = static_cast<std::uint64_t>(instance.commodities[i].budget) + 3;
      if (size > table_budget / f) {
        throw capacity_exceeded("dp-cong slack table exceeds the budget");
      }
      size *= f;
    }
  }
  // Slack per commodity covering e(p), in covering order; nullopt is -inf.
  using Slack = std::optional<int>;
  using Vector = std::vector<Slack>;
  std::vector<Layer<Vector>> layers(m + 1);
  layers[0].emplace(Vector{}, Entry<Vector>{Rational(0), false, {}});
  for (int p = 1; p <= m; ++p) {
    auto const& cur_ids = lay.covering[p];
    auto const& prev_ids = lay.covering[p - 1];
    auto& next = layers[p];
    for (auto const& [y, entry] : layers[p - 1]) {
      auto slack_before = [&](int i) -> std::optional<Slack> {
        auto it = std::lower_bound(prev_ids.begin(), prev_ids.end(), i);
        if (it != prev_ids.end() && *it == i) {
          return y[it - prev_ids.begin()];
        }
        return std::nullopt;  // new at p
      };
      Vector keep;
      Vector cut;
      Rational keep_gain = 0;
      Rational cut_gain = 0;
      for (auto i : cur_ids) {
        auto const& c = instance.commodities[i];
        auto const before = slack_before(i);
        if (!before) {
          keep.emplace_back(c.budget);
          keep_gain += c.weight * instance.pricing(0);
          cut.emplace_back(c.budget - 1);
          if (c.budget >= 1) {
            cut_gain += c.weight * instance.pricing(1);
          }
          continue;
        }
        keep.push_back(*before);
        auto const& s = *before;
        if (!s || *s == -1) {
          cut.emplace_back(std::nullopt);
        } else {
          auto const x = *s - 1;
          cut.emplace_back(x);
          if (x >= 0) {
            cut_gain += c.weight * (instance.pricing(c.budget - x) -
                                    instance.pricing(c.budget - x - 1));
          } else {
            cut_gain -= c.weight * instance.pricing(c.budget);
          }
        }
      }
      relax(next, keep, entry.value + keep_gain, false, y);
      relax(next, cut, entry.value + cut_gain, true, y);
    }
  }
  return finish(instance, lay, layers, "dp-cong");
}

}  // namespace fza
