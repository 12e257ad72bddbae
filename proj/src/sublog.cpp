#include "fza/sublog.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "fza/errors.hpp"
#include "fza/rng.hpp"

namespace fza {

namespace {

struct Hanging {
  VertexId attach = 0;
  EdgeId attach_edge = 0;
  std::vector<EdgeId> edges;
};

using Kind = SegmentRelation::Kind;

bool partial(Kind k) { return k == Kind::from_front || k == Kind::from_back || k == Kind::interior; }

}  // namespace

CutSet non_skeleton_solve(Instance const& instance, std::vector<EdgeId> const& fragment,
                          SkeletonInfo const& skeleton, std::vector<int> const& commodities,
                          std::uint64_t seed, FragmentKey key) {
  auto const& tree = *instance.index;
  std::set<VertexId> const in_s(skeleton.vertices.begin(), skeleton.vertices.end());
  EdgeSet const frag(instance.num_edges(), fragment);
  EdgeSet const skel(instance.num_edges(), skeleton.edges);

  std::vector<Hanging> subtrees;
  std::map<VertexId, int> subtree_of;
  for (auto a : skeleton.vertices) {
    for (auto [w, e] : tree.neighbors(a)) {
      if (!frag.test(e) || skel.test(e)) {
        continue;
      }
      Hanging h{a, e, {e}};
      auto const id = static_cast<int>(subtrees.size());
      std::vector<VertexId> stack{w};
      subtree_of[w] = id;
      while (!stack.empty()) {
        auto const v = stack.back();
        stack.pop_back();
        for (auto [x, f] : tree.neighbors(v)) {
          if (frag.test(f) && !in_s.contains(x) && !subtree_of.contains(x)) {
            subtree_of[x] = id;
            h.edges.push_back(f);
            stack.push_back(x);
          }
        }
      }
      subtrees.push_back(std::move(h));
    }
  }
  // Coins are drawn in attaching-edge order.
  std::vector<int> order(subtrees.size());
  for (int j = 0; j < static_cast<int>(order.size()); ++j) {
    order[j] = j;
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return subtrees[a].attach_edge < subtrees[b].attach_edge;
  });
  SeededRng rng(seed, {static_cast<std::uint64_t>(key.level),
                       static_cast<std::uint64_t>(key.fragment), 0});
  std::vector<bool> active(subtrees.size(), false);
  for (auto j : order) {
    active[j] = rng.coin();
  }

  auto where = [&](VertexId v) {
    auto it = subtree_of.find(v);
    return it == subtree_of.end() ? -1 : it->second;
  };
  CutSet out;
  for (auto j : order) {
    if (!active[j]) {
      continue;
    }
    std::vector<RootedTarget> targets;
    for (auto i : commodities) {
      auto const& c = instance.commodities[i];
      auto const ws = where(c.source);
      auto const wt = where(c.target);
      auto const outside_ok = [&](int other) { return other < 0 || !active[other]; };
      if (ws == j && wt != j && outside_ok(wt)) {
        targets.push_back({c.source, c.budget, c.weight});
      } else if (wt == j && ws != j && outside_ok(ws)) {
        targets.push_back({c.target, c.budget, c.weight});
      }
    }
    if (targets.empty()) {
      continue;
    }
    EdgeSet const allowed(instance.num_edges(), subtrees[j].edges);
    auto sol = solve_rooted(tree, allowed, subtrees[j].attach, targets, instance.pricing);
    out.insert(out.end(), sol.cuts.begin(), sol.cuts.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<SegmentRelation>> relate_segments(
    Instance const& instance, SkeletonInfo const& skeleton,
    std::vector<int> const& commodities) {
  std::vector<std::vector<SegmentRelation>> out;
  for (auto i : commodities) {
    auto const& path = instance.paths[i];
    std::vector<SegmentRelation> row;
    for (auto const& seg : skeleton.segments) {
      SegmentRelation rel;
      for (auto e : seg.edges) {
        rel.overlap += path.test(e) ? 1 : 0;
      }
      auto const len = static_cast<int>(seg.edges.size());
      if (rel.overlap == 0) {
        rel.kind = Kind::none;
      } else if (rel.overlap == len) {
        rel.kind = Kind::inner;
      } else if (path.test(seg.edges.front())) {
        rel.kind = Kind::from_front;
      } else if (path.test(seg.edges.back())) {
        rel.kind = Kind::from_back;
      } else {
        rel.kind = Kind::interior;
      }
      row.push_back(rel);
    }
    out.push_back(std::move(row));
  }
  return out;
}

GeneralizedPathInstance build_aux_instance(
    Instance const& instance, SkeletonInfo const& skeleton,
    std::vector<std::vector<SegmentRelation>> const& relations,
    std::vector<int> const& commodities, int s, bool from_front,
    std::vector<int> const& guess, std::vector<bool> const& active) {
  GeneralizedPathInstance gpi;
  gpi.num_edges = static_cast<int>(skeleton.segments[s].edges.size());
  auto const want = from_front ? Kind::from_front : Kind::from_back;
  auto const nseg = static_cast<int>(skeleton.segments.size());
  for (std::size_t idx = 0; idx < commodities.size(); ++idx) {
    auto const& rel = relations[idx];
    if (rel[s].kind != want) {
      continue;
    }
    bool other_outer_active = false;
    int z = 0;
    for (int t = 0; t < nseg; ++t) {
      if (t == s || !active[t]) {
        continue;
      }
      if (partial(rel[t].kind)) {
        other_outer_active = true;
      } else if (rel[t].kind == Kind::inner) {
        z += guess[t];
      }
    }
    auto const& c = instance.commodities[commodities[idx]];
    if (other_outer_active || c.budget < z) {
      continue;
    }
    GeneralizedPathCommodity gc;
    gc.end = rel[s].overlap;
    gc.budget = c.budget - z;
    gc.weight = c.weight;
    for (int x = 0; x <= std::min(gc.budget, gc.end); ++x) {
      gc.pricing.push_back(instance.pricing(x + z));
    }
    gpi.commodities.push_back(std::move(gc));
  }
  return gpi;
}

std::vector<int> price_levels(int len) {
  std::vector<int> out{0};
  for (int p = 1; p <= len; p *= 2) {
    out.push_back(p);
  }
  return out;
}

SkeletonCandidate skeleton_candidate(Instance const& instance, SkeletonInfo const& skeleton,
                                     std::vector<std::vector<SegmentRelation>> const& relations,
                                     std::vector<int> const& commodities,
                                     std::vector<int> const& guess, std::uint64_t seed,
                                     FragmentKey key, std::uint64_t g) {
  auto const nseg = skeleton.segments.size();
  SeededRng rng(seed, {static_cast<std::uint64_t>(key.level),
                       static_cast<std::uint64_t>(key.fragment), 1, g});
  SkeletonCandidate cand;
  cand.guess = guess;
  cand.active.assign(nseg, false);
  cand.from_front.assign(nseg, false);
  for (std::size_t s = 0; s < nseg; ++s) {
    cand.active[s] = rng.coin();
  }
  for (std::size_t s = 0; s < nseg; ++s) {
    if (cand.active[s]) {
      cand.from_front[s] = !rng.coin();
    }
  }
  for (std::size_t s = 0; s < nseg; ++s) {
    if (!cand.active[s]) {
      continue;
    }
    auto const& edges = skeleton.segments[s].edges;
    auto const gpi = build_aux_instance(instance, skeleton, relations, commodities,
                                        static_cast<int>(s), cand.from_front[s], guess,
                                        cand.active);
    auto const sol = generalized_rooted_path_dp(gpi, guess[s]);
    for (auto pos : sol.cut_positions) {
      cand.cuts.push_back(cand.from_front[s] ? edges[pos] : edges[edges.size() - 1 - pos]);
    }
  }
  std::sort(cand.cuts.begin(), cand.cuts.end());
  return cand;
}

SkeletonOutcome skeleton_solve(Instance const& instance, SkeletonInfo const& skeleton,
                               std::vector<int> const& commodities, std::uint64_t seed,
                               FragmentKey key, std::size_t guess_budget) {
  SkeletonOutcome out;
  auto const nseg = skeleton.segments.size();
  if (nseg == 0) {
    return out;
  }
  std::vector<std::vector<int>> levels;
  std::size_t count = 1;
  for (auto const& seg : skeleton.segments) {
    levels.push_back(price_levels(static_cast<int>(seg.edges.size())));
    if (count > guess_budget / levels.back().size()) {
      throw capacity_exceeded("skeleton price guesses exceed the budget of " +
                              std::to_string(guess_budget));
    }
    count *= levels.back().size();
  }
  auto const relations = relate_segments(instance, skeleton, commodities);
  Rational best_rev = -1;
  std::vector<int> guess(nseg);
  for (std::size_t g = 0; g < count; ++g) {
    auto rest = g;
    for (std::size_t s = 0; s < nseg; ++s) {
      guess[s] = levels[s][rest % levels[s].size()];
      rest /= levels[s].size();
    }
    auto cand = skeleton_candidate(instance, skeleton, relations, commodities, guess, seed,
                                   key, g);
    auto const rev = revenue_of(instance, commodities, EdgeSet(instance.num_edges(), cand.cuts));
    if (rev > best_rev) {
      best_rev = rev;
      out.best = std::move(cand);
    }
  }
  out.guesses = count;
  return out;
}

namespace {

nlohmann::json trace_to_json(SublogTrace const& t) {
  nlohmann::json j;
  j["d"] = t.decomposition.d;
  j["levels"] = nlohmann::json::array();
  for (auto const& level : t.decomposition.levels) {
    auto lv = nlohmann::json::array();
    for (auto const& f : level) {
      lv.push_back(f.edges);
    }
    j["levels"].push_back(lv);
  }
  j["fragments"] = nlohmann::json::array();
  for (auto const& f : t.fragments) {
    nlohmann::json fj;
    fj["level"] = f.key.level;
    fj["fragment"] = f.key.fragment;
    fj["border"] = f.skeleton.border;
    fj["skeleton_edges"] = f.skeleton.edges;
    fj["junctions"] = f.skeleton.junctions;
    fj["segments"] = nlohmann::json::array();
    for (auto const& s : f.skeleton.segments) {
      fj["segments"].push_back(s.edges);
    }
    fj["guess"] = f.skeleton_outcome.best.guess;
    fj["guesses"] = f.skeleton_outcome.guesses;
    fj["chosen"] = f.skeleton_chosen ? "skeleton" : "non-skeleton";
    j["fragments"].push_back(fj);
  }
  return j;
}

}  // namespace

SolveResult sublog(Instance const& instance, std::uint64_t seed, SublogOptions const& options,
                   SublogTrace* trace) {
  require_normalized(instance);
  SublogTrace local;
  auto& t = trace != nullptr ? *trace : local;
  t = SublogTrace{};
  if (instance.num_edges() == 0) {
    auto r = make_result(instance, {}, "sublog", seed);
    r.diagnostics.candidates = 1;
    return r;
  }
  auto const& tree = *instance.index;
  t.decomposition = build_decomposition(tree, options.d);
  t.assignment = classify_commodities(t.decomposition, instance);
  auto const& dec = t.decomposition;

  CutSet best;
  Rational best_rev = total_revenue(instance, best);
  std::size_t candidates = 1;
  auto offer = [&](CutSet const& cuts) {
    ++candidates;
    auto const r = total_revenue(instance, cuts);
    if (r > best_rev) {
      best_rev = r;
      best = cuts;
    }
  };

  for (int l = 0; l + 1 < dec.num_levels(); ++l) {
    CutSet level_cuts;
    for (int f = 0; f < static_cast<int>(dec.levels[l].size()); ++f) {
      auto const& m = t.assignment.by_fragment[l][f];
      if (m.empty()) {
        continue;
      }
      auto const& frag = dec.levels[l][f];
      std::vector<std::vector<EdgeId>> children;
      for (auto c : frag.children) {
        children.push_back(dec.levels[l + 1][c].edges);
      }
      FragmentTrace ft;
      ft.key = {l, f};
      ft.skeleton = compute_skeleton(tree, frag.edges, children);
      ft.non_skeleton_cuts = non_skeleton_solve(instance, frag.edges, ft.skeleton, m, seed, ft.key);
      ft.skeleton_outcome =
          skeleton_solve(instance, ft.skeleton, m, seed, ft.key, options.guess_budget);
      auto const rev_ns =
          revenue_of(instance, m, EdgeSet(instance.num_edges(), ft.non_skeleton_cuts));
      auto const rev_s = revenue_of(
          instance, m, EdgeSet(instance.num_edges(), ft.skeleton_outcome.best.cuts));
      ft.skeleton_chosen = rev_s > rev_ns;
      auto const& chosen = ft.skeleton_chosen ? ft.skeleton_outcome.best.cuts : ft.non_skeleton_cuts;
      level_cuts.insert(level_cuts.end(), chosen.begin(), chosen.end());
      t.fragments.push_back(std::move(ft));
    }
    std::sort(level_cuts.begin(), level_cuts.end());
    t.level_candidates.push_back(level_cuts);
    offer(level_cuts);
  }

  // Single-edge commodities: decide each edge exactly.
  std::map<EdgeId, std::vector<int>> on_edge;
  for (auto i : t.assignment.extra) {
    on_edge[instance.paths[i].ids().front()].push_back(i);
  }
  for (auto const& [e, list] : on_edge) {
    Rational keep = 0;
    Rational cut = 0;
    for (auto i : list) {
      auto const& c = instance.commodities[i];
      keep += c.weight * instance.pricing(0);
      if (c.budget >= 1) {
        cut += c.weight * instance.pricing(1);
      }
    }
    if (cut > keep) {
      t.extra_candidate.push_back(e);
    }
  }
  offer(t.extra_candidate);

  auto r = make_result(instance, best, "sublog", seed);
  r.diagnostics.candidates = candidates;
  if (options.diagnostics) {
    r.diagnostics.detail_json = trace_to_json(t).dump();
  }
  return r;
}

}  // namespace fza
