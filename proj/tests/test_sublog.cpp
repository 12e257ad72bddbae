#include <gtest/gtest.h>

#include <set>

#include "fza/decomposition.hpp"
#include "fza/io.hpp"
#include "fza/sublog.hpp"
#include "support.hpp"

namespace fza {
namespace {

Instance path_with(int edges, std::vector<Commodity> cs) {
  Instance inst;
  inst.tree.num_vertices = edges + 1;
  for (int v = 0; v < edges; ++v) {
    inst.tree.edges.emplace_back(v, v + 1);
  }
  inst.pricing = make_pricing(PricingPreset::linear, edges + 1);
  inst.commodities = std::move(cs);
  return normalize(inst);
}

std::vector<EdgeId> range(int from, int to) {
  std::vector<EdgeId> out;
  for (int e = from; e < to; ++e) {
    out.push_back(e);
  }
  return out;
}

TEST(AlmostBalanced, PathThirds) {
  auto const inst = path_with(9, {});
  auto const pieces = almost_balanced_decomposition(*inst.index, range(0, 9), 3);
  EXPECT_EQ(pieces, (std::vector<std::vector<EdgeId>>{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}));
}

TEST(AlmostBalanced, StarHalves) {
  Instance inst;
  inst.tree.num_vertices = 9;
  for (int v = 1; v <= 8; ++v) {
    inst.tree.edges.emplace_back(0, v);
  }
  inst.pricing = make_pricing(PricingPreset::linear, 9);
  auto const n = normalize(inst);
  auto const pieces = almost_balanced_decomposition(*n.index, range(0, 8), 2);
  ASSERT_EQ(pieces.size(), 2U);
  EXPECT_EQ(pieces[0].size(), 4U);
  EXPECT_EQ(pieces[1].size(), 4U);
}

TEST(AlmostBalanced, RandomTreesWithinBounds) {
  for (int t = 0; t < 120; ++t) {
    GenSpec spec;
    spec.num_vertices = 8 + t % 54;
    spec.num_commodities = 0;
    spec.seed = 9000 + t;
    auto const inst = normalize(gen_random(spec));
    auto const m = inst.num_edges();
    for (int d : {2, 3, 4}) {
      auto const pieces = almost_balanced_decomposition(*inst.index, range(0, m), d);
      std::vector<int> seen(m, 0);
      for (auto const& p : pieces) {
        EXPECT_GE(3 * d * static_cast<int>(p.size()), m);
        EXPECT_LE(d * static_cast<int>(p.size()), 3 * m);
        for (auto e : p) {
          ++seen[e];
        }
      }
      for (auto s : seen) {
        EXPECT_EQ(s, 1);
      }
    }
  }
}

TEST(BuildDecomposition, SingleEdgeTree) {
  auto const inst = path_with(1, {});
  auto const dec = build_decomposition(*inst.index);
  ASSERT_EQ(dec.num_levels(), 1);
  EXPECT_EQ(dec.levels[0][0].edges, std::vector<EdgeId>{0});
}

TEST(BuildDecomposition, PathOfNineWithThree) {
  auto const inst = path_with(9, {});
  auto const dec = build_decomposition(*inst.index, 3);
  ASSERT_EQ(dec.num_levels(), 3);
  EXPECT_EQ(dec.levels[1].size(), 3U);
  EXPECT_EQ(dec.levels[2].size(), 9U);
}

TEST(ClassifyCommodities, WholeTreeAndSingleEdge) {
  auto const inst = path_with(9, {{0, 9, 2, Rational(1)}, {4, 5, 1, Rational(1)}});
  auto const dec = build_decomposition(*inst.index, 3);
  auto const a = classify_commodities(dec, inst);
  EXPECT_EQ(a.level_of[0], 0);
  EXPECT_EQ(a.level_of[1], extra_class);
  EXPECT_EQ(a.extra, std::vector<int>{1});
}

TEST(ClassifyCommodities, PartitionOnRandomInstances) {
  for (int t = 0; t < 40; ++t) {
    GenSpec spec;
    spec.num_vertices = 5 + t;
    spec.num_commodities = 30;
    spec.seed = 4000 + t;
    auto const inst = normalize(gen_random(spec));
    auto const dec = build_decomposition(*inst.index);
    auto const a = classify_commodities(dec, inst);
    std::vector<int> count(inst.num_commodities(), 0);
    for (auto const& level : a.by_fragment) {
      for (auto const& frag : level) {
        for (auto i : frag) {
          ++count[i];
        }
      }
    }
    for (auto i : a.extra) {
      ++count[i];
    }
    for (auto c : count) {
      EXPECT_EQ(c, 1);
    }
  }
}

TEST(Skeleton, PathThirds) {
  auto const inst = path_with(9, {});
  auto const s = compute_skeleton(*inst.index, range(0, 9), {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
  EXPECT_EQ(s.border, (std::vector<VertexId>{3, 6}));
  EXPECT_EQ(s.edges, (std::vector<EdgeId>{3, 4, 5}));
  ASSERT_EQ(s.segments.size(), 1U);
  EXPECT_TRUE(s.junctions.empty());
}

TEST(Skeleton, StarHalvesMeetAtCenter) {
  Instance inst;
  inst.tree.num_vertices = 5;
  for (int v = 1; v <= 4; ++v) {
    inst.tree.edges.emplace_back(0, v);
  }
  inst.pricing = make_pricing(PricingPreset::linear, 5);
  auto const n = normalize(inst);
  auto const s = compute_skeleton(*n.index, range(0, 4), {{0, 1}, {2, 3}});
  EXPECT_EQ(s.border, std::vector<VertexId>{0});
  EXPECT_EQ(s.vertices, std::vector<VertexId>{0});
  EXPECT_TRUE(s.edges.empty());
  EXPECT_TRUE(s.segments.empty());
}

TEST(Skeleton, JunctionSplitsSegments) {
  // Spider with three two-edge legs; the leg tips and the inner star are
  // separate children, so the center is a junction.
  Instance inst;
  inst.tree.num_vertices = 7;
  inst.tree.edges = {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}};
  inst.pricing = make_pricing(PricingPreset::linear, 7);
  auto const n = normalize(inst);
  auto const s = compute_skeleton(*n.index, range(0, 6), {{1}, {3}, {5}, {0, 2, 4}});
  EXPECT_EQ(s.border, (std::vector<VertexId>{1, 3, 5}));
  EXPECT_EQ(s.junctions, std::vector<VertexId>{0});
  EXPECT_EQ(s.edges, (std::vector<EdgeId>{0, 2, 4}));
  EXPECT_EQ(s.segments.size(), 3U);
}

TEST(NonSkeleton, ActiveSingleEdgeSubtreeGetsCut) {
  // Children {0,1}, {2,3}, {4,5}, {6}: skeleton 2..6, edge 6 hangs at 6.
  auto const inst = path_with(7, {{7, 6, 1, Rational(1)}});
  auto const frag = range(0, 7);
  auto const s = compute_skeleton(*inst.index, frag, {{0, 1}, {2, 3}, {4, 5}, {6}});
  ASSERT_EQ(s.edges, (std::vector<EdgeId>{2, 3, 4, 5}));
  std::set<CutSet> outcomes;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    outcomes.insert(non_skeleton_solve(inst, frag, s, {0}, seed, {0, 0}));
  }
  EXPECT_EQ(outcomes, (std::set<CutSet>{{}, {6}}));
}

TEST(NonSkeleton, AvoidsSkeletonOnRandomFragments) {
  for (int t = 0; t < 40; ++t) {
    GenSpec spec;
    spec.num_vertices = 10 + t;
    spec.num_commodities = 25;
    spec.seed = 6000 + t;
    auto const inst = normalize(gen_random(spec));
    SublogTrace trace;
    sublog(inst, t, {}, &trace);
    for (auto const& f : trace.fragments) {
      EdgeSet const skel(inst.num_edges(), f.skeleton.edges);
      for (auto e : f.non_skeleton_cuts) {
        EXPECT_FALSE(skel.test(e));
      }
    }
  }
}

TEST(AuxInstance, InnerGuessShiftsTable) {
  // Children {0,1}, {2,3}, {4,5}, {6,7}: segments 2-4 and 4-6.
  Instance raw;
  raw.tree.num_vertices = 9;
  for (int v = 0; v < 8; ++v) {
    raw.tree.edges.emplace_back(v, v + 1);
  }
  raw.pricing = make_pricing(PricingPreset::linear, 9);
  raw.commodities = {{0, 5, 4, Rational(1)}};
  auto const inst = normalize(raw);
  auto const s = compute_skeleton(*inst.index, range(0, 8), {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  ASSERT_EQ(s.segments.size(), 2U);
  auto const rel = relate_segments(inst, s, {0});
  EXPECT_EQ(rel[0][0].kind, SegmentRelation::Kind::inner);
  auto const from_front = s.segments[1].vertices.front() == 4;
  auto const shifted =
      build_aux_instance(inst, s, rel, {0}, 1, from_front, {2, 1}, {true, true});
  ASSERT_EQ(shifted.commodities.size(), 1U);
  EXPECT_EQ(shifted.commodities[0].budget, 2);
  EXPECT_EQ(shifted.commodities[0].pricing[0], 2);
  EXPECT_EQ(shifted.commodities[0].pricing[1], 3);
  auto const plain =
      build_aux_instance(inst, s, rel, {0}, 1, from_front, {2, 1}, {false, true});
  ASSERT_EQ(plain.commodities.size(), 1U);
  EXPECT_EQ(plain.commodities[0].budget, 4);
  EXPECT_EQ(plain.commodities[0].pricing[0], 0);
  EXPECT_EQ(plain.commodities[0].pricing[1], 1);
}

TEST(SkeletonSolve, PriceLevelsOfFourEdges) {
  EXPECT_EQ(price_levels(4), (std::vector<int>{0, 1, 2, 4}));
  auto const inst = path_with(8, {{0, 8, 4, Rational(1)}});
  auto const s = compute_skeleton(*inst.index, range(0, 8), {{0, 1}, {2, 3, 4, 5}, {6, 7}});
  ASSERT_EQ(s.segments.size(), 1U);
  EXPECT_EQ(s.segments[0].edges.size(), 4U);
  auto const out = skeleton_solve(inst, s, {0}, 3, {0, 0}, 1000);
  EXPECT_EQ(out.guesses, 4U);
}

TEST(SkeletonSolve, RestrictedToSkeletonWithGuessedCounts) {
  for (int t = 0; t < 60; ++t) {
    GenSpec spec;
    spec.num_vertices = 12 + t;
    spec.num_commodities = 25;
    spec.pricing = static_cast<PricingPreset>(t % 3);
    spec.seed = 7000 + t;
    auto const inst = normalize(gen_random(spec));
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      SublogTrace trace;
      sublog(inst, seed, {}, &trace);
      for (auto const& f : trace.fragments) {
        EdgeSet const skel(inst.num_edges(), f.skeleton.edges);
        auto const& best = f.skeleton_outcome.best;
        auto const cuts = to_edge_set(inst, best.cuts);
        EXPECT_TRUE(cuts.is_subset_of(skel));
        for (std::size_t q = 0; q < f.skeleton.segments.size(); ++q) {
          EdgeSet const seg(inst.num_edges(), f.skeleton.segments[q].edges);
          auto const placed = seg.count_common(cuts);
          if (q < best.active.size() && best.active[q]) {
            EXPECT_EQ(placed, best.guess[q]);
          } else {
            EXPECT_EQ(placed, 0);
          }
        }
      }
    }
  }
}

TEST(Skeleton, AssignedCommoditiesTouchBorder) {
  for (int t = 0; t < 40; ++t) {
    GenSpec spec;
    spec.num_vertices = 10 + 2 * t;
    spec.num_commodities = 30;
    spec.seed = 8000 + t;
    auto const inst = normalize(gen_random(spec));
    SublogTrace trace;
    sublog(inst, 0, {}, &trace);
    for (auto const& f : trace.fragments) {
      auto const& members = trace.assignment.by_fragment[f.key.level][f.key.fragment];
      std::set<VertexId> const border(f.skeleton.border.begin(), f.skeleton.border.end());
      for (auto i : members) {
        bool touches = false;
        for (auto e : inst.paths[i].ids()) {
          auto const [a, b] = inst.index->endpoints(e);
          touches = touches || border.count(a) > 0 || border.count(b) > 0;
        }
        EXPECT_TRUE(touches);
      }
      std::set<EdgeId> seg_edges;
      for (auto const& seg : f.skeleton.segments) {
        for (auto e : seg.edges) {
          EXPECT_TRUE(seg_edges.insert(e).second);
        }
      }
      EXPECT_EQ(seg_edges, std::set<EdgeId>(f.skeleton.edges.begin(), f.skeleton.edges.end()));
      EXPECT_LT(static_cast<int>(f.skeleton.segments.size()), 2 * trace.decomposition.d);
    }
  }
}

// The commodity spans both halves, so it joins an active half only when the
// other half is inactive: at most one of its edges is ever cut.
TEST(Sublog, TwoEdgeEndToEnd) {
  std::set<CutSet> seen;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    auto const r = sublog(path_with(2, {{0, 2, 2, Rational(3)}}), seed);
    EXPECT_LE(r.cuts.size(), 1U);
    EXPECT_EQ(r.revenue, 3 * static_cast<int>(r.cuts.size()));
    seen.insert(r.cuts);
  }
  EXPECT_TRUE(seen.count(CutSet{}) == 1);
  EXPECT_GE(seen.size(), 2U);
}

TEST(Sublog, ZeroBudgetsWithBaseRevenue) {
  Instance raw;
  raw.tree.num_vertices = 6;
  raw.tree.edges = {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}};
  raw.pricing = make_pricing(PricingPreset::affine, 6);
  raw.commodities = {{0, 4, 0, Rational(1)}, {2, 5, 0, Rational(2)}, {1, 2, 0, Rational(1)}};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto const r = sublog(normalize(raw), seed);
    EXPECT_TRUE(r.cuts.empty());
    EXPECT_EQ(r.revenue, 4);
  }
}

TEST(Sublog, ValidDeterministicAndAboveEmpty) {
  for (int t = 0; t < 30; ++t) {
    GenSpec spec;
    spec.num_vertices = 6 + t;
    spec.num_commodities = 15;
    spec.pricing = static_cast<PricingPreset>(t % 3);
    spec.seed = 9500 + t;
    auto const inst = normalize(gen_random(spec));
    SublogOptions opts;
    opts.diagnostics = true;
    auto const a = sublog(inst, 42, opts);
    auto const b = sublog(inst, 42, opts);
    EXPECT_EQ(dump_canonical(solution_to_json(a, true)), dump_canonical(solution_to_json(b, true)));
    EXPECT_GE(a.revenue, total_revenue(inst, CutSet{}));
    EXPECT_TRUE(std::is_sorted(a.cuts.begin(), a.cuts.end()));
    EXPECT_EQ(a.revenue, total_revenue(inst, a.cuts));
  }
}

}  // namespace
}  // namespace fza
