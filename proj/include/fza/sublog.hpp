#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fza/decomposition.hpp"
#include "fza/exact.hpp"
#include "fza/model.hpp"

namespace fza {

struct SublogOptions {
  std::optional<int> d;                 // branching override
  std::size_t guess_budget = 1'000'000;  // max price guesses per fragment
  bool diagnostics = false;
};

// RNG substream key of one fragment.
struct FragmentKey {
  int level = 0;
  int fragment = 0;
};

// Cuts outside the skeleton: each hanging subtree is active with
// probability 1/2 and solved exactly as a rooted instance at its attachment
// vertex.
CutSet non_skeleton_solve(Instance const& instance, std::vector<EdgeId> const& fragment,
                          SkeletonInfo const& skeleton, std::vector<int> const& commodities,
                          std::uint64_t seed, FragmentKey key);

// Per-commodity relation to one segment.
struct SegmentRelation {
  enum class Kind { none, inner, from_front, from_back, interior } kind = Kind::none;
  int overlap = 0;  // |P_i ∩ σ|
};

std::vector<std::vector<SegmentRelation>> relate_segments(
    Instance const& instance, SkeletonInfo const& skeleton,
    std::vector<int> const& commodities);

// Auxiliary generalized rooted instance on segment s rooted at its front
// (from_front = true) or back terminal. `guess` and `active` are indexed by
// segment.
GeneralizedPathInstance build_aux_instance(
    Instance const& instance, SkeletonInfo const& skeleton,
    std::vector<std::vector<SegmentRelation>> const& relations,
    std::vector<int> const& commodities, int s, bool from_front,
    std::vector<int> const& guess, std::vector<bool> const& active);

// {0} and all powers of two up to len.
std::vector<int> price_levels(int len);

struct SkeletonCandidate {
  std::vector<int> guess;
  std::vector<bool> active;
  std::vector<bool> from_front;
  CutSet cuts;
};

// Draws activity and roots for guess index g and solves every active segment.
SkeletonCandidate skeleton_candidate(Instance const& instance, SkeletonInfo const& skeleton,
                                     std::vector<std::vector<SegmentRelation>> const& relations,
                                     std::vector<int> const& commodities,
                                     std::vector<int> const& guess, std::uint64_t seed,
                                     FragmentKey key, std::uint64_t g);

struct SkeletonOutcome {
  SkeletonCandidate best;
  std::size_t guesses = 0;
};

// Tries every price guess; keeps the first one with maximal revenue over
// `commodities`. Throws capacity_exceeded when the guess count exceeds
// `guess_budget`.
SkeletonOutcome skeleton_solve(Instance const& instance, SkeletonInfo const& skeleton,
                               std::vector<int> const& commodities, std::uint64_t seed,
                               FragmentKey key, std::size_t guess_budget);

struct FragmentTrace {
  FragmentKey key;
  SkeletonInfo skeleton;
  CutSet non_skeleton_cuts;
  SkeletonOutcome skeleton_outcome;
  bool skeleton_chosen = false;
};

struct SublogTrace {
  Decomposition decomposition;
  CommodityAssignment assignment;
  std::vector<FragmentTrace> fragments;
  std::vector<CutSet> level_candidates;  // per level
  CutSet extra_candidate;
};

SolveResult sublog(Instance const& instance, std::uint64_t seed,
                   SublogOptions const& options = {}, SublogTrace* trace = nullptr);

}  // namespace fza
