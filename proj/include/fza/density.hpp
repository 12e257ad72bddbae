#pragma once

#include <cstdint>
#include <vector>

#include "fza/model.hpp"

namespace fza {

struct DensityClassification {
  int num_classes_minus_one = 0;  // L = ceil(log2 n)
  std::vector<Rational> density;  // u_i / |P_i|
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;  // classes[0..L]
};

// Class 0 holds u_i < min_budget; class j >= 1 holds d_i in (2^-j, 2^(1-j)].
DensityClassification classify_by_density(Instance const& instance, int min_budget = 1);

// {e : dist(root, e) = theta mod 2^(j+1)}.
CutSet offset_candidate(Instance const& instance, VertexId root, int j, int theta);

// Offset candidate with each edge dropped by an independent fair coin from
// the (j, theta) substream.
CutSet thinned_candidate(Instance const& instance, VertexId root, int j, int theta,
                         std::uint64_t seed);

// Every 2^j-th edge along the path starting at position theta (1-based).
CutSet path_offset_candidate(Instance const& instance, int j, int theta);

// Each edge independently with probability 2^(-j-1).
CutSet simplified_candidate(Instance const& instance, int j, std::uint64_t seed);

SolveResult single_density(Instance const& instance, std::uint64_t seed);
SolveResult single_density_path(Instance const& instance);
SolveResult single_density_base(Instance const& instance);
SolveResult simplified_single_density(Instance const& instance, std::uint64_t seed);

}  // namespace fza
