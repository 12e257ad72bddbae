#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fza/formula.hpp"
#include "fza/model.hpp"

namespace fza {

enum class PricingPreset { linear, affine, capped };

PricingPreset parse_pricing_preset(std::string const& name);
std::string to_string(PricingPreset preset);

// f(x) = x, x + 1 or min(x, cap) for x = 0..length-1.
PricingFunction make_pricing(PricingPreset preset, int length, int cap = 2);

struct GenSpec {
  enum class Family { random_tree, random_path } family = Family::random_tree;
  int num_vertices = 8;
  int num_commodities = 6;
  PricingPreset pricing = PricingPreset::linear;
  int cap = 2;
  int max_weight = 3;                  // weights drawn from 1..max_weight
  std::optional<int> max_budget;       // budgets drawn from 0..min(|P|, max_budget)
  std::optional<VertexId> root;        // every commodity starts here when set
  std::uint64_t seed = 0;
};

// Labels are shuffled; (path, budget) pairs are distinct and budgets never
// exceed path length, so normalize leaves the result unchanged. Fewer than
// num_commodities are emitted when distinct pairs run out.
Instance gen_random(GenSpec const& spec);

// Optimal revenue is target(y*) = base + slope * y* for the formula optimum y*.
struct ReductionInstance {
  Instance instance;
  Rational base;
  Rational slope;

  Rational target(int y) const { return base + slope * y; }
};

// Star with center 0 and, for variable v, leaves 2v+1 (x) and 2v+2 (not x).
// Rejects clauses repeating the same literal.
ReductionInstance gen_star_from_2sat(Formula2CNF const& phi);

// Path of 10n edges: 5-edge gadgets for x1, not x1, x2, ... Requires M > m.
ReductionInstance gen_path_from_2sat(Formula2CNF const& phi, Rational const& big_m);

}  // namespace fza
