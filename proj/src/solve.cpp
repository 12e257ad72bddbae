#include "fza/solve.hpp"

#include <algorithm>
#include <chrono>

#include "fza/density.hpp"
#include "fza/errors.hpp"
#include "fza/exact.hpp"
#include "fza/param_path.hpp"
#include "fza/sublog.hpp"

namespace fza {

std::vector<std::string> const& algorithm_names() {
  static std::vector<std::string> const names = {
      "brute",          "rooted",      "gen-rooted-path",     "single-density",
      "single-density-path", "single-density-base", "simplified", "sublog",
      "dp-umax",        "dp-pmax",     "dp-cong"};
  return names;
}

bool is_randomized(std::string const& algorithm) {
  return algorithm == "single-density" || algorithm == "simplified" || algorithm == "sublog";
}

namespace {

SolveResult gen_rooted_path(Instance const& instance, SolveOptions const& options) {
  if (!options.cuts) {
    throw invalid_input("gen-rooted-path needs a cut count");
  }
  if (!instance.index->is_path()) {
    throw invalid_input("gen-rooted-path needs a path instance");
  }
  VertexId root = 0;
  if (options.root) {
    root = *options.root;
  } else if (instance.num_edges() > 0) {
    auto const first = instance.index->path_order().front();
    auto const [a, b] = instance.index->endpoints(first);
    root = instance.index->degree(a) == 1 ? a : b;
  }
  std::vector<EdgeId> position_to_edge;
  auto const gpi = to_generalized(instance, root, &position_to_edge);
  auto const sol = generalized_rooted_path_dp(gpi, *options.cuts);
  CutSet cuts;
  for (auto p : sol.cut_positions) {
    cuts.push_back(position_to_edge[p - 1]);
  }
  auto r = make_result(instance, std::move(cuts), "gen-rooted-path");
  r.diagnostics.candidates = 1;
  return r;
}

SolveResult dispatch(std::string const& algorithm, Instance const& instance,
                     SolveOptions const& options) {
  if (algorithm == "brute") {
    return brute_force(instance);
  }
  if (algorithm == "rooted") {
    return rooted_dp(instance, options.root.value_or(0));
  }
  if (algorithm == "gen-rooted-path") {
    return gen_rooted_path(instance, options);
  }
  if (algorithm == "single-density") {
    return single_density(instance, options.seed);
  }
  if (algorithm == "single-density-path") {
    return single_density_path(instance);
  }
  if (algorithm == "single-density-base") {
    return single_density_base(instance);
  }
  if (algorithm == "simplified") {
    return simplified_single_density(instance, options.seed);
  }
  if (algorithm == "sublog") {
    SublogOptions so;
    so.diagnostics = options.diagnostics;
    return sublog(instance, options.seed, so);
  }
  if (algorithm == "dp-umax") {
    return dp_umax(instance);
  }
  if (algorithm == "dp-pmax") {
    return dp_pmax(instance);
  }
  if (algorithm == "dp-cong") {
    return dp_congestion(instance);
  }
  throw invalid_input("unknown algorithm '" + algorithm + "'");
}

}  // namespace

SolveResult solve_by_name(std::string const& algorithm, Instance const& instance,
                          SolveOptions const& options) {
  auto const start = std::chrono::steady_clock::now();
  auto r = dispatch(algorithm, instance, options);
  r.diagnostics.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return r;
}

}  // namespace fza
