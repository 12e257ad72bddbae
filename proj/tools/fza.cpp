#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fza/bench.hpp"
#include "fza/errors.hpp"
#include "fza/generators.hpp"
#include "fza/io.hpp"
#include "fza/solve.hpp"

namespace {

struct SolveArgs {
  std::string algo;
  std::string input;
  std::string output;
  std::uint64_t seed = 0;
  std::optional<int> root;
  std::optional<int> cuts;
  bool diagnostics = false;
};

struct GenArgs {
  std::string output;
  std::uint64_t seed = 0;
  // random
  std::string family = "tree";
  int vertices = 8;
  int commodities = 6;
  std::string pricing = "linear";
  int cap = 2;
  int max_weight = 3;
  std::optional<int> max_budget;
  std::optional<int> root;
  // star-sat, path-sat
  int vars = 1;
  std::string formula;
  std::string big_m;
};

int run_solve(SolveArgs const& a) {
  auto const instance = fza::normalize(fza::read_instance(a.input));
  fza::SolveOptions opts;
  opts.seed = a.seed;
  opts.root = a.root;
  opts.cuts = a.cuts;
  opts.diagnostics = a.diagnostics;
  auto r = fza::solve_by_name(a.algo, instance, opts);
  if (fza::is_randomized(a.algo)) {
    r.seed = a.seed;
  }
  fza::write_solution(a.output, r, a.diagnostics);
  std::cerr << a.algo << ": revenue " << fza::to_string(r.revenue) << ", "
            << r.diagnostics.runtime_ms << " ms\n";
  return 0;
}

int run_gen(std::string const& kind, GenArgs const& a) {
  fza::Instance out;
  if (kind == "random") {
    fza::GenSpec g;
    if (a.family != "tree" && a.family != "path") {
      throw fza::invalid_input("--family must be tree or path");
    }
    g.family = a.family == "path" ? fza::GenSpec::Family::random_path
                                  : fza::GenSpec::Family::random_tree;
    g.num_vertices = a.vertices;
    g.num_commodities = a.commodities;
    g.pricing = fza::parse_pricing_preset(a.pricing);
    g.cap = a.cap;
    g.max_weight = a.max_weight;
    g.max_budget = a.max_budget;
    g.root = a.root;
    g.seed = a.seed;
    out = fza::gen_random(g);
  } else {
    auto const phi = fza::parse_formula(a.formula, a.vars);
    if (kind == "star-sat") {
      out = fza::gen_star_from_2sat(phi).instance;
    } else {
      if (a.big_m.empty()) {
        throw fza::invalid_input("path-sat needs --M");
      }
      out = fza::gen_path_from_2sat(phi, fza::parse_rational(a.big_m)).instance;
    }
  }
  fza::write_instance(a.output, out);
  return 0;
}

int run_validate(std::string const& input) {
  auto const raw = fza::read_instance(input);
  auto const inst = fza::normalize(raw);
  auto const p = fza::parameters(inst);
  fza::json j;
  j["valid"] = true;
  j["num_vertices"] = inst.num_vertices();
  j["num_edges"] = inst.num_edges();
  j["num_commodities"] = inst.num_commodities();
  j["merged_commodities"] = raw.commodities.size() - inst.commodities.size();
  j["is_path"] = inst.index->is_path();
  j["u_max"] = p.u_max;
  j["p_max"] = p.p_max;
  j["congestion"] = p.congestion;
  std::cout << fza::dump_canonical(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fare zone assignment solvers on trees"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run one algorithm on an instance");
  solve_cmd->add_option("--algo", solve.algo)
      ->required()
      ->check(CLI::IsMember(fza::algorithm_names()));
  solve_cmd->add_option("--input", solve.input)->required();
  solve_cmd->add_option("--output", solve.output)->required();
  solve_cmd->add_option("--seed", solve.seed);
  solve_cmd->add_option("--root", solve.root);
  solve_cmd->add_option("--cuts", solve.cuts);
  solve_cmd->add_flag("--diagnostics", solve.diagnostics);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->require_subcommand(1);
  auto add_common = [&](CLI::App* c) {
    c->add_option("--output", gen.output)->required();
    c->add_option("--seed", gen.seed);
  };
  auto* gen_random = gen_cmd->add_subcommand("random", "Random tree or path");
  add_common(gen_random);
  gen_random->add_option("--family", gen.family, "tree or path");
  gen_random->add_option("--vertices,-n", gen.vertices);
  gen_random->add_option("--commodities,-k", gen.commodities);
  gen_random->add_option("--pricing", gen.pricing, "linear, affine or capped");
  gen_random->add_option("--cap", gen.cap);
  gen_random->add_option("--max-weight", gen.max_weight);
  gen_random->add_option("--max-budget", gen.max_budget);
  gen_random->add_option("--root", gen.root, "common source of every commodity");
  for (auto name : {"star-sat", "path-sat"}) {
    auto* c = gen_cmd->add_subcommand(name, "Instance from a 2-CNF formula");
    add_common(c);
    c->add_option("--vars", gen.vars)->required();
    c->add_option("--formula", gen.formula, "e.g. \"1 -2; -1 -2\"")->required();
    if (std::string(name) == "path-sat") {
      c->add_option("--M", gen.big_m, "weight scale, must exceed the clause count");
    }
  }

  std::string bench_config;
  std::string bench_dir;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark config");
  bench_cmd->add_option("--config", bench_config)->required();
  bench_cmd->add_option("--output-dir", bench_dir)->required();

  std::string validate_input;
  auto* validate_cmd = app.add_subcommand("validate", "Check and normalize an instance");
  validate_cmd->add_option("--input", validate_input)->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    auto const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve_cmd->parsed()) {
      return run_solve(solve);
    }
    if (gen_cmd->parsed()) {
      for (auto* c : gen_cmd->get_subcommands()) {
        return run_gen(c->get_name(), gen);
      }
    }
    if (bench_cmd->parsed()) {
      fza::bench_to_dir(bench_config, bench_dir);
      return 0;
    }
    if (validate_cmd->parsed()) {
      return run_validate(validate_input);
    }
  } catch (fza::invalid_input const& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (fza::capacity_exceeded const& e) {
    std::cerr << "capacity exceeded: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
