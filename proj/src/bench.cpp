#include "fza/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include "fza/errors.hpp"
#include "fza/generators.hpp"
#include "fza/solve.hpp"

namespace fza {

namespace {

template <typename T>
std::optional<T> opt_field(json const& j, char const* key) {
  if (!j.contains(key) || j[key].is_null()) {
    return std::nullopt;
  }
  return j[key].get<T>();
}

std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

// Per-row lower bound on revenue / OPT, when the algorithm carries one.
std::optional<Rational> guarantee(std::string const& algorithm, Instance const& instance) {
  auto const L = ceil_log2(instance.num_vertices());
  if (algorithm == "brute" || algorithm == "rooted" || algorithm == "dp-umax" ||
      algorithm == "dp-pmax" || algorithm == "dp-cong") {
    return Rational(1);
  }
  if (algorithm == "single-density-path") {
    return Rational(1, 6 * (L + 1));
  }
  if (algorithm == "single-density-base") {
    return Rational(1, 12 * (L + 1));
  }
  return std::nullopt;
}

struct Row {
  std::string instance;
  std::string algorithm;
  std::string seed;
  std::string status = "ok";
  std::optional<Rational> revenue;
  std::optional<Rational> ratio;
  std::optional<bool> guarantee_ok;
  double runtime_ms = 0.0;
};

}  // namespace

Instance generate_from_json(json const& spec) {
  auto const family = spec.at("family").get<std::string>();
  if (family == "random-tree" || family == "random-path") {
    GenSpec g;
    g.family = family == "random-path" ? GenSpec::Family::random_path
                                       : GenSpec::Family::random_tree;
    g.num_vertices = spec.value("num_vertices", g.num_vertices);
    g.num_commodities = spec.value("num_commodities", g.num_commodities);
    g.pricing = parse_pricing_preset(spec.value("pricing", std::string("linear")));
    g.cap = spec.value("cap", g.cap);
    g.max_weight = spec.value("max_weight", g.max_weight);
    g.max_budget = opt_field<int>(spec, "max_budget");
    g.root = opt_field<int>(spec, "root");
    g.seed = spec.value("seed", std::uint64_t{0});
    return gen_random(g);
  }
  auto const phi =
      parse_formula(spec.at("formula").get<std::string>(), spec.at("num_vars").get<int>());
  if (family == "star-sat") {
    return gen_star_from_2sat(phi).instance;
  }
  if (family == "path-sat") {
    return gen_path_from_2sat(phi, parse_rational(spec.at("M").get<std::string>())).instance;
  }
  throw invalid_input("unknown instance family '" + family + "'");
}

BenchReport run_bench(json const& config, std::filesystem::path const& base_dir) {
  try {
    auto const algorithms = config.at("algorithms").get<std::vector<std::string>>();
    auto const seeds = config.value("seeds", std::vector<std::uint64_t>{0});
    auto const oracle = config.value("oracle", std::string("brute"));
    if (seeds.empty()) {
      throw invalid_input("bench needs at least one seed");
    }
    for (auto const& a : algorithms) {
      auto const& names = algorithm_names();
      if (std::find(names.begin(), names.end(), a) == names.end()) {
        throw invalid_input("unknown algorithm '" + a + "'");
      }
    }
    std::vector<Row> rows;
    std::map<std::string, int> seen_ids;
    for (auto const& spec : config.at("instances")) {
      auto const id = spec.at("id").get<std::string>();
      if (seen_ids[id]++ > 0) {
        throw invalid_input("duplicate instance id '" + id + "'");
      }
      Instance raw;
      if (spec.contains("file")) {
        auto path = std::filesystem::path(spec.at("file").get<std::string>());
        raw = read_instance(path.is_absolute() ? path : base_dir / path);
      } else {
        raw = generate_from_json(spec.at("generate"));
      }
      auto const instance = normalize(raw);
      SolveOptions base_opts;
      base_opts.root = opt_field<int>(spec, "root");
      base_opts.cuts = opt_field<int>(spec, "cuts");

      std::optional<Rational> opt;
      std::string oracle_status;
      try {
        opt = solve_by_name(oracle, instance, base_opts).revenue;
      } catch (capacity_exceeded const&) {
        oracle_status = "oracle-infeasible";
      } catch (invalid_input const&) {
        oracle_status = "oracle-infeasible";
      }

      for (auto const& a : algorithms) {
        std::vector<std::optional<std::uint64_t>> runs;
        if (is_randomized(a)) {
          runs.assign(seeds.begin(), seeds.end());
        } else {
          runs.emplace_back(std::nullopt);
        }
        for (auto const& s : runs) {
          Row row;
          row.instance = id;
          row.algorithm = a;
          row.seed = s ? std::to_string(*s) : "";
          auto opts = base_opts;
          opts.seed = s.value_or(0);
          try {
            auto const r = solve_by_name(a, instance, opts);
            row.revenue = r.revenue;
            row.runtime_ms = r.diagnostics.runtime_ms;
          } catch (capacity_exceeded const& e) {
            row.status = "skipped-capacity";
          } catch (invalid_input const& e) {
            row.status = "skipped-invalid";
          }
          if (row.revenue) {
            if (!opt) {
              row.status = oracle_status;
            } else {
              // OPT = 0 forces revenue 0, which counts as optimal.
              row.ratio = *opt == 0 ? Rational(1) : Rational(*row.revenue / *opt);
              if (auto g = guarantee(a, instance)) {
                row.guarantee_ok = *row.ratio >= *g;
              }
            }
          }
          rows.push_back(std::move(row));
        }
      }
    }
    std::stable_sort(rows.begin(), rows.end(), [](Row const& x, Row const& y) {
      return std::tie(x.instance, x.algorithm, x.seed) < std::tie(y.instance, y.algorithm, y.seed);
    });

    BenchReport out;
    std::ostringstream csv;
    std::ostringstream timings;
    csv << "instance,algorithm,seed,status,revenue,revenue_float,ratio,ratio_float,"
           "guarantee_ok\n";
    timings << "instance,algorithm,seed,runtime_ms\n";
    struct Agg {
      int rows = 0;
      int rated = 0;
      Rational sum = 0;
      std::optional<Rational> min;
      int violations = 0;
    };
    std::map<std::string, Agg> agg;
    for (auto const& a : algorithms) {
      agg[a];
    }
    for (auto const& r : rows) {
      csv << r.instance << ',' << r.algorithm << ',' << r.seed << ',' << r.status << ','
          << (r.revenue ? to_string(*r.revenue) : "") << ','
          << (r.revenue ? fixed(to_double(*r.revenue)) : "") << ','
          << (r.ratio ? to_string(*r.ratio) : "") << ','
          << (r.ratio ? fixed(to_double(*r.ratio)) : "") << ','
          << (r.guarantee_ok ? (*r.guarantee_ok ? "true" : "false") : "") << '\n';
      timings << r.instance << ',' << r.algorithm << ',' << r.seed << ','
              << fixed(r.runtime_ms) << '\n';
      auto& a = agg[r.algorithm];
      ++a.rows;
      if (r.ratio) {
        ++a.rated;
        a.sum += *r.ratio;
        if (!a.min || *r.ratio < *a.min) {
          a.min = *r.ratio;
        }
      }
      if (r.guarantee_ok && !*r.guarantee_ok) {
        ++a.violations;
      }
    }
    out.report_csv = csv.str();
    out.timings_csv = timings.str();
    out.summary = json::object();
    out.summary["oracle"] = oracle;
    out.summary["algorithms"] = json::object();
    for (auto const& [name, a] : agg) {
      json s;
      s["rows"] = a.rows;
      s["rated_rows"] = a.rated;
      if (a.rated > 0) {
        Rational mean = a.sum / a.rated;
        s["mean_ratio"] = to_string(mean);
        s["mean_ratio_float"] = fixed(to_double(mean));
        s["min_ratio"] = to_string(*a.min);
        s["min_ratio_float"] = fixed(to_double(*a.min));
      } else {
        s["mean_ratio"] = nullptr;
        s["mean_ratio_float"] = nullptr;
        s["min_ratio"] = nullptr;
        s["min_ratio_float"] = nullptr;
      }
      s["guarantee_violations"] = a.violations;
      out.summary["algorithms"][name] = s;
    }
    return out;
  } catch (json::exception const& e) {
    throw invalid_input(std::string("bench config: ") + e.what());
  }
}

void bench_to_dir(std::filesystem::path const& config_file,
                  std::filesystem::path const& out_dir) {
  std::ifstream in(config_file);
  if (!in) {
    throw invalid_input("cannot open " + config_file.string());
  }
  json config;
  try {
    config = json::parse(in);
  } catch (json::exception const& e) {
    throw invalid_input(std::string("bench config: ") + e.what());
  }
  auto const report = run_bench(config, config_file.parent_path());
  std::filesystem::create_directories(out_dir);
  write_text(out_dir / "report.csv", report.report_csv);
  write_text(out_dir / "summary.json", dump_canonical(report.summary));
  write_text(out_dir / "timings.csv", report.timings_csv);
}

}  // namespace fza
