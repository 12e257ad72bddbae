#pragma once

#include <filesystem>
#include <string>

#include "fza/io.hpp"

namespace fza {

// Instance spec objects accepted by the bench config:
//   {"family": "random-tree" | "random-path", "num_vertices", "num_commodities",
//    "pricing", "cap", "max_weight", "max_budget", "root", "seed"}
//   {"family": "star-sat", "num_vars", "formula"}
//   {"family": "path-sat", "num_vars", "formula", "M"}
Instance generate_from_json(json const& spec);

struct BenchReport {
  std::string report_csv;   // deterministic
  json summary;             // deterministic
  std::string timings_csv;  // wall-clock, not deterministic
};

// Config: {"algorithms": [...], "seeds": [...], "oracle": "brute",
//          "instances": [{"id", "file" | "generate", "root"?, "cuts"?}]}.
// Relative instance files resolve against base_dir.
BenchReport run_bench(json const& config, std::filesystem::path const& base_dir);

// Writes report.csv, summary.json and timings.csv into out_dir.
void bench_to_dir(std::filesystem::path const& config_file, std::filesystem::path const& out_dir);

}  // namespace fza
