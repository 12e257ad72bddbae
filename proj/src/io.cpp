#include "fza/io.hpp"

#include <fstream>
#include <sstream>

#include "fza/errors.hpp"

namespace fza {

namespace {

Rational rational_field(json const& j) {
  if (j.is_string()) {
    return parse_rational(j.get<std::string>());
  }
  if (j.is_number_integer()) {
    return Rational(std::to_string(j.get<long long>()));
  }
  throw invalid_input("expected a rational as string or integer, got " + j.dump());
}

int int_field(json const& j, char const* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw invalid_input(std::string("missing or non-integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

}  // namespace

Instance instance_from_json(json const& j) {
  if (!j.is_object()) {
    throw invalid_input("instance must be a JSON object");
  }
  if (j.contains("version") && j.at("version") != 1) {
    throw invalid_input("unsupported instance version " + j.at("version").dump());
  }
  Instance inst;
  inst.tree.num_vertices = int_field(j, "num_vertices");
  for (auto const& e : j.value("edges", json::array())) {
    if (!e.is_array() || e.size() != 2) {
      throw invalid_input("edge must be a pair [u, v]");
    }
    inst.tree.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  if (!j.contains("pricing") || !j.at("pricing").is_array()) {
    throw invalid_input("missing pricing table");
  }
  for (auto const& v : j.at("pricing")) {
    inst.pricing.values.push_back(rational_field(v));
  }
  for (auto const& c : j.value("commodities", json::array())) {
    Commodity com;
    com.source = int_field(c, "s");
    com.target = int_field(c, "t");
    com.budget = int_field(c, "u");
    com.weight = c.contains("w") ? rational_field(c.at("w")) : Rational(1);
    inst.commodities.push_back(com);
  }
  return inst;
}

json instance_to_json(Instance const& instance) {
  json j;
  j["version"] = 1;
  j["num_vertices"] = instance.tree.num_vertices;
  j["edges"] = json::array();
  for (auto [u, v] : instance.tree.edges) {
    j["edges"].push_back({u, v});
  }
  j["pricing"] = json::array();
  for (auto const& v : instance.pricing.values) {
    j["pricing"].push_back(to_string(v));
  }
  j["commodities"] = json::array();
  for (auto const& c : instance.commodities) {
    j["commodities"].push_back(
        {{"s", c.source}, {"t", c.target}, {"u", c.budget}, {"w", to_string(c.weight)}});
  }
  return j;
}

Instance read_instance(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) {
    throw invalid_input("cannot open " + path.string());
  }
  json j;
  try {
    j = json::parse(in);
  } catch (json::exception const& e) {
    throw invalid_input(path.string() + ": " + e.what());
  }
  try {
    return instance_from_json(j);
  } catch (json::exception const& e) {
    throw invalid_input(path.string() + ": " + e.what());
  }
}

void write_instance(std::filesystem::path const& path, Instance const& instance) {
  write_text(path, dump_canonical(instance_to_json(instance)));
}

json solution_to_json(SolveResult const& result, bool with_diagnostics) {
  json j;
  j["cuts"] = result.cuts;
  j["revenue"] = to_string(result.revenue);
  j["revenue_float"] = to_double(result.revenue);
  j["served"] = json::array();
  for (bool s : result.served) {
    j["served"].push_back(s);
  }
  j["algorithm"] = result.algorithm;
  j["seed"] = result.seed ? json(*result.seed) : json(nullptr);
  if (with_diagnostics) {
    json d;
    d["candidates"] = result.diagnostics.candidates;
    if (!result.diagnostics.detail_json.empty()) {
      d["detail"] = json::parse(result.diagnostics.detail_json);
    }
    j["diagnostics"] = d;
  }
  return j;
}

void write_solution(std::filesystem::path const& path, SolveResult const& result,
                    bool with_diagnostics) {
  write_text(path, dump_canonical(solution_to_json(result, with_diagnostics)));
}

std::string dump_canonical(json const& j) { return j.dump(2) + "\n"; }

void write_text(std::filesystem::path const& path, std::string const& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw invalid_input("cannot write " + path.string());
  }
  out << text;
}

}  // namespace fza
