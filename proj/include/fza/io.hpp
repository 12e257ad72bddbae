#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "fza/model.hpp"

namespace fza {

using json = nlohmann::json;

// Instance files carry "version": 1. Keys are emitted sorted; rationals as
// lowest-terms strings.
Instance instance_from_json(json const& j);
json instance_to_json(Instance const& instance);

Instance read_instance(std::filesystem::path const& path);
void write_instance(std::filesystem::path const& path, Instance const& instance);

// Runtime is never serialized so equal inputs give equal bytes.
json solution_to_json(SolveResult const& result, bool with_diagnostics);
void write_solution(std::filesystem::path const& path, SolveResult const& result,
                    bool with_diagnostics);

std::string dump_canonical(json const& j);
void write_text(std::filesystem::path const& path, std::string const& text);

}  // namespace fza
