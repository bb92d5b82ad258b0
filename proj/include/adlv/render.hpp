#pragma once

// Text renderings of stratum data: table, JSON (schema 1), Graphviz DOT,
// and the plain node/edge listing used by the figure fixtures.

#include <string>
#include <vector>

#include <json.hpp>

#include "adlv/gu_strata.hpp"

namespace adlv {

inline constexpr int json_schema_version = 1;

nlohmann::json to_json(int n, std::vector<StratumRecord> const &records);
/// Inverse of to_json; throws Error on malformed input.
std::vector<StratumRecord> records_from_json(nlohmann::json const &j);

std::string render_table(int n, std::vector<StratumRecord> const &records);
std::string render_dot(StratumGraph const &g);
std::string render_figure(StratumGraph const &g);

/// Node ids, braces and quoting of a DOT document produced by render_dot.
bool dot_well_formed(std::string const &dot);

} // namespace adlv
