#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "diffusion/bijection.hpp"
#include "diffusion/counting.hpp"
#include "diffusion/engine.hpp"
#include "diffusion/graph.hpp"
#include "diffusion/polyomino.hpp"

// JSON document schemas:
//   graph        {"n": 5, "edges": [[0,1], ...]}  or  {"family": "path", "n": 5}
//   config       {"stacks": [0, 2, 0, 4, 1]}
//   polyomino    {"strips": [[0,2], [3,3], [2,1]]}
//   period       {"preperiod": 3, "period": 2, "configs": [[...], ...]}
//   count        {"n": 11, "count": "66441"}
// Parse failures raise InputError naming the offending field.
namespace diffusion::io {

using Json = nlohmann::json;

Graph parse_graph(const Json& doc);
Json to_json(const Graph& g);

Configuration parse_config(const Json& doc);
// Also checks the stack count against the graph.
Configuration parse_config(const Json& doc, const Graph& g);
Json to_json(const Configuration& c);

BoardPilePolyomino parse_polyomino(const Json& doc);
Json to_json(const BoardPilePolyomino& x);

// {"stacks": [...], "levels": [[value, multiplicity], ...]}
Json to_json(const CompleteConfig& c);

Json to_json(const PeriodReport& report);
PeriodReport parse_period_report(const Json& doc);

Json count_to_json(std::size_t n, const BigCount& count);

Json trajectory_to_json(std::span<const Configuration> trajectory);
// One row per step: "step,v0,v1,...".
std::string trajectory_to_csv(std::span<const Configuration> trajectory);

// Reads a whole JSON document; "-" means standard input.
Json read_document(const std::string& path, std::istream& stdin_stream);
Json parse_document(const std::string& text, const std::string& origin);

}  // namespace diffusion::io
