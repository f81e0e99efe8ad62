#include "diffusion/io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include "diffusion/errors.hpp"

namespace diffusion::io {

namespace {

const Json& require_field(const Json& doc, const char* field, const std::string& where) {
    if (!doc.is_object()) throw InputError(where + ": expected a JSON object");
    auto it = doc.find(field);
    if (it == doc.end()) throw InputError(where + ": missing field \"" + field + "\"");
    return *it;
}

std::int64_t require_int(const Json& value, const std::string& field) {
    if (!value.is_number_integer()) throw InputError("field \"" + field + "\" must be an integer");
    if (value.is_number_unsigned() && value.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
        throw InputError("field \"" + field + "\" is out of range");
    }
    return value.get<std::int64_t>();
}

std::size_t require_count(const Json& value, const std::string& field) {
    const auto v = require_int(value, field);
    if (v < 0) throw InputError("field \"" + field + "\" must be nonnegative");
    return static_cast<std::size_t>(v);
}

std::vector<Stack> parse_stack_array(const Json& value, const std::string& field) {
    if (!value.is_array()) throw InputError("field \"" + field + "\" must be an array of integers");
    std::vector<Stack> out;
    out.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) out.push_back(require_int(value[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

Graph parse_graph(const Json& doc) {
    const auto n = require_count(require_field(doc, "n", "graph"), "n");
    if (doc.contains("family")) {
        const auto& name = doc["family"];
        if (!name.is_string()) throw InputError("field \"family\" must be a string");
        const auto family = parse_family(name.get<std::string>());
        if (!family) throw InputError("field \"family\": unknown family \"" + name.get<std::string>() + "\"");
        return Graph::family(*family, n);
    }
    const auto& edges = require_field(doc, "edges", "graph");
    if (!edges.is_array()) throw InputError("field \"edges\" must be an array of [u, v] pairs");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string field = "edges[" + std::to_string(i) + "]";
        if (!edges[i].is_array() || edges[i].size() != 2) throw InputError("field \"" + field + "\" must be a pair");
        pairs.emplace_back(require_count(edges[i][0], field), require_count(edges[i][1], field));
    }
    return Graph::from_edge_list(n, pairs);
}

Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

Configuration parse_config(const Json& doc) {
    return Configuration(parse_stack_array(require_field(doc, "stacks", "config"), "stacks"));
}

Configuration parse_config(const Json& doc, const Graph& g) {
    auto c = parse_config(doc);
    if (c.size() != g.vertex_count()) throw SizeMismatch(g.vertex_count(), c.size());
    return c;
}

Json to_json(const Configuration& c) { return {{"stacks", Json(std::vector<Stack>(c.begin(), c.end()))}}; }

BoardPilePolyomino parse_polyomino(const Json& doc) {
    const auto& strips = require_field(doc, "strips", "polyomino");
    if (!strips.is_array()) throw InputError("field \"strips\" must be an array of [d, len] pairs");
    std::vector<Strip> out;
    for (std::size_t i = 0; i < strips.size(); ++i) {
        const std::string field = "strips[" + std::to_string(i) + "]";
        if (!strips[i].is_array() || strips[i].size() != 2) throw InputError("field \"" + field + "\" must be a pair");
        out.push_back({require_int(strips[i][0], field), require_int(strips[i][1], field)});
    }
    return BoardPilePolyomino::validate(std::move(out));
}

Json to_json(const BoardPilePolyomino& x) {
    Json strips = Json::array();
    for (const auto& s : x.strips()) strips.push_back({s.offset, s.length});
    return {{"strips", strips}};
}

Json to_json(const CompleteConfig& c) {
    Json levels = Json::array();
    for (const auto& l : c.levels()) levels.push_back({l.value, l.multiplicity});
    return {{"stacks", Json(c.to_multiset())}, {"levels", levels}};
}

Json to_json(const PeriodReport& report) {
    Json configs = Json::array();
    for (const auto& c : report.period_configs) configs.push_back(std::vector<Stack>(c.begin(), c.end()));
    return {{"preperiod", report.preperiod}, {"period", report.period}, {"configs", configs}};
}

PeriodReport parse_period_report(const Json& doc) {
    PeriodReport r;
    r.preperiod = require_count(require_field(doc, "preperiod", "period report"), "preperiod");
    r.period = require_count(require_field(doc, "period", "period report"), "period");
    const auto& configs = require_field(doc, "configs", "period report");
    if (!configs.is_array()) throw InputError("field \"configs\" must be an array");
    for (std::size_t i = 0; i < configs.size(); ++i) {
        r.period_configs.emplace_back(parse_stack_array(configs[i], "configs[" + std::to_string(i) + "]"));
    }
    return r;
}

Json count_to_json(std::size_t n, const BigCount& count) { return {{"n", n}, {"count", count.str()}}; }

Json trajectory_to_json(std::span<const Configuration> trajectory) {
    Json out = Json::array();
    for (const auto& c : trajectory) out.push_back(std::vector<Stack>(c.begin(), c.end()));
    return out;
}

std::string trajectory_to_csv(std::span<const Configuration> trajectory) {
    std::ostringstream out;
    out << "step";
    const std::size_t width = trajectory.empty() ? 0 : trajectory.front().size();
    for (std::size_t v = 0; v < width; ++v) out << ",v" << v;
    out << '\n';
    for (std::size_t t = 0; t < trajectory.size(); ++t) {
        out << t;
        for (auto s : trajectory[t]) out << ',' << s;
        out << '\n';
    }
    return out.str();
}

Json parse_document(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(origin + ": malformed JSON: " + e.what());
    }
}

Json read_document(const std::string& path, std::istream& stdin_stream) {
    if (path == "-") {
        std::string text((std::istreambuf_iterator<char>(stdin_stream)), std::istreambuf_iterator<char>());
        return parse_document(text, "<stdin>");
    }
    std::ifstream file(path);
    if (!file) throw InputError(path + ": cannot open file");
    std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    return parse_document(text, path);
}

}  // namespace diffusion::io
