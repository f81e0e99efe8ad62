#include "diffusion/graph.hpp"

#include <algorithm>
#include <string>

#include "diffusion/errors.hpp"

namespace diffusion {

namespace {

void require_size(std::size_t n, std::size_t minimum, std::string_view what) {
    if (n < minimum) {
        throw GraphError(GraphError::Kind::InvalidSize, std::string(what) + " needs at least " +
                                                            std::to_string(minimum) + " vertices, got " +
                                                            std::to_string(n));
    }
}

}  // namespace

std::string_view to_string(GraphFamily family) {
    switch (family) {
        case GraphFamily::Complete: return "complete";
        case GraphFamily::Path: return "path";
        case GraphFamily::Cycle: return "cycle";
        case GraphFamily::Star: return "star";
    }
    return "unknown";
}

std::optional<GraphFamily> parse_family(std::string_view name) {
    for (auto f : {GraphFamily::Complete, GraphFamily::Path, GraphFamily::Cycle, GraphFamily::Star}) {
        if (to_string(f) == name) return f;
    }
    return std::nullopt;
}

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adjacency_(n) {
    std::sort(edges_.begin(), edges_.end());
    for (const auto& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

Graph Graph::complete(std::size_t n) {
    require_size(n, 1, "complete graph");
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph Graph::path(std::size_t n) {
    require_size(n, 1, "path");
    std::vector<Edge> edges;
    for (Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
    return Graph(n, std::move(edges));
}

Graph Graph::cycle(std::size_t n) {
    require_size(n, 3, "cycle");
    std::vector<Edge> edges;
    for (Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
    edges.push_back({0, n - 1});
    return Graph(n, std::move(edges));
}

Graph Graph::star(std::size_t n) {
    require_size(n, 1, "star");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
    return Graph(n, std::move(edges));
}

Graph Graph::family(GraphFamily family, std::size_t n) {
    switch (family) {
        case GraphFamily::Complete: return complete(n);
        case GraphFamily::Path: return path(n);
        case GraphFamily::Cycle: return cycle(n);
        case GraphFamily::Star: return star(n);
    }
    throw GraphError(GraphError::Kind::InvalidSize, "unknown graph family");
}

Graph Graph::from_edge_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        const std::string label = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        if (a >= n || b >= n) {
            throw GraphError(GraphError::Kind::EndpointOutOfRange,
                             "edge " + label + " has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
        }
        if (a == b) throw GraphError(GraphError::Kind::SelfLoop, "edge " + label + " is a self-loop");
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
        throw GraphError(GraphError::Kind::DuplicateEdge, "edge (" + std::to_string(dup->u) + "," +
                                                              std::to_string(dup->v) + ") appears twice");
    }
    return Graph(n, std::move(sorted));
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    if (v >= n_) throw GraphError(GraphError::Kind::EndpointOutOfRange, "vertex " + std::to_string(v) + " out of range");
    return adjacency_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) return false;
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

}  // namespace diffusion
