#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace diffusion {

using Vertex = std::size_t;

// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class GraphFamily { Complete, Path, Cycle, Star };

std::string_view to_string(GraphFamily family);
std::optional<GraphFamily> parse_family(std::string_view name);

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Edges are kept as a sorted edge list and
/// as sorted per-vertex neighbour lists, so iteration order is
/// deterministic and adjacency queries are logarithmic.
class Graph {
public:
    static Graph complete(std::size_t n);
    static Graph path(std::size_t n);
    static Graph cycle(std::size_t n);
    // Vertex 0 is the centre.
    static Graph star(std::size_t n);
    static Graph family(GraphFamily family, std::size_t n);

    /// Validates and builds a graph from unordered vertex pairs. Self-loops,
    /// duplicate edges (in either orientation) and endpoints >= n each raise
    /// a GraphError with a distinct kind.
    static Graph from_edge_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    bool adjacent(Vertex u, Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

}  // namespace diffusion
