#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace powerlambda {

using Vertex = std::uint32_t;

/// Simple undirected graph stored as a packed symmetric bit matrix.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t vertex_count);

    std::size_t vertex_count() const { return n_; }
    std::size_t words_per_row() const { return words_; }

    void add_edge(Vertex u, Vertex v);
    bool adjacent(Vertex u, Vertex v) const
    {
        return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
    }

    std::span<const std::uint64_t> row(Vertex u) const { return {bits_.data() + u * words_, words_}; }

    std::size_t degree(Vertex u) const;
    std::size_t max_degree() const;
    std::size_t edge_count() const;
    std::vector<Vertex> neighbors(Vertex u) const;

    /// Edges (u, v) with u < v, lexicographically ascending.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool share_neighbor(Vertex u, Vertex v) const;

    /// Same vertex set, edge iff distinct and non-adjacent here.
    Graph complement() const;

    /// Subgraph induced on `keep` (new vertex i is keep[i]).
    Graph induced(std::span<const Vertex> keep) const;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Non-adjacent with a common neighbour, i.e. the shortest u-v path has
/// length exactly two. False for u == v.
bool at_distance_two(const Graph& graph, Vertex u, Vertex v);

} // namespace powerlambda
