#include "powerlambda/graph.hpp"

#include <algorithm>
#include <bit>

namespace powerlambda {

Graph::Graph(std::size_t vertex_count)
    : n_(vertex_count), words_((vertex_count + 63) / 64), bits_(n_ * words_, 0)
{
}

void Graph::add_edge(Vertex u, Vertex v)
{
    if (u == v) {
        return;
    }
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

std::size_t Graph::degree(Vertex u) const
{
    std::size_t deg = 0;
    for (std::uint64_t w : row(u)) {
        deg += static_cast<std::size_t>(std::popcount(w));
    }
    return deg;
}

std::size_t Graph::max_degree() const
{
    std::size_t best = 0;
    for (Vertex u = 0; u < n_; ++u) {
        best = std::max(best, degree(u));
    }
    return best;
}

std::size_t Graph::edge_count() const
{
    std::size_t total = 0;
    for (Vertex u = 0; u < n_; ++u) {
        total += degree(u);
    }
    return total / 2;
}

std::vector<Vertex> Graph::neighbors(Vertex u) const
{
    std::vector<Vertex> out;
    auto r = row(u);
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits != 0) {
            out.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

bool Graph::share_neighbor(Vertex u, Vertex v) const
{
    auto a = row(u);
    auto b = row(v);
    for (std::size_t w = 0; w < words_; ++w) {
        if ((a[w] & b[w]) != 0) {
            return true;
        }
    }
    return false;
}

Graph Graph::complement() const
{
    Graph out(n_);
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v = u + 1; v < n_; ++v) {
            if (!adjacent(u, v)) {
                out.add_edge(u, v);
            }
        }
    }
    return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const
{
    Graph out(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (std::size_t j = i + 1; j < keep.size(); ++j) {
            if (adjacent(keep[i], keep[j])) {
                out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
    }
    return out;
}

bool at_distance_two(const Graph& graph, Vertex u, Vertex v)
{
    return u != v && !graph.adjacent(u, v) && graph.share_neighbor(u, v);
}

} // namespace powerlambda
