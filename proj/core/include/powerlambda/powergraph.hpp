#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "powerlambda/graph.hpp"
#include "powerlambda/group.hpp"

namespace powerlambda {

/// Power graph of a finite group: x ~ y iff one is a positive power of the
/// other. Vertex i is element i.
struct PowerGraph {
    Graph graph;
    std::vector<std::uint64_t> orders; // element orders, by vertex
};

/// Complement of the power graph with the identity removed. Local vertex i
/// stands for element `elements[i]`.
struct PuncturedComplement {
    Graph graph;
    std::vector<ElementId> elements;
    std::vector<std::uint64_t> orders; // by local vertex
};

PowerGraph build_power_graph(const FiniteGroup& group);

PuncturedComplement punctured_complement(const PowerGraph& pg);

/// DomainError when u == v.
bool is_adjacent(const PowerGraph& pg, ElementId u, ElementId v);

bool at_distance_two(const PowerGraph& pg, ElementId u, ElementId v);

/// DOT text with vertices "v<element> (ord=<d>)" and edges ascending.
std::string export_dot(const PowerGraph& pg);
std::string export_dot(const PuncturedComplement& pc);

/// One "u v" line per edge, u < v, ascending; vertices are element indices.
std::string export_edges(const PowerGraph& pg);
std::string export_edges(const PuncturedComplement& pc);

} // namespace powerlambda
