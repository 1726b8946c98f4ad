#include "powerlambda/powergraph.hpp"

#include <sstream>

#include "powerlambda/errors.hpp"

namespace powerlambda {

namespace {

std::string dot_text(const std::string& name, const Graph& graph,
                     const std::vector<ElementId>& element_of,
                     const std::vector<std::uint64_t>& orders)
{
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (std::size_t i = 0; i < graph.vertex_count(); ++i) {
        out << "  v" << element_of[i] << " [label=\"v" << element_of[i]
            << " (ord=" << orders[i] << ")\"];\n";
    }
    for (auto [u, v] : graph.edges()) {
        out << "  v" << element_of[u] << " -- v" << element_of[v] << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string edge_text(const Graph& graph, const std::vector<ElementId>& element_of)
{
    std::ostringstream out;
    for (auto [u, v] : graph.edges()) {
        out << element_of[u] << ' ' << element_of[v] << '\n';
    }
    return out.str();
}

std::vector<ElementId> identity_map(std::size_t n)
{
    std::vector<ElementId> ids(n);
    for (std::size_t i = 0; i < n; ++i) {
        ids[i] = static_cast<ElementId>(i);
    }
    return ids;
}

} // namespace

PowerGraph build_power_graph(const FiniteGroup& group)
{
    PowerGraph pg{Graph(group.order()), group.element_orders()};
    for (std::size_t g = 1; g < group.order(); ++g) {
        for (ElementId h : cyclic_subgroup(group, static_cast<ElementId>(g))) {
            pg.graph.add_edge(static_cast<Vertex>(g), h);
        }
    }
    return pg;
}

PuncturedComplement punctured_complement(const PowerGraph& pg)
{
    PuncturedComplement pc;
    const std::size_t n = pg.graph.vertex_count();
    for (std::size_t g = 1; g < n; ++g) {
        pc.elements.push_back(static_cast<ElementId>(g));
        pc.orders.push_back(pg.orders[g]);
    }
    pc.graph = pg.graph.induced(pc.elements).complement();
    return pc;
}

bool is_adjacent(const PowerGraph& pg, ElementId u, ElementId v)
{
    if (u == v) {
        throw DomainError("is_adjacent: vertices must be distinct");
    }
    return pg.graph.adjacent(u, v);
}

bool at_distance_two(const PowerGraph& pg, ElementId u, ElementId v)
{
    return at_distance_two(pg.graph, u, v);
}

std::string export_dot(const PowerGraph& pg)
{
    return dot_text("power_graph", pg.graph, identity_map(pg.graph.vertex_count()), pg.orders);
}

std::string export_dot(const PuncturedComplement& pc)
{
    return dot_text("punctured_complement", pc.graph, pc.elements, pc.orders);
}

std::string export_edges(const PowerGraph& pg)
{
    return edge_text(pg.graph, identity_map(pg.graph.vertex_count()));
}

std::string export_edges(const PuncturedComplement& pc)
{
    return edge_text(pc.graph, pc.elements);
}

} // namespace powerlambda
