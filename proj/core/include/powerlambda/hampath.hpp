#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "powerlambda/graph.hpp"
#include "powerlambda/powergraph.hpp"
#include "powerlambda/spectrum.hpp"

namespace powerlambda {

/// Sequence of element indices; as a Hamiltonian path it covers G \ {1} and
/// consecutive entries are non-adjacent in the power graph.
using Path = std::vector<ElementId>;

/// Distinct, non-identity, consecutive pairs non-adjacent. Returns a
/// description of the first problem, or nullopt.
std::optional<std::string> check_chain(const PowerGraph& pg, std::span<const ElementId> path);

/// check_chain plus coverage: exactly |G| - 1 vertices.
std::optional<std::string> validate_hamiltonian(const PowerGraph& pg,
                                                std::span<const ElementId> path);

/// Column-major interleaving of the classes of one order: first members of
/// every class, then second members, and so on. Consecutive entries come
/// from different classes. PreconditionError when there is a single class.
Path gamma_path(const OrderClasses& oc);

/// Concatenation of the given gamma paths in the given order.
Path join_same_length(std::span<const Path> paths);

/// The orders of one stratum in concatenation order, each with its classes
/// in interleaving order.
struct StratumBlock {
    int length = 0;
    std::vector<OrderClasses> orders;

    Path path() const;
    bool contains(ElementId h) const;
};

/// Orders of length k ascending, classes as in the decomposition.
StratumBlock make_block(const ClassDecomposition& dec, int k);

/// Reorders so that h comes first: h's order moves to the front, h's class
/// becomes the first class and h the first member of it. Relative order of
/// everything else is kept. DomainError when h is not in the block.
StratumBlock rotate_block_to_start(StratumBlock block, ElementId h);

/// Lowest-indexed element of `lower` not adjacent to g in the power graph.
/// TheoremViolation when every candidate is adjacent to g.
ElementId descend_junction(ElementId g, std::span<const ElementId> lower, const PowerGraph& pg);

struct Junction {
    ElementId from;
    ElementId to;
    int from_length;
    int to_length;
};

struct ConstructionTrace {
    std::map<std::uint64_t, Path> gamma;   // by order, before any rotation
    std::map<int, Path> blocks;            // by length, as emitted
    std::vector<Junction> junctions;
    std::vector<int> concatenation_order;  // lengths, in emitted order
};

struct ConstructiveResult {
    Path path;
    ConstructionTrace trace;
};

/// Orders d with fewer than two cyclic classes; empty iff the constructive
/// algorithm's width hypothesis holds.
std::vector<std::uint64_t> constructive_obstructions(const ClassDecomposition& dec);

/// Hamiltonian path in the punctured complement assembled from the strata,
/// highest length first, joined by descend_junction. The result is validated
/// before it is returned. Throws PreconditionError listing every order with
/// a single class, TheoremViolation when a junction or validation fails.
ConstructiveResult build_constructive_hamiltonian(const FiniteGroup& group,
                                                  const ClassDecomposition& dec,
                                                  const PowerGraph& pg);

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

const char* to_string(SearchStatus status);

struct SearchResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::vector<Vertex> path;
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Depth-first Hamiltonian path search on an arbitrary graph. Start vertices
/// are tried by ascending degree, and neighbours are expanded by ascending
/// number of unvisited neighbours (ties by index). Exhausted means no
/// Hamiltonian path exists.
SearchResult backtracking_hamiltonian(const Graph& graph,
                                      std::uint64_t node_budget = kDefaultNodeBudget);

/// Same, with the found path translated to element indices.
SearchResult backtracking_hamiltonian(const PuncturedComplement& pc,
                                      std::uint64_t node_budget = kDefaultNodeBudget);

} // namespace powerlambda
