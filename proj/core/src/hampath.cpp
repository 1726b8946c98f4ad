#include "powerlambda/hampath.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "powerlambda/errors.hpp"

namespace powerlambda {

std::optional<std::string> check_chain(const PowerGraph& pg, std::span<const ElementId> path)
{
    const std::size_t n = pg.graph.vertex_count();
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < path.size(); ++i) {
        const ElementId v = path[i];
        if (v >= n) {
            return "vertex " + std::to_string(v) + " out of range";
        }
        if (v == FiniteGroup::identity()) {
            return "path contains the identity at position " + std::to_string(i);
        }
        if (seen[v]) {
            return "vertex " + std::to_string(v) + " repeated at position " + std::to_string(i);
        }
        seen[v] = true;
        if (i > 0 && pg.graph.adjacent(path[i - 1], v)) {
            return "consecutive vertices " + std::to_string(path[i - 1]) + " and "
                   + std::to_string(v) + " are adjacent in the power graph";
        }
    }
    return std::nullopt;
}

std::optional<std::string> validate_hamiltonian(const PowerGraph& pg,
                                                std::span<const ElementId> path)
{
    const std::size_t expected = pg.graph.vertex_count() - 1;
    if (path.size() != expected) {
        return "path has " + std::to_string(path.size()) + " vertices, expected "
               + std::to_string(expected);
    }
    return check_chain(pg, path);
}

Path gamma_path(const OrderClasses& oc)
{
    if (oc.classes.size() < 2) {
        throw PreconditionError("order " + std::to_string(oc.order) + " has "
                                + std::to_string(oc.classes.size())
                                + " cyclic class(es); the interleaving needs at least 2");
    }
    const std::size_t width = oc.classes.front().members.size();
    Path path;
    path.reserve(width * oc.classes.size());
    for (std::size_t column = 0; column < width; ++column) {
        for (const CyclicClass& cls : oc.classes) {
            path.push_back(cls.members.at(column));
        }
    }
    return path;
}

Path join_same_length(std::span<const Path> paths)
{
    Path out;
    for (const Path& p : paths) {
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

Path StratumBlock::path() const
{
    std::vector<Path> gammas;
    gammas.reserve(orders.size());
    for (const OrderClasses& oc : orders) {
        gammas.push_back(gamma_path(oc));
    }
    return join_same_length(gammas);
}

bool StratumBlock::contains(ElementId h) const
{
    for (const OrderClasses& oc : orders) {
        for (const CyclicClass& cls : oc.classes) {
            if (std::find(cls.members.begin(), cls.members.end(), h) != cls.members.end()) {
                return true;
            }
        }
    }
    return false;
}

StratumBlock make_block(const ClassDecomposition& dec, int k)
{
    StratumBlock block;
    block.length = k;
    auto it = dec.strata.find(k);
    if (it == dec.strata.end()) {
        return block;
    }
    for (std::uint64_t d : it->second) {
        block.orders.push_back(dec.classes_of(d));
    }
    return block;
}

StratumBlock rotate_block_to_start(StratumBlock block, ElementId h)
{
    for (std::size_t i = 0; i < block.orders.size(); ++i) {
        auto& classes = block.orders[i].classes;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            auto& members = classes[c].members;
            auto pos = std::find(members.begin(), members.end(), h);
            if (pos == members.end()) {
                continue;
            }
            std::rotate(members.begin(), pos, pos + 1);
            std::rotate(classes.begin(), classes.begin() + static_cast<std::ptrdiff_t>(c),
                        classes.begin() + static_cast<std::ptrdiff_t>(c) + 1);
            std::rotate(block.orders.begin(),
                        block.orders.begin() + static_cast<std::ptrdiff_t>(i),
                        block.orders.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            return block;
        }
    }
    throw DomainError("rotate_block_to_start: element " + std::to_string(h)
                      + " is not in the block of length " + std::to_string(block.length));
}

ElementId descend_junction(ElementId g, std::span<const ElementId> lower, const PowerGraph& pg)
{
    std::optional<ElementId> best;
    for (ElementId h : lower) {
        if (h != g && !pg.graph.adjacent(g, h) && (!best || h < *best)) {
            best = h;
        }
    }
    if (!best) {
        throw TheoremViolation("descend_junction: element " + std::to_string(g)
                               + " is adjacent to every candidate of the lower stratum");
    }
    return *best;
}

std::vector<std::uint64_t> constructive_obstructions(const ClassDecomposition& dec)
{
    std::vector<std::uint64_t> bad;
    for (const OrderClasses& oc : dec.by_order) {
        if (oc.classes.size() < 2) {
            bad.push_back(oc.order);
        }
    }
    return bad;
}

ConstructiveResult build_constructive_hamiltonian(const FiniteGroup& group,
                                                  const ClassDecomposition& dec,
                                                  const PowerGraph& pg)
{
    if (auto bad = constructive_obstructions(dec); !bad.empty()) {
        std::ostringstream msg;
        msg << "constructive Hamiltonian path needs at least two cyclic classes per order;"
               " single class at d =";
        for (std::uint64_t d : bad) {
            msg << ' ' << d;
        }
        throw PreconditionError(msg.str());
    }

    ConstructiveResult result;
    ConstructionTrace& trace = result.trace;
    for (const OrderClasses& oc : dec.by_order) {
        trace.gamma[oc.order] = gamma_path(oc);
    }

    std::vector<int> lengths;
    for (const auto& [k, orders] : dec.strata) {
        lengths.push_back(k);
    }

    Path& path = result.path;
    for (std::size_t i = lengths.size(); i-- > 0;) {
        const int k = lengths[i];
        StratumBlock block = make_block(dec, k);
        if (!path.empty()) {
            const ElementId g = path.back();
            const std::vector<ElementId> lower = stratum(dec, group, k);
            const ElementId h = descend_junction(g, lower, pg);
            trace.junctions.push_back({g, h, lengths[i + 1], k});
            block = rotate_block_to_start(std::move(block), h);
        }
        Path segment = block.path();
        path.insert(path.end(), segment.begin(), segment.end());
        trace.blocks[k] = std::move(segment);
        trace.concatenation_order.push_back(k);
    }

    if (auto problem = validate_hamiltonian(pg, path)) {
        throw TheoremViolation("constructed path failed validation: " + *problem);
    }
    return result;
}

const char* to_string(SearchStatus status)
{
    switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "unknown";
}

namespace {

bool connected(const Graph& graph)
{
    const std::size_t n = graph.vertex_count();
    if (n == 0) {
        return true;
    }
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : graph.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = true;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

class HamiltonianSearch {
public:
    HamiltonianSearch(const Graph& graph, std::uint64_t budget)
        : graph_(graph), n_(graph.vertex_count()), budget_(budget)
    {
        adjacency_.reserve(n_);
        for (Vertex v = 0; v < n_; ++v) {
            adjacency_.push_back(graph.neighbors(v));
        }
    }

    SearchResult run()
    {
        SearchResult result;
        if (n_ == 0) {
            result.status = SearchStatus::Found;
            return result;
        }
        if (!connected(graph_)) {
            result.status = SearchStatus::Exhausted;
            return result;
        }
        std::vector<Vertex> starts(n_);
        std::iota(starts.begin(), starts.end(), 0U);
        std::stable_sort(starts.begin(), starts.end(), [&](Vertex a, Vertex b) {
            return adjacency_[a].size() < adjacency_[b].size();
        });
        for (Vertex start : starts) {
            reset();
            if (search_from(start)) {
                result.status = SearchStatus::Found;
                result.path = path_;
                result.nodes = nodes_;
                return result;
            }
            if (out_of_budget_) {
                result.status = SearchStatus::BudgetExceeded;
                result.nodes = nodes_;
                return result;
            }
        }
        result.status = SearchStatus::Exhausted;
        result.nodes = nodes_;
        return result;
    }

private:
    struct Frame {
        std::vector<Vertex> candidates;
        std::size_t next = 0;
    };

    void reset()
    {
        visited_.assign(n_, false);
        free_degree_.resize(n_);
        for (Vertex v = 0; v < n_; ++v) {
            free_degree_[v] = adjacency_[v].size();
        }
        path_.clear();
    }

    void visit(Vertex v)
    {
        visited_[v] = true;
        path_.push_back(v);
        for (Vertex u : adjacency_[v]) {
            --free_degree_[u];
        }
    }

    void unvisit()
    {
        Vertex v = path_.back();
        path_.pop_back();
        visited_[v] = false;
        for (Vertex u : adjacency_[v]) {
            ++free_degree_[u];
        }
    }

    // Every unvisited vertex must stay reachable, and at most one of them
    // can be a dead end (the final vertex of the path).
    bool feasible(Vertex current) const
    {
        const std::size_t remaining = n_ - path_.size();
        if (remaining == 0) {
            return true;
        }
        std::size_t dead_ends = 0;
        for (Vertex w = 0; w < n_; ++w) {
            if (visited_[w]) {
                continue;
            }
            const std::size_t avail = free_degree_[w] + (graph_.adjacent(w, current) ? 1 : 0);
            if (avail == 0) {
                return false;
            }
            if (avail == 1 && remaining > 1 && ++dead_ends > 1) {
                return false;
            }
        }
        return true;
    }

    std::vector<Vertex> candidates(Vertex current) const
    {
        std::vector<Vertex> out;
        for (Vertex u : adjacency_[current]) {
            if (!visited_[u]) {
                out.push_back(u);
            }
        }
        std::stable_sort(out.begin(), out.end(), [&](Vertex a, Vertex b) {
            return free_degree_[a] < free_degree_[b];
        });
        return out;
    }

    bool search_from(Vertex start)
    {
        if (++nodes_ > budget_) {
            out_of_budget_ = true;
            return false;
        }
        visit(start);
        if (path_.size() == n_) {
            return true;
        }
        std::vector<Frame> stack;
        if (feasible(start)) {
            stack.push_back({candidates(start), 0});
        }
        while (!stack.empty()) {
            Frame& top = stack.back();
            if (top.next == top.candidates.size()) {
                stack.pop_back();
                unvisit();
                continue;
            }
            const Vertex v = top.candidates[top.next++];
            if (++nodes_ > budget_) {
                out_of_budget_ = true;
                return false;
            }
            visit(v);
            if (path_.size() == n_) {
                return true;
            }
            if (feasible(v)) {
                stack.push_back({candidates(v), 0});
            } else {
                unvisit();
            }
        }
        return false;
    }

    const Graph& graph_;
    std::size_t n_;
    std::uint64_t budget_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<bool> visited_;
    std::vector<std::size_t> free_degree_;
    std::vector<Vertex> path_;
    std::uint64_t nodes_ = 0;
    bool out_of_budget_ = false;
};

} // namespace

SearchResult backtracking_hamiltonian(const Graph& graph, std::uint64_t node_budget)
{
    SearchResult result = HamiltonianSearch(graph, node_budget).run();
    if (result.status == SearchStatus::Found) {
        std::vector<bool> seen(graph.vertex_count(), false);
        for (std::size_t i = 0; i < result.path.size(); ++i) {
            const Vertex v = result.path[i];
            if (seen[v] || (i > 0 && !graph.adjacent(result.path[i - 1], v))) {
                throw std::logic_error("backtracking_hamiltonian: produced an invalid path");
            }
            seen[v] = true;
        }
    }
    return result;
}

SearchResult backtracking_hamiltonian(const PuncturedComplement& pc, std::uint64_t node_budget)
{
    SearchResult result = backtracking_hamiltonian(pc.graph, node_budget);
    for (Vertex& v : result.path) {
        v = pc.elements[v];
    }
    return result;
}

} // namespace powerlambda
