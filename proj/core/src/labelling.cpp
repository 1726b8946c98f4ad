#include "powerlambda/labelling.hpp"

#include <algorithm>
#include <bitset>
#include <numeric>

#include <json.hpp>

#include "powerlambda/errors.hpp"
#include "powerlambda/hampath.hpp"
#include "powerlambda/spectrum.hpp"

namespace powerlambda {

std::int64_t L21Labelling::span() const
{
    if (labels.empty()) {
        return 0;
    }
    auto [lo, hi] = std::minmax_element(labels.begin(), labels.end());
    return *hi - *lo;
}

Verdict verify_l21(const Graph& graph, const L21Labelling& lab)
{
    const std::size_t n = graph.vertex_count();
    if (lab.labels.size() != n) {
        throw DomainError("verify_l21: " + std::to_string(lab.labels.size())
                          + " labels for " + std::to_string(n) + " vertices");
    }
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const std::int64_t gap = std::abs(lab.labels[u] - lab.labels[v]);
            if (graph.adjacent(u, v)) {
                if (gap < 2) {
                    return {false, Violation{u, v, Condition::Adjacent}};
                }
            } else if (gap < 1 && graph.share_neighbor(u, v)) {
                return {false, Violation{u, v, Condition::DistanceTwo}};
            }
        }
    }
    return {};
}

Verdict verify_l21(const PowerGraph& pg, const L21Labelling& lab)
{
    return verify_l21(pg.graph, lab);
}

L21Labelling labelling_from_path(const PowerGraph& pg, std::span<const ElementId> path)
{
    if (auto problem = validate_hamiltonian(pg, path)) {
        throw DomainError("labelling_from_path: " + *problem);
    }
    L21Labelling lab;
    lab.labels.assign(pg.graph.vertex_count(), 0);
    for (std::size_t i = 0; i < path.size(); ++i) {
        lab.labels[path[i]] = static_cast<std::int64_t>(i) + 2;
    }
    return lab;
}

namespace {

using Domain = std::bitset<kMaxSearchSpan + 1>;

class SpanSearch {
public:
    explicit SpanSearch(const Graph& graph) : graph_(graph), n_(graph.vertex_count())
    {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0U);
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
            return graph.degree(a) > graph.degree(b);
        });
        two_away_ = Graph(n_);
        for (Vertex u = 0; u < n_; ++u) {
            for (Vertex v = u + 1; v < n_; ++v) {
                if (at_distance_two(graph, u, v)) {
                    two_away_.add_edge(u, v);
                }
            }
        }
    }

    std::optional<L21Labelling> try_span(std::int64_t s)
    {
        Domain full;
        for (std::int64_t l = 0; l <= s; ++l) {
            full.set(static_cast<std::size_t>(l));
        }
        std::vector<Domain> domains(n_, full);
        if (n_ > 0) {
            // Reflection l -> s - l preserves feasibility.
            Domain half;
            for (std::int64_t l = 0; l <= s / 2; ++l) {
                half.set(static_cast<std::size_t>(l));
            }
            domains[order_[0]] = half;
        }
        labels_.assign(n_, 0);
        if (assign(0, domains)) {
            return L21Labelling{labels_};
        }
        return std::nullopt;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool assign(std::size_t depth, const std::vector<Domain>& domains)
    {
        if (depth == n_) {
            return true;
        }
        const Vertex v = order_[depth];
        const Domain& dom = domains[v];
        for (std::size_t label = dom._Find_first(); label < dom.size();
             label = dom._Find_next(label)) {
            ++nodes_;
            std::vector<Domain> next = domains;
            bool wiped = false;
            for (std::size_t later = depth + 1; later < n_ && !wiped; ++later) {
                const Vertex u = order_[later];
                if (graph_.adjacent(v, u)) {
                    next[u].reset(label);
                    if (label > 0) {
                        next[u].reset(label - 1);
                    }
                    if (label + 1 < next[u].size()) {
                        next[u].reset(label + 1);
                    }
                } else if (two_away_.adjacent(v, u)) {
                    next[u].reset(label);
                }
                wiped = next[u].none();
            }
            if (wiped) {
                continue;
            }
            labels_[v] = static_cast<std::int64_t>(label);
            if (assign(depth + 1, next)) {
                return true;
            }
        }
        return false;
    }

    const Graph& graph_;
    std::size_t n_;
    std::vector<Vertex> order_;
    Graph two_away_;
    std::vector<std::int64_t> labels_;
    std::uint64_t nodes_ = 0;
};

} // namespace

ExactResult exact_lambda(const Graph& graph, std::int64_t span_cap)
{
    const std::size_t max_deg = graph.max_degree();
    const std::int64_t seed = max_deg == 0 ? 0 : static_cast<std::int64_t>(max_deg) + 1;
    const std::int64_t cap = std::min(span_cap, kMaxSearchSpan);

    ExactResult result;
    result.lambda = seed;
    SpanSearch search(graph);
    for (std::int64_t s = seed; s <= cap; ++s) {
        if (auto witness = search.try_span(s)) {
            result.status = ExactStatus::Exact;
            result.lambda = s;
            result.witness = std::move(witness);
            result.nodes = search.nodes();
            return result;
        }
        result.lambda = s + 1;
    }
    result.status = ExactStatus::CapExceeded;
    result.nodes = search.nodes();
    return result;
}

const char* to_string(LambdaMethod method)
{
    switch (method) {
    case LambdaMethod::ClosedForm: return "closed-form";
    case LambdaMethod::Constructive: return "constructive";
    case LambdaMethod::ExactSearch: return "exact-search";
    case LambdaMethod::BoundsOnly: return "bounds-only";
    }
    return "unknown";
}

LambdaReport lambda_of_group(const FiniteGroup& group, const GroupSpec& spec,
                             const LambdaOptions& options)
{
    LambdaReport report;
    report.group = to_string(spec);
    report.order = group.order();
    const auto n = static_cast<std::int64_t>(group.order());
    report.lower_bound = n;

    const PowerGraph pg = build_power_graph(group);

    auto finish_with_witness = [&](LambdaMethod method, L21Labelling lab) {
        report.method = method;
        report.verified = verify_l21(pg, lab).valid;
        report.lambda = lab.span();
        report.upper_bound = lab.span();
        report.witness = std::move(lab);
        return report;
    };

    if (!options.force_exact && is_prime_cyclic(spec)) {
        // Every element generates, so the power graph is complete: labels 0, 2, 4, ...
        L21Labelling lab;
        for (std::int64_t i = 0; i < n; ++i) {
            lab.labels.push_back(2 * i);
        }
        report.lower_bound = 2 * (n - 1);
        return finish_with_witness(LambdaMethod::ClosedForm, std::move(lab));
    }

    if (!options.force_exact && group.order() >= 2) {
        const ClassDecomposition dec = cyclic_classes(group);
        if (auto bad = constructive_obstructions(dec); bad.empty()) {
            try {
                ConstructiveResult built = build_constructive_hamiltonian(group, dec, pg);
                return finish_with_witness(LambdaMethod::Constructive,
                                           labelling_from_path(pg, built.path));
            } catch (const TheoremViolation& e) {
                report.notes.push_back(std::string("constructive path failed: ") + e.what());
            }
        } else {
            report.notes.push_back("constructive hypotheses fail: single cyclic class at d = "
                                   + std::to_string(bad.front())
                                   + (bad.size() > 1 ? " (and others)" : ""));
        }
    }

    if (options.force_exact || group.order() <= options.exact_vertex_limit) {
        const std::int64_t cap = options.max_span.value_or(2 * (n - 1));
        ExactResult exact = exact_lambda(pg.graph, cap);
        if (exact.status == ExactStatus::Exact) {
            report.lower_bound = exact.lambda;
            return finish_with_witness(LambdaMethod::ExactSearch, std::move(*exact.witness));
        }
        report.lower_bound = std::max(report.lower_bound, exact.lambda);
        report.notes.push_back("exact search stopped at span cap " + std::to_string(cap));
    }

    report.method = LambdaMethod::BoundsOnly;
    return report;
}

std::optional<std::string> labelling_json(const LambdaReport& report, const FiniteGroup& group)
{
    if (!report.witness) {
        return std::nullopt;
    }
    nlohmann::ordered_json doc;
    doc["group"] = report.group;
    doc["order"] = report.order;
    doc["method"] = to_string(report.method);
    doc["span"] = report.witness->span();
    nlohmann::ordered_json labels = nlohmann::ordered_json::array();
    for (std::size_t g = 0; g < report.witness->labels.size(); ++g) {
        nlohmann::ordered_json entry;
        entry["element"] = group.name(static_cast<ElementId>(g));
        entry["label"] = report.witness->labels[g];
        labels.push_back(std::move(entry));
    }
    doc["labels"] = std::move(labels);
    doc["verified"] = report.verified;
    return doc.dump(2) + "\n";
}

} // namespace powerlambda
