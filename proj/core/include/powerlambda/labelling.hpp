#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "powerlambda/catalog.hpp"
#include "powerlambda/graph.hpp"
#include "powerlambda/powergraph.hpp"

namespace powerlambda {

/// Integer label per vertex (index = vertex / element index).
struct L21Labelling {
    std::vector<std::int64_t> labels;

    /// max - min; 0 for an empty labelling.
    std::int64_t span() const;
};

enum class Condition {
    Adjacent,    // adjacent labels must differ by at least 2
    DistanceTwo, // labels at distance two must differ by at least 1
};

struct Violation {
    Vertex u;
    Vertex v;
    Condition condition;
};

struct Verdict {
    bool valid = true;
    std::optional<Violation> violation; // first offending pair, by (u, v)
};

/// Checks both L(2,1) conditions on every pair; distance two is tested
/// literally. DomainError when the labelling does not cover every vertex.
Verdict verify_l21(const Graph& graph, const L21Labelling& lab);
Verdict verify_l21(const PowerGraph& pg, const L21Labelling& lab);

/// Identity gets 0 and the i-th path vertex (1-based) gets i + 1, so the
/// span is |G|. DomainError when the path is not a Hamiltonian path of the
/// punctured complement.
L21Labelling labelling_from_path(const PowerGraph& pg, std::span<const ElementId> path);

/// Labels above this are never searched.
inline constexpr std::int64_t kMaxSearchSpan = 255;

enum class ExactStatus { Exact, CapExceeded };

struct ExactResult {
    ExactStatus status = ExactStatus::CapExceeded;
    /// Exact: the minimum span. CapExceeded: a proven lower bound.
    std::int64_t lambda = 0;
    std::optional<L21Labelling> witness;
    std::uint64_t nodes = 0;
};

/// Minimum L(2,1) span by exhaustive search over labels 0..s for
/// s = (max degree + 1), (max degree + 2), ... up to span_cap. Vertices are
/// labelled in degree-descending order with forward checking.
ExactResult exact_lambda(const Graph& graph, std::int64_t span_cap);

enum class LambdaMethod { ClosedForm, Constructive, ExactSearch, BoundsOnly };

const char* to_string(LambdaMethod method);

struct LambdaOptions {
    bool force_exact = false;
    std::optional<std::int64_t> max_span; // default 2(|G| - 1)
    std::size_t exact_vertex_limit = 16;
};

struct LambdaReport {
    std::string group;
    std::size_t order = 0;
    LambdaMethod method = LambdaMethod::BoundsOnly;
    std::optional<std::int64_t> lambda;
    std::int64_t lower_bound = 0;
    std::optional<std::int64_t> upper_bound;
    std::optional<L21Labelling> witness;
    bool verified = false;
    std::vector<std::string> notes;
};

/// Closed form for prime cyclic groups, the constructive Hamiltonian path
/// when its hypotheses hold, exact search for small groups, otherwise the
/// lower bound |G| alone.
LambdaReport lambda_of_group(const FiniteGroup& group, const GroupSpec& spec,
                             const LambdaOptions& options = {});

/// Labelling JSON with fixed key order; witness labels ascending by element.
/// Returns nullopt when the report carries no witness.
std::optional<std::string> labelling_json(const LambdaReport& report, const FiniteGroup& group);

} // namespace powerlambda
