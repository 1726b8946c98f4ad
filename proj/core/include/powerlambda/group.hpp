#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace powerlambda {

/// Index of an element in a FiniteGroup; 0 is always the identity.
using ElementId = std::uint32_t;

/// Permutation of {0, ..., m-1} stored as its image list.
using Permutation = std::vector<std::uint32_t>;

/// A finite group realized as a permutation group.
///
/// Elements are numbered in breadth-first closure order over the generators:
/// the identity first, then words of length one in generator order, then
/// words of length two, and so on. The product a*b applies a first, then b.
/// For groups of order at most kTableThreshold the full Cayley table is
/// cached; larger groups compose permutations on demand.
class FiniteGroup {
public:
    static constexpr std::size_t kDefaultCap = 10000;
    static constexpr std::size_t kTableThreshold = 2048;

    std::size_t order() const { return order_; }
    std::size_t degree() const { return degree_; }
    static constexpr ElementId identity() { return 0; }

    ElementId multiply(ElementId a, ElementId b) const;
    ElementId inverse(ElementId a) const { return inverses_[a]; }
    ElementId power(ElementId g, std::uint64_t m) const;
    std::uint64_t element_order(ElementId g) const { return orders_[g]; }
    const std::vector<std::uint64_t>& element_orders() const { return orders_; }

    const std::string& name(ElementId g) const { return names_[g]; }
    void set_names(std::vector<std::string> names);

    std::span<const std::uint32_t> permutation(ElementId g) const;
    std::optional<ElementId> find(std::span<const std::uint32_t> perm) const;

    /// Generators as passed to close_generators, in order.
    const std::vector<Permutation>& generators() const { return generators_; }

    /// Element reached from `g` by right multiplication with generator k.
    ElementId right_multiply_generator(ElementId g, std::size_t k) const
    {
        return right_gen_[g * generators_.size() + k];
    }

    bool has_cached_table() const { return !table_.empty(); }

    /// True iff some element has order |G|.
    bool is_cyclic() const;

    friend FiniteGroup close_generators(std::span<const Permutation> generators,
                                        std::size_t cap);

private:
    FiniteGroup() = default;

    ElementId lookup_product(ElementId a, ElementId b) const;
    void build_table();

    std::size_t order_ = 0;
    std::size_t degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<std::uint32_t> perms_;       // order_ * degree_ images
    std::vector<ElementId> parent_;          // BFS tree: element = parent * generator
    std::vector<std::uint32_t> parent_gen_;
    std::vector<ElementId> right_gen_;       // order_ * |generators|
    std::vector<ElementId> inverses_;
    std::vector<std::uint64_t> orders_;
    std::vector<std::string> names_;
    std::vector<ElementId> table_;           // order_ * order_ when cached
    std::unordered_multimap<std::uint64_t, ElementId> index_;
};

/// Group generated by `generators` (all of equal degree). An empty set yields
/// the trivial group. Throws SizeError once the closure exceeds `cap`
/// elements and DomainError for malformed generators.
FiniteGroup close_generators(std::span<const Permutation> generators,
                             std::size_t cap = FiniteGroup::kDefaultCap);

/// Elements g^0, g^1, ..., g^{|g|-1} in that order.
std::vector<ElementId> cyclic_subgroup(const FiniteGroup& group, ElementId g);

/// Cycle notation, e.g. "(0 1 2)(3 4)"; the identity prints as "()".
std::string cycle_notation(std::span<const std::uint32_t> perm);

} // namespace powerlambda
