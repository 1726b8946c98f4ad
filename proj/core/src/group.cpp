#include "powerlambda/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "powerlambda/errors.hpp"

namespace powerlambda {

namespace {

std::uint64_t hash_perm(std::span<const std::uint32_t> perm)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint32_t x : perm) {
        h ^= x;
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint64_t perm_order(std::span<const std::uint32_t> perm)
{
    std::vector<bool> seen(perm.size(), false);
    std::uint64_t result = 1;
    for (std::size_t start = 0; start < perm.size(); ++start) {
        if (seen[start]) {
            continue;
        }
        std::uint64_t len = 0;
        for (std::size_t x = start; !seen[x]; x = perm[x]) {
            seen[x] = true;
            ++len;
        }
        result = std::lcm(result, len);
    }
    return result;
}

void validate_generators(std::span<const Permutation> generators)
{
    if (generators.empty()) {
        return;
    }
    const std::size_t degree = generators.front().size();
    for (std::size_t k = 0; k < generators.size(); ++k) {
        const Permutation& g = generators[k];
        if (g.size() != degree) {
            throw DomainError("close_generators: generator " + std::to_string(k)
                              + " has degree " + std::to_string(g.size()) + ", expected "
                              + std::to_string(degree));
        }
        std::vector<bool> hit(degree, false);
        for (std::uint32_t x : g) {
            if (x >= degree || hit[x]) {
                throw DomainError("close_generators: generator " + std::to_string(k)
                                  + " is not a bijection");
            }
            hit[x] = true;
        }
    }
}

} // namespace

FiniteGroup close_generators(std::span<const Permutation> generators, std::size_t cap)
{
    validate_generators(generators);

    FiniteGroup group;
    group.generators_.assign(generators.begin(), generators.end());
    const std::size_t degree = generators.empty() ? 0 : generators.front().size();
    const std::size_t ngens = generators.size();
    group.degree_ = degree;

    auto add = [&](std::span<const std::uint32_t> perm, ElementId parent, std::uint32_t gen) {
        const auto id = static_cast<ElementId>(group.order_);
        if (group.order_ >= cap) {
            throw SizeError("close_generators: closure exceeds cap of " + std::to_string(cap)
                            + " elements");
        }
        group.perms_.insert(group.perms_.end(), perm.begin(), perm.end());
        group.index_.emplace(hash_perm(perm), id);
        group.parent_.push_back(parent);
        group.parent_gen_.push_back(gen);
        ++group.order_;
        return id;
    };

    Permutation identity(degree);
    std::iota(identity.begin(), identity.end(), 0U);
    add(identity, 0, 0);

    Permutation product(degree);
    for (std::size_t current = 0; current < group.order_; ++current) {
        for (std::size_t k = 0; k < ngens; ++k) {
            const std::uint32_t* base = group.perms_.data() + current * degree;
            for (std::size_t x = 0; x < degree; ++x) {
                product[x] = generators[k][base[x]];
            }
            std::optional<ElementId> hit = group.find(product);
            ElementId id = hit ? *hit
                               : add(product, static_cast<ElementId>(current),
                                     static_cast<std::uint32_t>(k));
            group.right_gen_.push_back(id);
        }
    }

    group.orders_.resize(group.order_);
    group.names_.resize(group.order_);
    for (std::size_t g = 0; g < group.order_; ++g) {
        auto perm = group.permutation(static_cast<ElementId>(g));
        group.orders_[g] = perm_order(perm);
        group.names_[g] = cycle_notation(perm);
    }

    if (group.order_ <= FiniteGroup::kTableThreshold) {
        group.build_table();
    }

    group.inverses_.resize(group.order_);
    Permutation inv(degree);
    for (std::size_t g = 0; g < group.order_; ++g) {
        auto perm = group.permutation(static_cast<ElementId>(g));
        for (std::size_t x = 0; x < degree; ++x) {
            inv[perm[x]] = static_cast<std::uint32_t>(x);
        }
        group.inverses_[g] = *group.find(inv);
    }
    return group;
}

void FiniteGroup::build_table()
{
    // a * b = (a * parent(b)) * gen(b); BFS order guarantees parent(b) < b.
    const std::size_t ngens = generators_.size();
    table_.assign(order_ * order_, 0);
    for (std::size_t a = 0; a < order_; ++a) {
        ElementId* row = table_.data() + a * order_;
        row[0] = static_cast<ElementId>(a);
        for (std::size_t b = 1; b < order_; ++b) {
            row[b] = right_gen_[row[parent_[b]] * ngens + parent_gen_[b]];
        }
    }
}

ElementId FiniteGroup::lookup_product(ElementId a, ElementId b) const
{
    auto pa = permutation(a);
    auto pb = permutation(b);
    Permutation product(degree_);
    for (std::size_t x = 0; x < degree_; ++x) {
        product[x] = pb[pa[x]];
    }
    return *find(product);
}

ElementId FiniteGroup::multiply(ElementId a, ElementId b) const
{
    if (!table_.empty()) {
        return table_[static_cast<std::size_t>(a) * order_ + b];
    }
    return lookup_product(a, b);
}

ElementId FiniteGroup::power(ElementId g, std::uint64_t m) const
{
    m %= orders_[g];
    ElementId result = identity();
    ElementId base = g;
    while (m > 0) {
        if (m & 1U) {
            result = multiply(result, base);
        }
        base = multiply(base, base);
        m >>= 1U;
    }
    return result;
}

void FiniteGroup::set_names(std::vector<std::string> names)
{
    if (names.size() != order_) {
        throw DomainError("set_names: expected " + std::to_string(order_) + " names");
    }
    names_ = std::move(names);
}

std::span<const std::uint32_t> FiniteGroup::permutation(ElementId g) const
{
    return {perms_.data() + static_cast<std::size_t>(g) * degree_, degree_};
}

std::optional<ElementId> FiniteGroup::find(std::span<const std::uint32_t> perm) const
{
    if (perm.size() != degree_) {
        return std::nullopt;
    }
    auto [lo, hi] = index_.equal_range(hash_perm(perm));
    for (auto it = lo; it != hi; ++it) {
        auto candidate = permutation(it->second);
        if (std::equal(candidate.begin(), candidate.end(), perm.begin())) {
            return it->second;
        }
    }
    return std::nullopt;
}

bool FiniteGroup::is_cyclic() const
{
    for (std::uint64_t d : orders_) {
        if (d == order_) {
            return true;
        }
    }
    return false;
}

std::vector<ElementId> cyclic_subgroup(const FiniteGroup& group, ElementId g)
{
    std::vector<ElementId> powers;
    powers.reserve(group.element_order(g));
    ElementId x = FiniteGroup::identity();
    do {
        powers.push_back(x);
        x = group.multiply(x, g);
    } while (x != FiniteGroup::identity());
    return powers;
}

std::string cycle_notation(std::span<const std::uint32_t> perm)
{
    std::string out;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t start = 0; start < perm.size(); ++start) {
        if (seen[start] || perm[start] == start) {
            continue;
        }
        out += '(';
        for (std::size_t x = start; !seen[x]; x = perm[x]) {
            seen[x] = true;
            if (x != start) {
                out += ' ';
            }
            out += std::to_string(x);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

} // namespace powerlambda
