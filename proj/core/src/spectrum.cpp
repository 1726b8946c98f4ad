#include "powerlambda/spectrum.hpp"

#include <algorithm>
#include <string>

#include "powerlambda/errors.hpp"

namespace powerlambda {

const OrderClasses& ClassDecomposition::classes_of(std::uint64_t d) const
{
    auto it = std::lower_bound(spectrum.begin(), spectrum.end(), d);
    if (it == spectrum.end() || *it != d) {
        throw DomainError("no elements of order " + std::to_string(d));
    }
    return by_order[static_cast<std::size_t>(it - spectrum.begin())];
}

std::vector<std::uint64_t> order_spectrum(const FiniteGroup& group)
{
    if (group.order() < 2) {
        throw DomainError("order_spectrum: trivial group");
    }
    std::vector<std::uint64_t> orders(group.element_orders().begin() + 1,
                                      group.element_orders().end());
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    return orders;
}

std::vector<ElementId> elements_of_order(const FiniteGroup& group, std::uint64_t d)
{
    std::vector<ElementId> out;
    for (std::size_t g = 0; g < group.order(); ++g) {
        if (group.element_order(static_cast<ElementId>(g)) == d) {
            out.push_back(static_cast<ElementId>(g));
        }
    }
    return out;
}

std::vector<ElementId> cyclic_class_of(const FiniteGroup& group, ElementId g)
{
    const std::uint64_t d = group.element_order(g);
    std::vector<ElementId> powers = cyclic_subgroup(group, g);
    std::vector<ElementId> members;
    for (std::uint64_t m = 1; m <= d; ++m) {
        if (gcd(m, d) == 1) {
            members.push_back(powers[m % d]);
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

ClassDecomposition cyclic_classes(const FiniteGroup& group)
{
    ClassDecomposition dec;
    dec.spectrum = order_spectrum(group);
    dec.basis = factorize(group.order());
    for (std::uint64_t d : dec.spectrum) {
        OrderClasses oc;
        oc.order = d;
        oc.length = length(partial_vector(d, dec.basis));
        dec.by_order.push_back(std::move(oc));
        dec.strata[dec.by_order.back().length].push_back(d);
    }

    // Scanning in index order makes each new class's first member its minimum,
    // so classes are appended already sorted by minimal member.
    std::vector<bool> assigned(group.order(), false);
    for (std::size_t g = 1; g < group.order(); ++g) {
        if (assigned[g]) {
            continue;
        }
        CyclicClass cls;
        cls.order = group.element_order(static_cast<ElementId>(g));
        cls.members = cyclic_class_of(group, static_cast<ElementId>(g));
        for (ElementId x : cls.members) {
            assigned[x] = true;
        }
        auto it = std::lower_bound(dec.spectrum.begin(), dec.spectrum.end(), cls.order);
        dec.by_order[static_cast<std::size_t>(it - dec.spectrum.begin())].classes.push_back(
            std::move(cls));
    }
    return dec;
}

std::size_t class_count(const ClassDecomposition& dec, std::uint64_t d)
{
    return dec.classes_of(d).classes.size();
}

std::vector<ElementId> stratum(const ClassDecomposition& dec, const FiniteGroup& group, int k)
{
    std::vector<ElementId> out;
    auto it = dec.strata.find(k);
    if (it == dec.strata.end()) {
        return out;
    }
    for (std::size_t g = 1; g < group.order(); ++g) {
        const std::uint64_t d = group.element_order(static_cast<ElementId>(g));
        if (std::binary_search(it->second.begin(), it->second.end(), d)) {
            out.push_back(static_cast<ElementId>(g));
        }
    }
    return out;
}

} // namespace powerlambda
