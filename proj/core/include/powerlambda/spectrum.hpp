#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "powerlambda/arith.hpp"
#include "powerlambda/group.hpp"

namespace powerlambda {

/// The generators of one cyclic subgroup of order `order`, ascending by index.
struct CyclicClass {
    std::uint64_t order = 0;
    std::vector<ElementId> members;
};

/// All cyclic classes of one element order, ordered by minimal member.
struct OrderClasses {
    std::uint64_t order = 0;
    int length = 0; // length of the exponent vector of `order`
    std::vector<CyclicClass> classes;
};

/// Partition of G \ {1} into cyclic classes, grouped by element order and by
/// the length of the order's exponent vector.
struct ClassDecomposition {
    PrimeBasis basis;
    std::vector<std::uint64_t> spectrum;      // ascending
    std::vector<OrderClasses> by_order;       // aligned with spectrum
    std::map<int, std::vector<std::uint64_t>> strata; // length -> orders ascending

    const OrderClasses& classes_of(std::uint64_t d) const;
};

/// Sorted distinct orders of non-identity elements. DomainError on |G| = 1.
std::vector<std::uint64_t> order_spectrum(const FiniteGroup& group);

/// Elements of order exactly d, ascending; empty when there are none.
std::vector<ElementId> elements_of_order(const FiniteGroup& group, std::uint64_t d);

/// Generators of <g>, ascending.
std::vector<ElementId> cyclic_class_of(const FiniteGroup& group, ElementId g);

ClassDecomposition cyclic_classes(const FiniteGroup& group);

/// Number of cyclic classes of order d. DomainError when d is not an order.
std::size_t class_count(const ClassDecomposition& dec, std::uint64_t d);

/// Elements whose order has exponent-vector length k, ascending.
std::vector<ElementId> stratum(const ClassDecomposition& dec, const FiniteGroup& group, int k);

} // namespace powerlambda
