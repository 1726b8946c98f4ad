#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "powerlambda/group.hpp"

namespace powerlambda {

enum class Family {
    Cyclic,            // C<n>
    Dihedral,          // D<n>, order 2n
    Quaternion,        // Q<n>, generalized quaternion of order 4n
    ElementaryAbelian, // E<p>_<k>
    Symmetric,         // S<n>
    Alternating,       // A<n>
    PSL2,              // PSL2_<p>
    Product,           // X(<spec>,<spec>)
};

/// A catalog entry. `n` is the family parameter (p for PSL2 and E),
/// `k` the rank for E, and `factors` the two operands of a Product.
struct GroupSpec {
    Family family = Family::Cyclic;
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::vector<GroupSpec> factors;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Parses the group-spec grammar; throws SpecError on unknown tags,
/// malformed input and out-of-range parameters.
GroupSpec parse_group_spec(std::string_view text);

/// Canonical spelling; parse_group_spec(to_string(s)) == s.
std::string to_string(const GroupSpec& spec);

/// Order promised by the family formula.
std::uint64_t advertised_order(const GroupSpec& spec);

/// Catalog metadata: alternating n >= 5 and PSL(2,p) p >= 5. Never computed.
bool is_nonabelian_simple(const GroupSpec& spec);

/// True for C<p> with p prime.
bool is_prime_cyclic(const GroupSpec& spec);

/// Builds the group with display names: word notation for cyclic, dihedral,
/// quaternion and elementary abelian groups, cycle notation for symmetric,
/// alternating and PSL2, pairs for products.
FiniteGroup build_group(const GroupSpec& spec);

FiniteGroup build_group(std::string_view text);

} // namespace powerlambda
