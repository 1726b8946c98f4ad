#pragma once

#include <cstdint>
#include <vector>

namespace powerlambda {

/// Canonical prime factorization n = p_1^a_1 ... p_r^a_r with p_1 < ... < p_r.
struct PrimeBasis {
    std::vector<std::uint64_t> primes;
    std::vector<int> exponents;
    std::uint64_t n = 1;

    std::size_t rank() const { return primes.size(); }
    friend bool operator==(const PrimeBasis&, const PrimeBasis&) = default;
};

/// Exponent vector of a divisor of n over a PrimeBasis. Entries may be zero.
struct OrderVector {
    std::vector<int> exponents;

    friend bool operator==(const OrderVector&, const OrderVector&) = default;
};

bool is_prime(std::uint64_t n);

/// Trial-division factorization; throws DomainError for n < 2.
PrimeBasis factorize(std::uint64_t n);

/// Exponent vector of d over `basis`. Requires d >= 2 and d | basis.n.
OrderVector partial_vector(std::uint64_t d, const PrimeBasis& basis);

/// Sum of exponents.
int length(const OrderVector& v);

/// Componentwise <=; for exponent vectors of divisors this is divisibility.
bool leq(const OrderVector& lhs, const OrderVector& rhs);

/// Inverse of partial_vector: p_1^b_1 ... p_r^b_r.
std::uint64_t product(const OrderVector& v, const PrimeBasis& basis);

std::uint64_t euler_phi(std::uint64_t d);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

} // namespace powerlambda
