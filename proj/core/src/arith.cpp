#include "powerlambda/arith.hpp"

#include <numeric>
#include <string>

#include "powerlambda/errors.hpp"

namespace powerlambda {

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            return false;
        }
    }
    return true;
}

PrimeBasis factorize(std::uint64_t n)
{
    if (n < 2) {
        throw DomainError("factorize: n must be at least 2, got " + std::to_string(n));
    }
    PrimeBasis basis;
    basis.n = n;
    std::uint64_t rest = n;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) {
            continue;
        }
        int alpha = 0;
        while (rest % p == 0) {
            rest /= p;
            ++alpha;
        }
        basis.primes.push_back(p);
        basis.exponents.push_back(alpha);
    }
    if (rest > 1) {
        basis.primes.push_back(rest);
        basis.exponents.push_back(1);
    }
    return basis;
}

OrderVector partial_vector(std::uint64_t d, const PrimeBasis& basis)
{
    if (d < 2) {
        throw DomainError("partial_vector: d must be at least 2, got " + std::to_string(d));
    }
    if (basis.n % d != 0) {
        throw DomainError("partial_vector: " + std::to_string(d) + " does not divide "
                          + std::to_string(basis.n));
    }
    OrderVector v;
    v.exponents.reserve(basis.rank());
    for (std::uint64_t p : basis.primes) {
        int beta = 0;
        while (d % p == 0) {
            d /= p;
            ++beta;
        }
        v.exponents.push_back(beta);
    }
    return v;
}

int length(const OrderVector& v)
{
    return std::accumulate(v.exponents.begin(), v.exponents.end(), 0);
}

bool leq(const OrderVector& lhs, const OrderVector& rhs)
{
    if (lhs.exponents.size() != rhs.exponents.size()) {
        throw DomainError("leq: order vectors over different bases");
    }
    for (std::size_t j = 0; j < lhs.exponents.size(); ++j) {
        if (lhs.exponents[j] > rhs.exponents[j]) {
            return false;
        }
    }
    return true;
}

std::uint64_t product(const OrderVector& v, const PrimeBasis& basis)
{
    if (v.exponents.size() != basis.rank()) {
        throw DomainError("product: order vector does not match basis rank");
    }
    std::uint64_t d = 1;
    for (std::size_t j = 0; j < basis.rank(); ++j) {
        for (int i = 0; i < v.exponents[j]; ++i) {
            d *= basis.primes[j];
        }
    }
    return d;
}

std::uint64_t euler_phi(std::uint64_t d)
{
    if (d == 0) {
        throw DomainError("euler_phi: argument must be positive");
    }
    std::uint64_t result = d;
    std::uint64_t rest = d;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            while (rest % p == 0) {
                rest /= p;
            }
            result -= result / p;
        }
    }
    if (rest > 1) {
        result -= result / rest;
    }
    return result;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b)
{
    return std::gcd(a, b);
}

} // namespace powerlambda
