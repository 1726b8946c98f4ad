#pragma once

#include <stdexcept>
#include <string>

namespace powerlambda {

// Argument outside the domain of a mathematical operation (d does not divide n,
// u == v in an adjacency query, missing label, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed or out-of-range group specification.
class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Generator closure grew past the configured element cap.
class SizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

// A hypothesis of the constructive Hamiltonian algorithm does not hold for
// the input group (for instance an order d with a single cyclic class).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A statement that is a theorem for non-cyclic simple groups failed on the
// given input: either the input is not such a group or there is a bug.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace powerlambda
