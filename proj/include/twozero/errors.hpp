#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace twozero {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrimeError : Error {
    explicit NotPrimeError(std::int64_t p)
        : Error("not a prime: " + std::to_string(p)) {}
};

struct SizeExceededError : Error {
    SizeExceededError(std::uint64_t size, std::uint64_t cap)
        : Error("field size " + std::to_string(size) + " exceeds cap " +
                std::to_string(cap)) {}
};

struct NoPrimitivePolynomialError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    DivisionByZeroError() : Error("division by zero field element") {}
};

/// Parameter tuple violates one of the family constraints.  `which`
/// names the failed constraint, e.g. "e>1" or "ord_n(q)=k".
struct ConstraintViolated : Error {
    std::string which;
    explicit ConstraintViolated(std::string name)
        : Error("constraint violated: " + name), which(std::move(name)) {}
};

struct BudgetExceededError : Error {
    std::uint64_t cost;
    std::uint64_t budget;
    BudgetExceededError(std::uint64_t cost_, std::uint64_t budget_)
        : Error("enumeration cost " + std::to_string(cost_) +
                " exceeds budget " + std::to_string(budget_)),
          cost(cost_), budget(budget_) {}
};

struct NotCoprimeError : Error {
    NotCoprimeError(std::int64_t g, std::int64_t p)
        : Error("gcd(" + std::to_string(g) + "," + std::to_string(p) +
                ") != 1") {}
};

struct NonIntegerCountError : Error {
    using Error::Error;
};

struct NonIntegralThetaError : Error {
    using Error::Error;
};

/// Consistency check inside the library failed; indicates a bug, not
/// bad user input.
struct InternalError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace twozero
