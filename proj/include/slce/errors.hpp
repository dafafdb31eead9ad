#pragma once

#include <stdexcept>
#include <string>

namespace slce {

struct DivisionByZeroPoly : std::invalid_argument {
    DivisionByZeroPoly() : std::invalid_argument("division by the zero polynomial") {}
};

struct BothZero : std::invalid_argument {
    BothZero() : std::invalid_argument("gcd of two zero polynomials") {}
};

struct InvalidArgs : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotPrime : std::invalid_argument {
    explicit NotPrime(long long p) : std::invalid_argument("not a prime: " + std::to_string(p)) {}
};

struct EvenPrime : std::invalid_argument {
    EvenPrime() : std::invalid_argument("characteristic 2 is not supported; p must be odd") {}
};

struct BoundExceeded : std::invalid_argument {
    explicit BoundExceeded(const std::string& what) : std::invalid_argument(what) {}
};

struct ZeroInverse : std::invalid_argument {
    ZeroInverse() : std::invalid_argument("inverse of the zero element") {}
};

struct IndexOutOfRange : std::invalid_argument {
    explicit IndexOutOfRange(const std::string& what) : std::invalid_argument(what) {}
};

struct NotPrimitive : std::invalid_argument {
    explicit NotPrimitive(const std::string& what) : std::invalid_argument(what) {}
};

struct ZeroSequence : std::invalid_argument {
    ZeroSequence() : std::invalid_argument("sequence polynomial is zero") {}
};

struct NotADivisor : std::invalid_argument {
    explicit NotADivisor(const std::string& what) : std::invalid_argument(what) {}
};

struct NotPrimePower : std::invalid_argument {
    explicit NotPrimePower(long long q)
        : std::invalid_argument("not an odd prime power: " + std::to_string(q)) {}
};

struct NotApplicable : std::invalid_argument {
    explicit NotApplicable(const std::string& what) : std::invalid_argument(what) {}
};

struct NotFound : std::runtime_error {
    explicit NotFound(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionViolated : std::invalid_argument {
    explicit PreconditionViolated(const std::string& what) : std::invalid_argument(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace slce
