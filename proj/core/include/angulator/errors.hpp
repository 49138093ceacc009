#pragma once

#include <stdexcept>
#include <string>

namespace angulator {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid argument values or violated preconditions.
class DomainError : public Error {
public:
    using Error::Error;
};

// The request is well formed but falls into a regime the library does not
// realize (for example mutation at a nonzero base in dimension d >= 2).
class UnsupportedError : public DomainError {
public:
    using DomainError::DomainError;
};

// An explicit model fails a structural hypothesis that the operation needs,
// such as the two perpendicularity conditions defining Z disagreeing.
class HypothesisError : public DomainError {
public:
    using DomainError::DomainError;
};

// The input is too large for the requested algorithm or representation.
class CapacityError : public Error {
public:
    using Error::Error;
};

// Text input that does not denote a diagonal or a diagonal set.
class ParseError : public Error {
public:
    enum class Kind {
        Malformed,     // not lexically a diagonal at all
        WrongArity,    // entry count differs from d+1
        GapViolation,  // entries violate the cyclic gap conditions
        OutOfRange,    // a vertex outside 1..m
    };

    ParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

} // namespace angulator
