#pragma once

#include <stdexcept>
#include <string>

namespace rrfilt {

// Bad input or violated precondition. The CLI reports these with exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class EmptyInput : public ValidationError {
public:
    explicit EmptyInput(const std::string& what = "empty input") : ValidationError(what) {}
};

class GcdNotOne : public ValidationError {
public:
    explicit GcdNotOne(const std::string& what = "generators must have gcd 1") : ValidationError(what) {}
};

class NotInSemigroup : public ValidationError {
public:
    explicit NotInSemigroup(const std::string& what = "element not in semigroup") : ValidationError(what) {}
};

class AmbientMismatch : public ValidationError {
public:
    explicit AmbientMismatch(const std::string& what = "operands have different ambient semigroups") : ValidationError(what) {}
};

class NotContained : public ValidationError {
public:
    explicit NotContained(const std::string& what = "second ideal is not contained in the first") : ValidationError(what) {}
};

// 64-bit overflow contract: inputs whose derived windows could overflow or
// exhaust memory are rejected up front.
class InputTooLarge : public ValidationError {
public:
    explicit InputTooLarge(const std::string& what = "input exceeds the documented size contract") : ValidationError(what) {}
};

// Internal guards. Unreachable for valid inputs; kept as hard stops.
// The CLI reports these with exit code 3.
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

class SafetyCapExceeded : public GuardError {
public:
    explicit SafetyCapExceeded(const std::string& what = "iteration safety cap exceeded") : GuardError(what) {}
};

class BoundTooSmall : public GuardError {
public:
    explicit BoundTooSmall(const std::string& what = "truncation bound too small") : GuardError(what) {}
};

class NoStabilization : public GuardError {
public:
    explicit NoStabilization(const std::string& what = "chain failed to stabilize within the cap") : GuardError(what) {}
};

} // namespace rrfilt
