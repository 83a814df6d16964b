#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace containlab {

// Base class for every error raised by the library.  The CLI maps these to
// exit code 2; tests catch specific subclasses.
class ContainLabError : public std::runtime_error {
public:
    explicit ContainLabError(const std::string& what) : std::runtime_error(what) {}
};

// Coefficient-field problems: mixing elements of different fields, dividing
// by zero, asking for a root of unity the field does not contain.
class FieldError : public ContainLabError {
public:
    using ContainLabError::ContainLabError;
};

class FieldMismatchError : public FieldError {
public:
    using FieldError::FieldError;
};

class DivisionByZeroError : public FieldError {
public:
    using FieldError::FieldError;
};

class NoSuchRootError : public FieldError {
public:
    using FieldError::FieldError;
};

// Malformed textual input (field descriptors, field elements, polynomials,
// configuration specs).
class ParseError : public ContainLabError {
public:
    using ContainLabError::ContainLabError;
};

// Operands built over different polynomial rings.
class RingMismatchError : public ContainLabError {
public:
    using ContainLabError::ContainLabError;
};

// Exponent or degree left the representable range.
class OverflowError : public ContainLabError {
public:
    using ContainLabError::ContainLabError;
};

// Unknown configuration name or invalid construction parameters.
class ConfigError : public ContainLabError {
public:
    using ContainLabError::ContainLabError;
};

// A Groebner basis computation ran out of its budget.  `reason` tells the
// caller whether the wall-clock deadline or the S-pair cap was exhausted.
class BudgetExceededError : public ContainLabError {
public:
    enum class Reason { Deadline, PairCap };

    BudgetExceededError(Reason reason, const std::string& what)
        : ContainLabError(what), reason_(reason) {}

    Reason reason() const { return reason_; }

private:
    Reason reason_;
};

// Budget for a single Groebner basis run.  Defaults come from the
// environment (CONTAINLAB_TIMEOUT_SECS, CONTAINLAB_MAX_PAIRS) with
// fallbacks of 600 seconds and 200000 S-pair reductions.
struct Budget {
    std::chrono::steady_clock::time_point deadline;
    std::uint64_t max_pairs = 0;

    static Budget defaults();
    static Budget with(double seconds, std::uint64_t max_pairs);
    // Remaining wall-clock seconds; never negative.
    double seconds_left() const;
};

}  // namespace containlab
