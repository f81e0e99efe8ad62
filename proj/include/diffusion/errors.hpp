#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace diffusion {

// Base for every error raised by the library. The CLI maps InputError to
// exit code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or structurally invalid input (bad graph, wrong stack count,
// invalid polyomino, schema violations).
class InputError : public Error {
public:
    using Error::Error;
};

class GraphError : public InputError {
public:
    enum class Kind { InvalidSize, SelfLoop, DuplicateEdge, EndpointOutOfRange };

    GraphError(Kind kind, const std::string& what) : InputError(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

class SizeMismatch : public InputError {
public:
    SizeMismatch(std::size_t expected, std::size_t actual);

    std::size_t expected() const noexcept { return expected_; }
    std::size_t actual() const noexcept { return actual_; }

private:
    std::size_t expected_;
    std::size_t actual_;
};

class PolyominoError : public InputError {
public:
    enum class Kind { EmptyStripList, NonPositiveLength, FirstOffsetNonzero, OffsetOutOfRange };

    PolyominoError(Kind kind, std::size_t strip, std::int64_t lower, std::int64_t upper,
                   const std::string& what)
        : InputError(what), kind_(kind), strip_(strip), lower_(lower), upper_(upper) {}

    Kind kind() const noexcept { return kind_; }
    // Zero-based index of the offending strip.
    std::size_t strip() const noexcept { return strip_; }
    // Admissible offset range for OffsetOutOfRange; zero otherwise.
    std::int64_t lower() const noexcept { return lower_; }
    std::int64_t upper() const noexcept { return upper_; }

private:
    Kind kind_;
    std::size_t strip_;
    std::int64_t lower_;
    std::int64_t upper_;
};

// Stack arithmetic left the range of the machine integer type.
class OverflowError : public Error {
public:
    using Error::Error;
};

class NoRepeatWithinBudget : public Error {
public:
    explicit NoRepeatWithinBudget(std::size_t budget);

    std::size_t budget() const noexcept { return budget_; }

private:
    std::size_t budget_;
};

// A detected cycle longer than two steps. Diffusion never does this,
// so seeing it means the engine is broken.
class PeriodNotOneOrTwo : public Error {
public:
    PeriodNotOneOrTwo(std::size_t period, std::size_t preperiod);

    std::size_t period() const noexcept { return period_; }

private:
    std::size_t period_;
};

class NotAPeriodConfiguration : public Error {
public:
    using Error::Error;
};

class NotNormalized : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    CapExceeded(std::size_t n, std::size_t cap);
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

}  // namespace diffusion
