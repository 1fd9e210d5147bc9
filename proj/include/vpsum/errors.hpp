#pragma once

#include <stdexcept>
#include <string>

namespace vpsum {

/// A parameter lies outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerical configuration (grid size, quadrature resolution) is unusable.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A harmonic index or order exceeds what the available data supports.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// The admissibility condition n - p >= 6/(1 - q) does not hold.
class PreconditionError : public std::invalid_argument {
public:
    PreconditionError(const std::string& what, int required_gap)
        : std::invalid_argument(what), required_gap_(required_gap) {}

    /// Smallest n - p that satisfies the condition.
    [[nodiscard]] int required_gap() const noexcept { return required_gap_; }

private:
    int required_gap_;
};

/// An iterative scheme did not reach the requested tolerance.
class AccuracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation is defined only for convex-upwards moduli.
class UnsupportedError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed user input: modulus descriptors, sweep files.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace vpsum
