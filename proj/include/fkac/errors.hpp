#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fkac {

/// A time stepper produced non-finite values; carries the offending step.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(std::size_t step, double max_abs, const std::string& what)
        : std::runtime_error(what), step_(step), max_abs_(max_abs) {}
    std::size_t step() const noexcept { return step_; }
    double max_abs() const noexcept { return max_abs_; }

private:
    std::size_t step_;
    double max_abs_;
};

/// Requested computation exceeds the configured memory budget.
class ResourceError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Box half-width fails the heavy-tail mass rule for the requested kernel.
class TruncationError : public std::domain_error {
    using std::domain_error::domain_error;
};

/// Gamma evaluated at a non-positive integer.
class PoleError : public std::domain_error {
    using std::domain_error::domain_error;
};

/// Kac weight exp(-S) overflowed along one path (V strongly negative there).
class WeightOverflowError : public std::runtime_error {
public:
    WeightOverflowError(std::size_t path_index, const std::string& what)
        : std::runtime_error(what), path_(path_index) {}
    std::size_t path_index() const noexcept { return path_; }

private:
    std::size_t path_;
};

} // namespace fkac
