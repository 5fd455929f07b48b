#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weissler {

// Bad arguments: malformed weight specs, out-of-range parameters, sequences
// that are too short or violate a type invariant.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation that could not reach the requested accuracy.  Carries the
// best estimate obtained and its error bound.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double estimate, double bound)
        : std::runtime_error(what), estimate_(estimate), bound_(bound) {}

    double estimate() const noexcept { return estimate_; }
    double bound() const noexcept { return bound_; }

private:
    double estimate_;
    double bound_;
};

// A series needed more moments than the sequence provides.
class InsufficientMoments : public NumericalError {
public:
    InsufficientMoments(const std::string& what, std::size_t required_index,
                        double estimate = 0.0, double bound = 0.0)
        : NumericalError(what, estimate, bound), required_index_(required_index) {}

    std::size_t required_index() const noexcept { return required_index_; }

private:
    std::size_t required_index_;
};

}  // namespace weissler
