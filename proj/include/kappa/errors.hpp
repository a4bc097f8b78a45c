#pragma once

#include <stdexcept>
#include <string>

namespace kappa {

/// Base class for every error this library raises on purpose. Catching
/// kappa::Error separates "the input was bad / the map is undefined here"
/// from genuine programming faults, which surface as std::logic_error.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// Matrix passed to Metric is singular (|det| below the rejection cutoff).
class NonInvertibleError : public Error {
public:
    using Error::Error;
};

/// Momentum-space dimension is too small, or two objects with different
/// dimensions were combined.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A scalar function left its real domain (log/sqrt of a nonpositive value,
/// division by zero) during jet or plain evaluation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The deformation map is undefined at the requested point. `condition()`
/// names the first violated inequality in a fixed check order.
class MapDomainError : public Error {
public:
    explicit MapDomainError(const std::string& condition)
        : Error("deformation map undefined: " + condition), condition_(condition) {}
    const std::string& condition() const { return condition_; }

private:
    std::string condition_;
};

/// The deformed dilatation (the Weyl sector) only exists when g_{00} = 0.
class WeylNullTimeError : public Error {
public:
    WeylNullTimeError() : Error("Weyl sector requires g00 = 0") {}
};

/// The quadratic constraint fixing the coefficient A has no admissible real
/// root for the given (M^2, C, g00).
class NoRealRootError : public Error {
public:
    using Error::Error;
};

/// Mass-squared recovery found no root in its search range.
class NoSolutionError : public Error {
public:
    using Error::Error;
};

/// An argument grew large enough that exp() would overflow.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Rejection sampling accepted too small a fraction of candidates.
class SamplingError : public Error {
public:
    using Error::Error;
};

/// Bad run configuration (unknown suite, nonpositive kappa, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace kappa
