#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace kappa {

/// Covariant momentum n-vector. Component 0 is the time-like slot, 1..n-1
/// the spatial slots. The same type carries classical points P and deformed
/// points P~; which role applies is a property of the call site, not the
/// type.
class Momentum {
public:
    Momentum() = default;
    explicit Momentum(std::vector<double> components) : c_(std::move(components)) {}
    Momentum(std::initializer_list<double> components) : c_(components) {}

    static Momentum zero(int dim) { return Momentum(std::vector<double>(static_cast<size_t>(dim), 0.0)); }

    int dim() const { return static_cast<int>(c_.size()); }
    bool empty() const { return c_.empty(); }

    double operator[](int mu) const { return c_[static_cast<size_t>(mu)]; }
    double& operator[](int mu) { return c_[static_cast<size_t>(mu)]; }

    std::span<const double> components() const { return c_; }

    /// "(p0, p1, ...)" with full precision; used in error messages and the
    /// human-readable report.
    std::string str() const;

    friend bool operator==(const Momentum&, const Momentum&) = default;

private:
    std::vector<double> c_;
};

/// Plain componentwise sum (the undeformed composition law).
Momentum operator+(const Momentum& a, const Momentum& b);

}  // namespace kappa
