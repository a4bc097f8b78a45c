#pragma once

#include <algorithm>
#include <cmath>
#include <span>

namespace kappa {

/// Gap between two scalars, relative with an absolute floor of one:
///     |a - b| / max(1, |a|, |b|).
/// Every identity check in the library scores itself with this quantity, so
/// "residual < tol" means the same thing for values of order 1e-6 and 1e+6.
inline double scaled_gap(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool within(double a, double b, double tol) { return scaled_gap(a, b) <= tol; }

/// Componentwise scaled gap of two equal-length vectors, reduced with max.
double max_scaled_gap(std::span<const double> a, std::span<const double> b);

/// Plain infinity norm of a - b (no scaling).
double max_abs_gap(std::span<const double> a, std::span<const double> b);

}  // namespace kappa
