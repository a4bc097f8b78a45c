#include "kappa/tolerance.hpp"

#include "kappa/errors.hpp"

namespace kappa {

double max_scaled_gap(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw DimensionError("max_scaled_gap: length mismatch");
    double worst = 0.0;
    for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, scaled_gap(a[i], b[i]));
    return worst;
}

double max_abs_gap(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw DimensionError("max_abs_gap: length mismatch");
    double worst = 0.0;
    for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace kappa
