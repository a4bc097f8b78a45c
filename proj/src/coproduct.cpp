#include "kappa/coproduct.hpp"

#include <cmath>

#include "kappa/errors.hpp"
#include "kappa/tolerance.hpp"

namespace kappa {

Momentum deformed_add(const Momentum& p, const Momentum& q, double kappa) {
    if (p.dim() != q.dim()) throw DimensionError("deformed_add: dimension mismatch");
    if (!(kappa > 0.0)) throw ConfigError("kappa must be positive");
    const double damp = std::exp(-q[0] / kappa);
    Momentum out = Momentum::zero(p.dim());
    out[0] = p[0] + q[0];
    for (int k = 1; k < p.dim(); ++k) out[k] = p[k] * damp + q[k];
    return out;
}

Momentum antipode(const Momentum& p, double kappa) {
    if (!(kappa > 0.0)) throw ConfigError("kappa must be positive");
    if (p[0] / kappa > 700.0) throw RangeError("antipode argument overflows exp()");
    const double grow = std::exp(p[0] / kappa);
    Momentum out = Momentum::zero(p.dim());
    out[0] = -p[0];
    for (int k = 1; k < p.dim(); ++k) out[k] = -p[k] * grow;
    return out;
}

double coassociativity_gap(const Momentum& p, const Momentum& q, const Momentum& r, double kappa) {
    const Momentum left = deformed_add(deformed_add(p, q, kappa), r, kappa);
    const Momentum right = deformed_add(p, deformed_add(q, r, kappa), kappa);
    return max_abs_gap(left.components(), right.components());
}

double cocommutativity_gap(const Momentum& p, const Momentum& q, double kappa) {
    const Momentum left = deformed_add(p, q, kappa);
    const Momentum right = deformed_add(q, p, kappa);
    return max_abs_gap(left.components(), right.components());
}

double coproduct_nonintertwining_gap(const Momentum& p, const Momentum& q,
                                     const DeformationParams& params, const Metric& g) {
    const Momentum mapped_sum = forward(p + q, params, g);
    const Momentum composed = deformed_add(forward(p, params, g), forward(q, params, g), params.kappa);
    return max_abs_gap(mapped_sum.components(), composed.components());
}

}  // namespace kappa
