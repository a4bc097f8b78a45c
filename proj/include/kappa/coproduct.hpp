#pragma once

#include "kappa/deformation.hpp"
#include "kappa/metric.hpp"
#include "kappa/momentum.hpp"

namespace kappa {

/// Deformed composition of momenta:
///   (p (+) q)_0 = p_0 + q_0,
///   (p (+) q)_k = p_k e^{-q_0/kappa} + q_k.
/// Associative and noncommutative; reduces to + as kappa -> infinity.
Momentum deformed_add(const Momentum& p, const Momentum& q, double kappa);

/// Two-sided inverse for the composition law: S(p) (+) p = p (+) S(p) = 0
/// with S(p)_0 = -p_0, S(p)_k = -p_k e^{p_0/kappa}. Derived directly from
/// the composition law (it is the unique two-sided inverse), not quoted from
/// elsewhere. Throws RangeError once p_0/kappa > 700, where exp() overflows.
Momentum antipode(const Momentum& p, double kappa);

/// Infinity norm of (p (+) q) (+) r  -  p (+) (q (+) r).
double coassociativity_gap(const Momentum& p, const Momentum& q, const Momentum& r, double kappa);

/// Infinity norm of p (+) q  -  q (+) p. Nonzero in general; the suites pin
/// it at a known probe instead of driving it to zero.
double cocommutativity_gap(const Momentum& p, const Momentum& q, double kappa);

/// Infinity norm of Phi(p + q) - Phi(p) (+) Phi(q): the deformation map does
/// not turn classical addition into the deformed composition, and this gap
/// measures by how much at a given pair.
double coproduct_nonintertwining_gap(const Momentum& p, const Momentum& q,
                                     const DeformationParams& params, const Metric& g);

}  // namespace kappa
