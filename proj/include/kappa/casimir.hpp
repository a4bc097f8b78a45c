#pragma once

#include <span>

#include "kappa/deformation.hpp"
#include "kappa/generators.hpp"
#include "kappa/jet.hpp"
#include "kappa/metric.hpp"
#include "kappa/momentum.hpp"

namespace kappa {

/// The deformed mass-squared invariant at a deformed point t:
///   M~^2 = g^{00} (2 kappa sinh(t0/2kappa))^2
///        + 4 kappa g^{0l} t_l e^{t0/2kappa} sinh(t0/2kappa)
///        + g^{rs} t_r t_s e^{t0/kappa}           (l, r, s spatial).
double deformed_mass_squared(const Momentum& deformed, const Metric& g, double kappa);
Jet deformed_mass_squared_jet(std::span<const Jet> deformed, const Metric& g, double kappa);

/// Residuals of the two shell relations tying M~^2 at Phi(p) back to the
/// classical shell data (A, C, M^2):
///   r_ratio:  2A / (C - g00 A)            vs  M~^2 / kappa^2
///   r_mass:   A^2 (4 kappa^2/M~^2 + g00)  vs  M^2
/// r_mass needs M~^2 != 0; `degenerate` flags |M~^2| < 1e-12, in which case
/// r_mass is reported as 0 and must be ignored.
struct CasimirRelationCheck {
    double r_ratio = 0.0;
    double r_mass = 0.0;
    bool degenerate = false;
};
CasimirRelationCheck casimir_relation_residual(const Momentum& p, const DeformationParams& params,
                                               const Metric& g);

/// |X(M~^2)| at a deformed point (scaled), for a deformed generator field:
/// zero means M~^2 is invariant under the deformed action.
double casimir_invariance_residual(const Generator& gen, const Momentum& deformed,
                                   const Metric& g, double kappa);

/// Classical counterpart: |X(M^2)| for the classical field (scaled).
double classical_invariance_residual(const Generator& gen, const Momentum& p, const Metric& g);

/// Recovers the classical M^2 from a deformed point alone by solving
///   M^2 (4 kappa^2 / M~^2 + g00) = (C(M^2) + sqrt(C^2 - g00 M^2))^2
/// by scan plus bisection over |M^2| <= 10 kappa^2 (the factored form of the
/// shell relation, which removes the spurious root at M^2 = 0). The sign of
/// M^2 follows the sign of M~^2. |M~^2| < 1e-12 is reported as degenerate
/// with M^2 = 0. Throws NoSolutionError when no root lies in range.
struct RecoveredMass {
    double m2 = 0.0;
    bool degenerate = false;
};
RecoveredMass recover_m2(const Momentum& deformed, const DeformationParams& params, const Metric& g);

}  // namespace kappa
