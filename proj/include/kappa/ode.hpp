#pragma once

#include <array>

#include "kappa/deformation.hpp"
#include "kappa/metric.hpp"

namespace kappa {

/// Left- and right-hand sides of the ten coupled conditions that the scalar
/// profile (f, g, h) of the deformation map has to satisfy on a mass shell.
/// With ' = d/dP0 at fixed M^2 and E = e^{-g/kappa}, the conditions are
///
///    1.  g' P0            =  kappa (1 - E) - g00 h
///    2.  g'               =  f
///    3.  f P0             =  kappa (1 - E) - g00 h
///    4.  f' P0            =  (1/kappa) f h g00 + (E - 1) f
///    5.  f'               =  -f^2 / kappa
///    6.  (1/kappa) f h    =  -h'
///    7.  f P0             =  (kappa/2)(1 - E^2) - g00 h E
///                              - (1/2kappa) g00 h^2 + (1/2kappa) P0^2 f^2
///    8.  f                =  E f + (1/kappa) g00 f h + (1/kappa) P0 f^2
///    9.  h' P0            =  h (E - 1) + (1/kappa) g00 h^2
///   10.  h E              =  (1/2kappa) M^2 f^2 - (1/2kappa) g00 h^2
///
/// The derivatives are taken with jets in the single variable P0, not with
/// finite differences, so residuals sit at rounding level when the closed
/// forms are correct.
struct OdeSystemCheck {
    std::array<double, 10> lhs{};
    std::array<double, 10> rhs{};

    std::array<double, 10> residuals() const;  // scaled gap per condition
    double max_scaled_residual() const;
};

OdeSystemCheck ode_system_check(double p0, double m2, const DeformationParams& params, const Metric& g);

/// Same check with the profile function f (and hence f') scaled by
/// (1 + bump). Any nonzero bump must push condition 5 visibly off zero;
/// the harness uses this to prove the check has teeth.
OdeSystemCheck ode_system_check_perturbed(double p0, double m2, const DeformationParams& params,
                                          const Metric& g, double bump);

}  // namespace kappa
