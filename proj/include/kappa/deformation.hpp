#pragma once

#include <string>

#include "kappa/generators.hpp"
#include "kappa/jet.hpp"
#include "kappa/metric.hpp"
#include "kappa/momentum.hpp"

namespace kappa {

/// Choice of the integration constant C(M^2) that labels one member of the
/// family of deformation maps. "kappa" (C = kappa) and fixed constants keep
/// C independent of the mass shell; the affine family C = kappa + lambda
/// M^2 / kappa makes C shell-dependent, which is enough to break the
/// dilatation intertwining property while leaving the Lorentz sector intact.
struct CFamily {
    enum class Kind { kappa, constant, affine };

    Kind kind = Kind::kappa;
    double value = 0.0;  // constant: the constant C; affine: lambda

    static CFamily kappa_scale() { return {}; }
    static CFamily constant(double c) { return {Kind::constant, c}; }
    static CFamily affine(double lambda) { return {Kind::affine, lambda}; }

    bool is_constant() const { return kind != Kind::affine; }
    std::string name() const;

    friend bool operator==(const CFamily&, const CFamily&) = default;
};

struct DeformationParams {
    double kappa = 1.0;
    CFamily family;

    double c_of(double m2) const;
    Jet c_of(const Jet& m2) const;
};

/// Everything the map needs at one point, plus the domain verdict. The
/// checks run in a fixed order and `violated` names the first failure:
///   1. "P0 + C must be positive"
///   2. "C^2 - g00*M^2 must be nonnegative"
///   3. "C + sqrt(C^2 - g00*M^2) must be positive"
///   4. "C - g00*A must be positive"
struct MapDomainWitness {
    bool defined = false;
    const char* violated = nullptr;
    double m2 = 0.0;
    double c = 0.0;
    double a = 0.0;
    double p0_plus_c = 0.0;
    double c_minus_g00a = 0.0;
};

MapDomainWitness map_witness(const Momentum& p, const DeformationParams& params, const Metric& g);

/// The admissible root of g00 A^2 - 2 A C + M^2 = 0 in its rationalized
/// form A = M^2 / (C + sqrt(C^2 - g00 M^2)), which stays finite as g00 -> 0.
/// Throws NoRealRootError when the discriminant is negative or the branch
/// denominator is nonpositive.
double solve_a(double m2, double c, double g00);

/// The scalar profile (f, g, h) of the map at time component p0 on the mass
/// shell m2: f = kappa/(P0+C), h = kappa A/(P0+C),
/// g = kappa ln((P0+C)/(C - g00 A)). Throws MapDomainError outside the
/// domain.
struct FghTriple {
    double f = 0.0, g = 0.0, h = 0.0;
};
FghTriple fgh(double p0, double m2, const DeformationParams& params, const Metric& g);

/// The deformation map Phi: classical momentum -> deformed momentum,
///   out_0 = kappa ln((P0+C)/(C-g00 A)),  out_i = (kappa P_i + kappa A g_{i0})/(P0+C).
Momentum forward(const Momentum& p, const DeformationParams& params, const Metric& g);

/// Inverse of the map on the shell m2:
///   P0 = (C - g00 A) e^{t0/kappa} - C,
///   P_i = (C - g00 A)/kappa e^{t0/kappa} t_i - g_{i0} A.
Momentum inverse(const Momentum& deformed, const DeformationParams& params, const Metric& g, double m2);

/// The Weyl-sector specialization (g00 = 0, C = kappa), where A = M^2/(2 kappa)
/// closes the map into elementary form. Throws WeylNullTimeError when
/// g00 != 0.
Momentum weyl_forward(const Momentum& p, double kappa, const Metric& g);

/// The forward map lifted to jets, for Jacobians and pushforwards. The
/// caller is responsible for staying inside the map domain.
JetMap forward_jet_map(const DeformationParams& params, const Metric& g);

/// How far the map is from intertwining the two realizations of `gen`:
/// componentwise scaled gap between (dPhi at p) X_classical(p) and
/// X_deformed(Phi(p)). Zero (to rounding) for rotations and boosts with any
/// family, and for the dilatation when C is constant and g00 = 0.
double intertwining_residual(const Generator& gen, const Momentum& p,
                             const DeformationParams& params, const Metric& g);

}  // namespace kappa
