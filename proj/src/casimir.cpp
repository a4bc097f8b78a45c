#include "kappa/casimir.hpp"

#include <cmath>
#include <limits>

#include "kappa/errors.hpp"
#include "kappa/tolerance.hpp"
#include "kappa/vector_field.hpp"

namespace kappa {

namespace {

constexpr double kDegenerateCutoff = 1e-12;

}  // namespace

double deformed_mass_squared(const Momentum& t, const Metric& g, double kappa) {
    if (t.dim() != g.dim()) throw DimensionError("deformed_mass_squared: dimension mismatch");
    const int n = g.dim();
    const double half = t[0] / (2.0 * kappa);
    const double sh = std::sinh(half);
    const double eh = std::exp(half);
    double out = g.upper(0, 0) * (2.0 * kappa * sh) * (2.0 * kappa * sh);
    for (int l = 1; l < n; ++l) out += 4.0 * kappa * g.upper(0, l) * t[l] * eh * sh;
    for (int r = 1; r < n; ++r)
        for (int s = 1; s < n; ++s) out += g.upper(r, s) * t[r] * t[s] * eh * eh;
    return out;
}

Jet deformed_mass_squared_jet(std::span<const Jet> t, const Metric& g, double kappa) {
    const int n = g.dim();
    if (static_cast<int>(t.size()) != n) throw DimensionError("deformed_mass_squared: dimension mismatch");
    const Jet half = t[0] / (2.0 * kappa);
    const Jet sh = sinh(half);
    const Jet eh = exp(half);
    Jet out = g.upper(0, 0) * (2.0 * kappa) * (2.0 * kappa) * sh * sh;
    for (int l = 1; l < n; ++l) {
        const double c = g.upper(0, l);
        if (c != 0.0) out = out + 4.0 * kappa * c * t[static_cast<size_t>(l)] * eh * sh;
    }
    for (int r = 1; r < n; ++r)
        for (int s = 1; s < n; ++s) {
            const double c = g.upper(r, s);
            if (c != 0.0) out = out + c * t[static_cast<size_t>(r)] * t[static_cast<size_t>(s)] * eh * eh;
        }
    return out;
}

CasimirRelationCheck casimir_relation_residual(const Momentum& p, const DeformationParams& params,
                                               const Metric& g) {
    const MapDomainWitness w = map_witness(p, params, g);
    if (!w.defined) throw MapDomainError(w.violated);
    const Momentum image = forward(p, params, g);
    const double mt2 = deformed_mass_squared(image, g, params.kappa);
    const double k2 = params.kappa * params.kappa;

    CasimirRelationCheck out;
    out.r_ratio = scaled_gap(2.0 * w.a / w.c_minus_g00a, mt2 / k2);
    if (std::abs(mt2) < kDegenerateCutoff) {
        out.degenerate = true;
    } else {
        out.r_mass = scaled_gap(w.a * w.a * (4.0 * k2 / mt2 + g.g00()), w.m2);
    }
    return out;
}

double casimir_invariance_residual(const Generator& gen, const Momentum& deformed,
                                   const Metric& g, double kappa) {
    const auto seeds = seed_point(deformed);
    const Jet c2 = deformed_mass_squared_jet(seeds, g, kappa);
    const auto xval = deformed_field(gen, g, kappa)(deformed);
    double derivative = 0.0;
    for (int sigma = 0; sigma < g.dim(); ++sigma) derivative += xval[static_cast<size_t>(sigma)] * c2.grad(sigma);
    return scaled_gap(derivative, 0.0);
}

double classical_invariance_residual(const Generator& gen, const Momentum& p, const Metric& g) {
    const auto seeds = seed_point(p);
    Jet m2 = Jet::constant(g.dim(), 0.0);
    for (int mu = 0; mu < g.dim(); ++mu) {
        Jet row = Jet::constant(g.dim(), 0.0);
        for (int nu = 0; nu < g.dim(); ++nu) {
            const double c = g.upper(mu, nu);
            if (c != 0.0) row = row + c * seeds[static_cast<size_t>(nu)];
        }
        m2 = m2 + seeds[static_cast<size_t>(mu)] * row;
    }
    const auto xval = classical_field(gen, g)(p);
    double derivative = 0.0;
    for (int sigma = 0; sigma < g.dim(); ++sigma) derivative += xval[static_cast<size_t>(sigma)] * m2.grad(sigma);
    return scaled_gap(derivative, 0.0);
}

RecoveredMass recover_m2(const Momentum& deformed, const DeformationParams& params, const Metric& g) {
    const double mt2 = deformed_mass_squared(deformed, g, params.kappa);
    if (std::abs(mt2) < kDegenerateCutoff) return {0.0, true};

    const double k2 = params.kappa * params.kappa;
    const double g00 = g.g00();
    const double slope = 4.0 * k2 / mt2 + g00;

    // G(m2) = m2 * slope - (C + sqrt(C^2 - g00 m2))^2. The physical shell
    // relation is m2 * slope = A^{-2} m2^2 ... rewritten through
    // A = m2 / (C + sqrt(...)); factoring one power of m2 out removes the
    // spurious double root at m2 = 0 and leaves G(0) = -(2 C(0))^2 < 0.
    const auto G = [&](double m2) -> double {
        const double c = params.c_of(m2);
        const double disc = c * c - g00 * m2;
        if (disc < 0.0) return std::numeric_limits<double>::quiet_NaN();
        const double branch = c + std::sqrt(disc);
        if (!(branch > 0.0)) return std::numeric_limits<double>::quiet_NaN();
        return m2 * slope - branch * branch;
    };

    // The root shares the sign of M~^2: scan that half of |m2| <= 10 kappa^2
    // for a feasible sign change, then bisect.
    const double limit = (mt2 > 0.0) ? 10.0 * k2 : -10.0 * k2;
    const int steps = 1024;
    double lo = 0.0, hi = 0.0;
    double glo = G(0.0), ghi = 0.0;
    bool bracketed = false;
    for (int k = 1; k <= steps; ++k) {
        const double x = limit * static_cast<double>(k) / steps;
        const double gx = G(x);
        if (std::isnan(glo) || std::isnan(gx)) {
            lo = x;
            glo = gx;
            continue;
        }
        if ((glo < 0.0) != (gx < 0.0)) {
            hi = x;
            ghi = gx;
            bracketed = true;
            break;
        }
        lo = x;
        glo = gx;
    }
    if (!bracketed)
        throw NoSolutionError("mass recovery found no root with |M^2| <= 10 kappa^2");

    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double gm = G(mid);
        if (std::isnan(gm)) throw NoSolutionError("mass recovery crossed an infeasible region");
        if ((gm < 0.0) == (glo < 0.0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
            ghi = gm;
        }
        if (std::abs(hi - lo) <= 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)})) break;
    }
    (void)ghi;
    return {0.5 * (lo + hi), false};
}

}  // namespace kappa
