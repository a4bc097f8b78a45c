#include "kappa/deformation.hpp"

#include <cmath>
#include <cstdio>

#include "kappa/errors.hpp"
#include "kappa/tolerance.hpp"
#include "kappa/vector_field.hpp"

namespace kappa {

namespace {

const char* kNeedP0PlusC = "P0 + C must be positive";
const char* kNeedRealRoot = "C^2 - g00*M^2 must be nonnegative";
const char* kNeedBranch = "C + sqrt(C^2 - g00*M^2) must be positive";
const char* kNeedDenominator = "C - g00*A must be positive";

Jet mass_squared_jet(const Metric& g, std::span<const Jet> p) {
    Jet acc = Jet::constant(g.dim(), 0.0);
    for (int mu = 0; mu < g.dim(); ++mu) {
        Jet row = Jet::constant(g.dim(), 0.0);
        for (int nu = 0; nu < g.dim(); ++nu) {
            const double c = g.upper(mu, nu);
            if (c != 0.0) row = row + c * p[static_cast<size_t>(nu)];
        }
        acc = acc + p[static_cast<size_t>(mu)] * row;
    }
    return acc;
}

}  // namespace

std::string CFamily::name() const {
    char buf[48];
    switch (kind) {
        case Kind::kappa:
            return "kappa";
        case Kind::constant:
            std::snprintf(buf, sizeof buf, "constant(%.17g)", value);
            return buf;
        case Kind::affine:
            std::snprintf(buf, sizeof buf, "affine(%.17g)", value);
            return buf;
    }
    return "?";
}

double DeformationParams::c_of(double m2) const {
    switch (family.kind) {
        case CFamily::Kind::kappa: return kappa;
        case CFamily::Kind::constant: return family.value;
        case CFamily::Kind::affine: return kappa + family.value * m2 / kappa;
    }
    return kappa;
}

Jet DeformationParams::c_of(const Jet& m2) const {
    switch (family.kind) {
        case CFamily::Kind::kappa: return Jet::constant(m2.dim(), kappa);
        case CFamily::Kind::constant: return Jet::constant(m2.dim(), family.value);
        case CFamily::Kind::affine: return kappa + (family.value / kappa) * m2;
    }
    return Jet::constant(m2.dim(), kappa);
}

MapDomainWitness map_witness(const Momentum& p, const DeformationParams& params, const Metric& g) {
    MapDomainWitness w;
    w.m2 = mass_squared(g, p);
    w.c = params.c_of(w.m2);
    w.p0_plus_c = p[0] + w.c;
    if (!(w.p0_plus_c > 0.0)) {
        w.violated = kNeedP0PlusC;
        return w;
    }
    const double g00 = g.g00();
    const double disc = w.c * w.c - g00 * w.m2;
    if (disc < 0.0) {
        w.violated = kNeedRealRoot;
        return w;
    }
    const double branch = w.c + std::sqrt(disc);
    if (!(branch > 0.0)) {
        w.violated = kNeedBranch;
        return w;
    }
    w.a = (w.m2 == 0.0) ? 0.0 : w.m2 / branch;
    w.c_minus_g00a = w.c - g00 * w.a;
    if (!(w.c_minus_g00a > 0.0)) {
        w.violated = kNeedDenominator;
        return w;
    }
    w.defined = true;
    return w;
}

double solve_a(double m2, double c, double g00) {
    const double disc = c * c - g00 * m2;
    if (disc < 0.0) throw NoRealRootError("discriminant C^2 - g00*M^2 is negative");
    if (m2 == 0.0) return 0.0;
    const double branch = c + std::sqrt(disc);
    if (!(branch > 0.0)) throw NoRealRootError("rationalized branch C + sqrt(C^2 - g00*M^2) is nonpositive");
    return m2 / branch;
}

FghTriple fgh(double p0, double m2, const DeformationParams& params, const Metric& g) {
    const double c = params.c_of(m2);
    const double p0c = p0 + c;
    if (!(p0c > 0.0)) throw MapDomainError(kNeedP0PlusC);
    const double a = solve_a(m2, c, g.g00());
    const double denom = c - g.g00() * a;
    if (!(denom > 0.0)) throw MapDomainError(kNeedDenominator);
    FghTriple out;
    out.f = params.kappa / p0c;
    out.h = params.kappa * a / p0c;
    out.g = params.kappa * std::log(p0c / denom);
    return out;
}

Momentum forward(const Momentum& p, const DeformationParams& params, const Metric& g) {
    const MapDomainWitness w = map_witness(p, params, g);
    if (!w.defined) throw MapDomainError(w.violated);
    Momentum out = Momentum::zero(p.dim());
    out[0] = params.kappa * std::log(w.p0_plus_c / w.c_minus_g00a);
    for (int i = 1; i < p.dim(); ++i)
        out[i] = (params.kappa * p[i] + params.kappa * w.a * g.lower(i, 0)) / w.p0_plus_c;
    return out;
}

Momentum inverse(const Momentum& deformed, const DeformationParams& params, const Metric& g, double m2) {
    if (deformed.dim() != g.dim()) throw DimensionError("inverse: dimension mismatch");
    const double c = params.c_of(m2);
    const double a = solve_a(m2, c, g.g00());
    const double denom = c - g.g00() * a;
    if (!(denom > 0.0)) throw MapDomainError(kNeedDenominator);
    const double arg = deformed[0] / params.kappa;
    if (arg > 700.0) throw RangeError("inverse map argument overflows exp()");
    const double grow = std::exp(arg);
    Momentum out = Momentum::zero(deformed.dim());
    out[0] = denom * grow - c;
    for (int i = 1; i < deformed.dim(); ++i)
        out[i] = (denom / params.kappa) * grow * deformed[i] - g.lower(i, 0) * a;
    return out;
}

Momentum weyl_forward(const Momentum& p, double kappa, const Metric& g) {
    if (g.g00() != 0.0) throw WeylNullTimeError();
    if (!(kappa > 0.0)) throw ConfigError("kappa must be positive");
    const double m2 = mass_squared(g, p);
    const double p0k = p[0] + kappa;
    if (!(p0k > 0.0)) throw MapDomainError(kNeedP0PlusC);
    // A collapses to M^2/(2 kappa) here. The spatial part is kept in the
    // factored form kappa (P_i + A g_{i0}) / (P0 + kappa): expanding it into
    // two separate fractions loses digits to cancellation near P0 = -kappa.
    const double a = m2 / (kappa + kappa);
    Momentum out = Momentum::zero(p.dim());
    out[0] = kappa * std::log(p0k / kappa);
    for (int i = 1; i < p.dim(); ++i)
        out[i] = (kappa * p[i] + kappa * a * g.lower(i, 0)) / p0k;
    return out;
}

JetMap forward_jet_map(const DeformationParams& params, const Metric& g) {
    return [params, g](std::span<const Jet> p) {
        const int n = g.dim();
        if (static_cast<int>(p.size()) != n) throw DimensionError("forward map: dimension mismatch");
        const Jet m2 = mass_squared_jet(g, p);
        const Jet c = params.c_of(m2);
        const double g00 = g.g00();
        const Jet p0c = p[0] + c;
        // A = M^2 / (C + sqrt(C^2 - g00 M^2)); sqrt() and log() throw
        // DomainError at the boundary, matching the witness conditions.
        const Jet branch = c + sqrt(c * c - g00 * m2);
        const Jet a = m2 / branch;
        const Jet denom = c - g00 * a;
        std::vector<Jet> out;
        out.reserve(static_cast<size_t>(n));
        out.push_back(params.kappa * log(p0c / denom));
        for (int i = 1; i < n; ++i)
            out.push_back((params.kappa * p[static_cast<size_t>(i)] + params.kappa * g.lower(i, 0) * a) / p0c);
        return out;
    };
}

double intertwining_residual(const Generator& gen, const Momentum& p,
                             const DeformationParams& params, const Metric& g) {
    const MapDomainWitness w = map_witness(p, params, g);
    if (!w.defined) throw MapDomainError(w.violated);

    const auto mapped = forward_jet_map(params, g)(seed_point(p));
    const int n = g.dim();

    // Pushforward: (dPhi)_p applied to the classical field at p.
    const auto xval = classical_field(gen, g)(p);
    std::vector<double> lhs(static_cast<size_t>(n), 0.0);
    for (int rho = 0; rho < n; ++rho)
        for (int sigma = 0; sigma < n; ++sigma)
            lhs[static_cast<size_t>(rho)] += mapped[static_cast<size_t>(rho)].grad(sigma) * xval[static_cast<size_t>(sigma)];

    // The deformed field evaluated at Phi(p).
    Momentum image = Momentum::zero(n);
    for (int rho = 0; rho < n; ++rho) image[rho] = mapped[static_cast<size_t>(rho)].value();
    const auto rhs = deformed_field(gen, g, params.kappa)(image);

    return max_scaled_gap(lhs, rhs);
}

}  // namespace kappa
