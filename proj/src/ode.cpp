#include "kappa/ode.hpp"

#include <cmath>

#include "kappa/errors.hpp"
#include "kappa/tolerance.hpp"

namespace kappa {

namespace {

OdeSystemCheck check_impl(double p0, double m2, const DeformationParams& params, const Metric& g,
                          double bump) {
    const double kap = params.kappa;
    const double g00 = g.g00();
    const double c = params.c_of(m2);
    const double a = solve_a(m2, c, g00);
    const double denom = c - g00 * a;
    if (!(p0 + c > 0.0)) throw MapDomainError("P0 + C must be positive");
    if (!(denom > 0.0)) throw MapDomainError("C - g00*A must be positive");

    // Profile functions as jets in the single variable P0 (M^2 held fixed).
    const Jet P = Jet::variable(1, 0, p0);
    const Jet f = (1.0 + bump) * (kap / (P + c));
    const Jet h = kap * a / (P + c);
    const Jet gj = kap * log((P + c) / denom);

    const double fv = f.value(), fp = f.grad(0);
    const double hv = h.value(), hp = h.grad(0);
    const double gp = gj.grad(0);
    const double E = std::exp(-gj.value() / kap);

    OdeSystemCheck out;
    out.lhs[0] = gp * p0;
    out.rhs[0] = kap * (1.0 - E) - g00 * hv;
    out.lhs[1] = gp;
    out.rhs[1] = fv;
    out.lhs[2] = fv * p0;
    out.rhs[2] = kap * (1.0 - E) - g00 * hv;
    out.lhs[3] = fp * p0;
    out.rhs[3] = (fv * hv * g00) / kap + (E - 1.0) * fv;
    out.lhs[4] = fp;
    out.rhs[4] = -fv * fv / kap;
    out.lhs[5] = fv * hv / kap;
    out.rhs[5] = -hp;
    out.lhs[6] = fv * p0;
    out.rhs[6] = 0.5 * kap * (1.0 - E * E) - g00 * hv * E - 0.5 * g00 * hv * hv / kap + 0.5 * p0 * p0 * fv * fv / kap;
    out.lhs[7] = fv;
    out.rhs[7] = E * fv + g00 * fv * hv / kap + p0 * fv * fv / kap;
    out.lhs[8] = hp * p0;
    out.rhs[8] = hv * (E - 1.0) + g00 * hv * hv / kap;
    out.lhs[9] = hv * E;
    out.rhs[9] = 0.5 * m2 * fv * fv / kap - 0.5 * g00 * hv * hv / kap;
    return out;
}

}  // namespace

std::array<double, 10> OdeSystemCheck::residuals() const {
    std::array<double, 10> out{};
    for (size_t k = 0; k < out.size(); ++k) out[k] = scaled_gap(lhs[k], rhs[k]);
    return out;
}

double OdeSystemCheck::max_scaled_residual() const {
    double worst = 0.0;
    for (const double r : residuals()) worst = std::max(worst, r);
    return worst;
}

OdeSystemCheck ode_system_check(double p0, double m2, const DeformationParams& params, const Metric& g) {
    return check_impl(p0, m2, params, g, 0.0);
}

OdeSystemCheck ode_system_check_perturbed(double p0, double m2, const DeformationParams& params,
                                          const Metric& g, double bump) {
    return check_impl(p0, m2, params, g, bump);
}

}  // namespace kappa
