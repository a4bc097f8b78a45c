#include "kappa/vector_field.hpp"

#include <cmath>

#include "kappa/errors.hpp"

namespace kappa {

namespace {

// Sum over all indices: g^{alpha sigma} p_sigma as a jet.
Jet raised_component(const Metric& g, std::span<const Jet> p, int alpha) {
    Jet acc = Jet::constant(g.dim(), 0.0);
    for (int sigma = 0; sigma < g.dim(); ++sigma) {
        const double c = g.upper(alpha, sigma);
        if (c != 0.0) acc = acc + c * p[static_cast<size_t>(sigma)];
    }
    return acc;
}

// Sum over spatial indices only: g^{alpha s} p_s, s = 1..n-1.
Jet raised_spatial(const Metric& g, std::span<const Jet> p, int alpha) {
    Jet acc = Jet::constant(g.dim(), 0.0);
    for (int s = 1; s < g.dim(); ++s) {
        const double c = g.upper(alpha, s);
        if (c != 0.0) acc = acc + c * p[static_cast<size_t>(s)];
    }
    return acc;
}

// g^{rs} p_r p_s over spatial r, s.
Jet spatial_square(const Metric& g, std::span<const Jet> p) {
    Jet acc = Jet::constant(g.dim(), 0.0);
    for (int r = 1; r < g.dim(); ++r) {
        const Jet row = raised_spatial(g, p, r);
        acc = acc + p[static_cast<size_t>(r)] * row;
    }
    return acc;
}

std::vector<JetFn> classical_lorentz_components(const Metric& g, int mu, int nu) {
    std::vector<JetFn> comps;
    for (int rho = 0; rho < g.dim(); ++rho) {
        if (rho != mu && rho != nu) {
            const int n = g.dim();
            comps.emplace_back([n](std::span<const Jet>) { return Jet::constant(n, 0.0); });
            continue;
        }
        comps.emplace_back([g, mu, nu, rho](std::span<const Jet> p) {
            Jet out = Jet::constant(g.dim(), 0.0);
            if (rho == nu) out = out + raised_component(g, p, mu);
            if (rho == mu) out = out - raised_component(g, p, nu);
            return out;
        });
    }
    return comps;
}

std::vector<JetFn> deformed_rotation_components(const Metric& g, double kappa, int i, int j) {
    std::vector<JetFn> comps;
    for (int k = 0; k < g.dim(); ++k) {
        if (k != i && k != j) {
            const int n = g.dim();
            comps.emplace_back([n](std::span<const Jet>) { return Jet::constant(n, 0.0); });
            continue;
        }
        comps.emplace_back([g, kappa, i, j, k](std::span<const Jet> p) {
            const double dj = (k == j) ? 1.0 : 0.0;
            const double di = (k == i) ? 1.0 : 0.0;
            const Jet one_minus_e = 1.0 - exp(-p[0] / kappa);
            Jet out = kappa * (dj * g.upper(0, i) - di * g.upper(0, j)) * one_minus_e;
            if (dj != 0.0) out = out + raised_spatial(g, p, i);
            if (di != 0.0) out = out - raised_spatial(g, p, j);
            return out;
        });
    }
    return comps;
}

std::vector<JetFn> deformed_boost_components(const Metric& g, double kappa, int i) {
    std::vector<JetFn> comps;
    comps.emplace_back([g, kappa, i](std::span<const Jet> p) {
        const Jet one_minus_e = 1.0 - exp(-p[0] / kappa);
        return kappa * g.upper(i, 0) * one_minus_e + raised_spatial(g, p, i);
    });
    for (int k = 1; k < g.dim(); ++k) {
        comps.emplace_back([g, kappa, i, k](std::span<const Jet> p) {
            const Jet e = exp(-p[0] / kappa);
            Jet out = g.upper(0, i) * p[static_cast<size_t>(k)] * (e - 1.0) -
                      (1.0 / kappa) * raised_spatial(g, p, i) * p[static_cast<size_t>(k)];
            if (k == i) {
                out = out - (0.5 * kappa) * g.upper(0, 0) * (1.0 - e * e);
                out = out - raised_spatial(g, p, 0) * e;
                out = out + (0.5 / kappa) * spatial_square(g, p);
            }
            return out;
        });
    }
    return comps;
}

std::vector<JetFn> deformed_dilatation_components(const Metric& g, double kappa) {
    std::vector<JetFn> comps;
    comps.emplace_back([g, kappa](std::span<const Jet> p) {
        return kappa * (1.0 - exp(-p[0] / kappa));
    });
    for (int i = 1; i < g.dim(); ++i) {
        comps.emplace_back([g, kappa, i](std::span<const Jet> p) {
            const Jet e = exp(-p[0] / kappa);
            const Jet one_minus_e = 1.0 - e;
            Jet out = p[static_cast<size_t>(i)] * e;
            const double gi0 = g.lower(i, 0);
            if (gi0 != 0.0) {
                out = out + gi0 * raised_spatial(g, p, 0) * one_minus_e;
                out = out + (0.5 / kappa) * gi0 * spatial_square(g, p);
                out = out + (0.5 * kappa) * g.upper(0, 0) * gi0 * one_minus_e * one_minus_e;
            }
            return out;
        });
    }
    return comps;
}

struct FirstOrder {
    double v = 0.0;
    std::vector<double> g;
};

// The Lie bracket of two fields, carried to first order: value and gradient
// of every component, assembled from the order-2 jets of the fields.
// drop_a_hessian omits the second derivatives of the first field from the
// bracket's gradient (the fault described at jacobi_residual).
std::vector<FirstOrder> bracket_first_order(const std::vector<Jet>& aj, const std::vector<Jet>& bj,
                                            bool drop_a_hessian = false) {
    const int n = static_cast<int>(aj.size());
    std::vector<FirstOrder> out(static_cast<size_t>(n));
    for (int rho = 0; rho < n; ++rho) {
        FirstOrder& c = out[static_cast<size_t>(rho)];
        c.g.assign(static_cast<size_t>(n), 0.0);
        const Jet& ar = aj[static_cast<size_t>(rho)];
        const Jet& br = bj[static_cast<size_t>(rho)];
        for (int sigma = 0; sigma < n; ++sigma) {
            const Jet& as = aj[static_cast<size_t>(sigma)];
            const Jet& bs = bj[static_cast<size_t>(sigma)];
            c.v += as.value() * br.grad(sigma) - bs.value() * ar.grad(sigma);
            for (int tau = 0; tau < n; ++tau) {
                c.g[static_cast<size_t>(tau)] += as.grad(tau) * br.grad(sigma) + as.value() * br.hess(sigma, tau) -
                                                 bs.grad(tau) * ar.grad(sigma);
                if (!drop_a_hessian) c.g[static_cast<size_t>(tau)] -= bs.value() * ar.hess(sigma, tau);
            }
        }
    }
    return out;
}

// [[A,B], C] values from the first-order jet of [A,B] and order-2 jets of C.
std::vector<double> bracket_with_field(const std::vector<FirstOrder>& ab, const std::vector<Jet>& cj) {
    const int n = static_cast<int>(cj.size());
    std::vector<double> out(static_cast<size_t>(n), 0.0);
    for (int rho = 0; rho < n; ++rho)
        for (int sigma = 0; sigma < n; ++sigma)
            out[static_cast<size_t>(rho)] += ab[static_cast<size_t>(sigma)].v * cj[static_cast<size_t>(rho)].grad(sigma) -
                                             cj[static_cast<size_t>(sigma)].value() * ab[static_cast<size_t>(rho)].g[static_cast<size_t>(sigma)];
    return out;
}

}  // namespace

VectorField::VectorField(Generator gen, FieldBasis basis, int dim, std::vector<JetFn> components)
    : gen_(gen), basis_(basis), dim_(dim), comps_(std::move(components)) {
    if (static_cast<int>(comps_.size()) != dim_) throw DimensionError("vector field needs one component per dimension");
}

std::vector<double> VectorField::operator()(const Momentum& p) const {
    const auto j = jets(p);
    std::vector<double> out;
    out.reserve(j.size());
    for (const Jet& c : j) out.push_back(c.value());
    return out;
}

std::vector<Jet> VectorField::jets(const Momentum& p) const {
    if (p.dim() != dim_) throw DimensionError("vector field evaluated at wrong dimension");
    const auto seeds = seed_point(p);
    return jets(seeds);
}

std::vector<Jet> VectorField::jets(std::span<const Jet> seeds) const {
    std::vector<Jet> out;
    out.reserve(comps_.size());
    for (const JetFn& c : comps_) out.push_back(c(seeds));
    return out;
}

VectorField classical_field(const Generator& gen, const Metric& g) {
    const int n = g.dim();
    if (gen.kind == Generator::Kind::dilatation) {
        std::vector<JetFn> comps;
        for (int rho = 0; rho < n; ++rho)
            comps.emplace_back([rho](std::span<const Jet> p) { return p[static_cast<size_t>(rho)]; });
        return VectorField(gen, FieldBasis::classical, n, std::move(comps));
    }
    const int mu = gen.i;
    const int nu = (gen.kind == Generator::Kind::rotation) ? gen.j : 0;
    if (mu >= n || nu >= n) throw DimensionError("generator index exceeds metric dimension");
    return VectorField(gen, FieldBasis::classical, n, classical_lorentz_components(g, mu, nu));
}

VectorField deformed_field(const Generator& gen, const Metric& g, double kappa) {
    if (!(kappa > 0.0)) throw ConfigError("kappa must be positive");
    const int n = g.dim();
    switch (gen.kind) {
        case Generator::Kind::rotation:
            if (gen.j >= n) throw DimensionError("generator index exceeds metric dimension");
            return VectorField(gen, FieldBasis::deformed, n, deformed_rotation_components(g, kappa, gen.i, gen.j));
        case Generator::Kind::boost:
            if (gen.i >= n) throw DimensionError("generator index exceeds metric dimension");
            return VectorField(gen, FieldBasis::deformed, n, deformed_boost_components(g, kappa, gen.i));
        case Generator::Kind::dilatation:
            if (g.g00() != 0.0) throw WeylNullTimeError();
            return VectorField(gen, FieldBasis::deformed, n, deformed_dilatation_components(g, kappa));
    }
    throw ConfigError("unknown generator kind");
}

std::vector<double> lie_bracket_from_jets(const std::vector<Jet>& xj, const std::vector<Jet>& yj) {
    if (xj.size() != yj.size()) throw DimensionError("lie bracket: dimension mismatch");
    const int n = static_cast<int>(xj.size());
    std::vector<double> out(static_cast<size_t>(n), 0.0);
    for (int rho = 0; rho < n; ++rho)
        for (int sigma = 0; sigma < n; ++sigma)
            out[static_cast<size_t>(rho)] += xj[static_cast<size_t>(sigma)].value() * yj[static_cast<size_t>(rho)].grad(sigma) -
                                             yj[static_cast<size_t>(sigma)].value() * xj[static_cast<size_t>(rho)].grad(sigma);
    return out;
}

std::vector<double> lie_bracket(const VectorField& x, const VectorField& y, const Momentum& at) {
    return lie_bracket_from_jets(x.jets(at), y.jets(at));
}

double jacobi_residual_from_jets(const std::vector<Jet>& aj, const std::vector<Jet>& bj, const std::vector<Jet>& cj,
                                 bool drop_first_hessian) {
    const auto ab = bracket_first_order(aj, bj, drop_first_hessian);
    const auto bc = bracket_first_order(bj, cj);
    const auto ca = bracket_first_order(cj, aj);
    const auto t1 = bracket_with_field(ab, cj);
    const auto t2 = bracket_with_field(bc, aj);
    const auto t3 = bracket_with_field(ca, bj);
    double worst = 0.0;
    for (size_t rho = 0; rho < t1.size(); ++rho)
        worst = std::max(worst, std::abs(t1[rho] + t2[rho] + t3[rho]));
    return worst;
}

double jacobi_residual(const VectorField& a, const VectorField& b, const VectorField& c, const Momentum& at,
                       bool drop_first_hessian) {
    return jacobi_residual_from_jets(a.jets(at), b.jets(at), c.jets(at), drop_first_hessian);
}

}  // namespace kappa
