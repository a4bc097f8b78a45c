#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "kappa/deformation.hpp"
#include "kappa/errors.hpp"
#include "kappa/ode.hpp"
#include "kappa/rng.hpp"
#include "kappa/tolerance.hpp"
#include "kappa/vector_field.hpp"
#include "oracles.hpp"

using namespace kappa;

namespace {

DeformationParams kappa_params(double kap) {
    DeformationParams p;
    p.kappa = kap;
    return p;
}

std::vector<Momentum> admissible_points(const Metric& g, const DeformationParams& params, int count,
                                        uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Momentum> out;
    while (static_cast<int>(out.size()) < count) {
        Momentum p = Momentum::zero(g.dim());
        for (int mu = 0; mu < g.dim(); ++mu) p[mu] = rng.next_uniform(-1.0, 1.0);
        if (map_witness(p, params, g).defined) out.push_back(p);
    }
    return out;
}

}  // namespace

TEST_CASE("admissible root of the shell constraint at pinned values") {
    CHECK(solve_a(0.64, 1.0, 1.0) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(solve_a(1.0, 1.0, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(solve_a(0.0, 1.0, 1.0) == 0.0);
    CHECK_THROWS_AS(solve_a(4.0, 1.0, 1.0), NoRealRootError);   // discriminant < 0
    CHECK_THROWS_AS(solve_a(3.0, -2.0, 1.0), NoRealRootError);  // branch denominator <= 0
}

TEST_CASE("the root satisfies the quadratic and the branch identity") {
    SplitMix64 rng(5);
    for (int round = 0; round < 200; ++round) {
        const double m2 = rng.next_uniform(-2.0, 2.0);
        const double c = rng.next_uniform(0.2, 3.0);
        const double g00 = rng.next_uniform(-1.5, 1.5);
        if (c * c - g00 * m2 < 0.0) continue;
        const double a = solve_a(m2, c, g00);
        CHECK(scaled_gap(g00 * a * a - 2.0 * a * c + m2, 0.0) < 1e-14);
        CHECK(scaled_gap(c - g00 * a, std::sqrt(c * c - g00 * m2)) < 1e-14);
    }
}

TEST_CASE("profile functions at the worked shell point") {
    const Metric g = metric_preset("minkowski4");
    const FghTriple t = fgh(1.0, 0.64, kappa_params(1.0), g);
    CHECK(t.f == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(t.h == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(t.g == doctest::Approx(std::log(10.0 / 3.0)).epsilon(1e-15));
    CHECK_THROWS_AS(fgh(-2.0, 0.0, kappa_params(1.0), g), MapDomainError);
}

TEST_CASE("forward map at the worked point") {
    const Metric g = metric_preset("minkowski4");
    const Momentum image = forward({1.0, 0.6, 0.0, 0.0}, kappa_params(1.0), g);
    CHECK(image[0] == doctest::Approx(1.2039728043259361).epsilon(1e-15));
    CHECK(image[1] == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(image[2] == 0.0);
    CHECK(image[3] == 0.0);
}

TEST_CASE("map domain conditions are reported in a fixed order") {
    const Metric g = metric_preset("minkowski4");
    const auto params = kappa_params(1.0);

    const MapDomainWitness w1 = map_witness({-2.0, 0.0, 0.0, 0.0}, params, g);
    CHECK_FALSE(w1.defined);
    CHECK(std::string(w1.violated) == "P0 + C must be positive");

    const MapDomainWitness w2 = map_witness({1.5, 0.1, 0.0, 0.0}, params, g);
    CHECK_FALSE(w2.defined);
    CHECK(std::string(w2.violated) == "C^2 - g00*M^2 must be nonnegative");

    // M^2 = 1 exactly: the discriminant vanishes and C - g00 A hits zero.
    const MapDomainWitness w4 = map_witness({1.25, 0.75, 0.0, 0.0}, params, g);
    CHECK_FALSE(w4.defined);
    CHECK(std::string(w4.violated) == "C - g00*A must be positive");

    DeformationParams neg;
    neg.kappa = 1.0;
    neg.family = CFamily::constant(-2.0);
    const MapDomainWitness w3 = map_witness({2.5, std::sqrt(3.25), 0.0, 0.0}, neg, g);
    CHECK_FALSE(w3.defined);
    CHECK(std::string(w3.violated) == "C + sqrt(C^2 - g00*M^2) must be positive");

    CHECK_THROWS_WITH_AS(forward({-2.0, 0.0, 0.0, 0.0}, params, g),
                         "deformation map undefined: P0 + C must be positive", MapDomainError);
}

TEST_CASE("inverse undoes forward on every preset and family") {
    struct Case {
        const char* preset;
        double kappa;
        CFamily family;
    };
    const Case cases[] = {
        {"minkowski4", 1.0, CFamily::kappa_scale()},
        {"minkowski4", 5.0, CFamily::constant(2.0)},
        {"offdiag5", 2.0, CFamily::affine(0.5)},
        {"lightcone2", 0.5, CFamily::kappa_scale()},
        {"lightcone3", 1.0, CFamily::constant(0.8)},
    };
    for (const Case& c : cases) {
        const Metric g = metric_preset(c.preset);
        DeformationParams params;
        params.kappa = c.kappa;
        params.family = c.family;
        for (const Momentum& p : admissible_points(g, params, 50, 13)) {
            const double m2 = mass_squared(g, p);
            const Momentum back = inverse(forward(p, params, g), params, g, m2);
            CHECK(max_scaled_gap(back.components(), p.components()) < 1e-12);
        }
    }
}

TEST_CASE("forward map jacobian agrees with finite differences") {
    const Metric g = metric_preset("offdiag5");
    DeformationParams params;
    params.kappa = 2.0;
    const JetMap map = forward_jet_map(params, g);
    const Momentum at = admissible_points(g, params, 1, 41)[0];
    const auto jac = jacobian(map, at);

    for (int rho = 0; rho < 5; ++rho)
        for (int sigma = 0; sigma < 5; ++sigma) {
            const oracle::ScalarFn comp = [&](const std::vector<double>& x) {
                return forward(Momentum(x), params, g)[rho];
            };
            std::vector<double> base(at.components().begin(), at.components().end());
            const double fd = oracle::fd_partial(comp, base, sigma);
            CHECK(scaled_gap(jac[static_cast<size_t>(rho)][static_cast<size_t>(sigma)], fd) < 1e-7);
        }
}

TEST_CASE("the map intertwines rotations and boosts for every family") {
    struct Case {
        const char* preset;
        double kappa;
        CFamily family;
    };
    const Case cases[] = {
        {"minkowski4", 1.0, CFamily::kappa_scale()},
        {"minkowski4", 0.5, CFamily::affine(0.5)},
        {"offdiag5", 2.0, CFamily::kappa_scale()},
        {"offdiag5", 1.0, CFamily::affine(-0.3)},
        {"lightcone2", 1.0, CFamily::constant(2.0)},
        {"lightcone3", 0.7, CFamily::kappa_scale()},
    };
    for (const Case& c : cases) {
        const Metric g = metric_preset(c.preset);
        DeformationParams params;
        params.kappa = c.kappa;
        params.family = c.family;
        for (const Momentum& p : admissible_points(g, params, 25, 19))
            for (const Generator& gen : lorentz_basis(g.dim()))
                CHECK(intertwining_residual(gen, p, params, g) < 1e-11);
    }
}

TEST_CASE("the dilatation intertwines exactly when C is mass-independent") {
    for (const char* preset : {"lightcone2", "lightcone3"}) {
        const Metric g = metric_preset(preset);
        for (const double c : {1.0, 2.0, 0.8}) {
            DeformationParams params;
            params.kappa = 1.0;
            params.family = (c == 1.0) ? CFamily::kappa_scale() : CFamily::constant(c);
            for (const Momentum& p : admissible_points(g, params, 25, 29))
                CHECK(intertwining_residual(Generator::dilatation(), p, params, g) < 1e-11);
        }

        DeformationParams broken;
        broken.kappa = 1.0;
        broken.family = CFamily::affine(0.5);
        int visible = 0, total = 0;
        for (const Momentum& p : admissible_points(g, broken, 25, 29)) {
            ++total;
            if (intertwining_residual(Generator::dilatation(), p, broken, g) > 1e-3) ++visible;
        }
        CHECK(visible >= (9 * total) / 10);
    }
}

TEST_CASE("weyl specialization matches the general map with C = kappa") {
    for (const char* preset : {"lightcone2", "lightcone3"}) {
        const Metric g = metric_preset(preset);
        for (const double kap : {0.5, 1.0, 5.0}) {
            const auto params = kappa_params(kap);
            for (const Momentum& p : admissible_points(g, params, 50, 7)) {
                const Momentum lhs = weyl_forward(p, kap, g);
                const Momentum rhs = forward(p, params, g);
                CHECK(max_scaled_gap(lhs.components(), rhs.components()) < 1e-14);
            }
        }
    }
    CHECK_THROWS_AS(weyl_forward({1.0, 0.0, 0.0, 0.0}, 1.0, metric_preset("minkowski4")), WeylNullTimeError);
}

TEST_CASE("weyl map at the pinned light-cone point") {
    const Metric g = metric_preset("lightcone2");
    const Momentum image = weyl_forward({1.0, 0.5}, 1.0, g);
    CHECK(image[0] == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(image[1] == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("profile conditions hold on shell at the worked point and on samples") {
    const Metric mink = metric_preset("minkowski4");
    const OdeSystemCheck chk = ode_system_check(1.0, 0.64, kappa_params(1.0), mink);
    // spot values: f' = -1/(P0+C)^2 = -0.25, h E = 0.06 on both sides
    CHECK(chk.lhs[4] == doctest::Approx(-0.25).epsilon(1e-14));
    CHECK(chk.lhs[9] == doctest::Approx(0.06).epsilon(1e-14));
    CHECK(chk.rhs[9] == doctest::Approx(0.06).epsilon(1e-14));
    CHECK(chk.max_scaled_residual() < 1e-13);

    struct Case {
        const char* preset;
        double kappa;
        CFamily family;
    };
    const Case cases[] = {
        {"minkowski4", 0.5, CFamily::kappa_scale()},
        {"minkowski4", 5.0, CFamily::affine(0.5)},
        {"offdiag5", 2.0, CFamily::constant(1.5)},
        {"lightcone2", 1.0, CFamily::kappa_scale()},
    };
    for (const Case& c : cases) {
        const Metric g = metric_preset(c.preset);
        DeformationParams params;
        params.kappa = c.kappa;
        params.family = c.family;
        for (const Momentum& p : admissible_points(g, params, 40, 43)) {
            const double m2 = mass_squared(g, p);
            CHECK(ode_system_check(p[0], m2, params, g).max_scaled_residual() < 1e-12);
        }
    }
}

TEST_CASE("a 1% bump of the profile function f trips condition 5") {
    const Metric g = metric_preset("minkowski4");
    const OdeSystemCheck chk = ode_system_check_perturbed(1.0, 0.64, kappa_params(1.0), g, 0.01);
    CHECK(chk.residuals()[4] == doctest::Approx(0.002525).epsilon(1e-6));
    CHECK(chk.residuals()[4] > 1e-4);
}
