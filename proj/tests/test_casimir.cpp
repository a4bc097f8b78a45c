#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kappa/casimir.hpp"
#include "kappa/deformation.hpp"
#include "kappa/errors.hpp"
#include "kappa/rng.hpp"
#include "kappa/tolerance.hpp"
#include "kappa/vector_field.hpp"

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

TEST_CASE("deformed mass square at the worked image point") {
    const Metric g = metric_preset("minkowski4");
    const Momentum image = forward({1.0, 0.6, 0.0, 0.0}, kappa_params(1.0), g);
    CHECK(deformed_mass_squared(image, g, 1.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("both shell relations hold exactly at the worked point") {
    const Metric g = metric_preset("minkowski4");
    const CasimirRelationCheck chk =
        casimir_relation_residual({1.0, 0.6, 0.0, 0.0}, kappa_params(1.0), g);
    CHECK_FALSE(chk.degenerate);
    CHECK(chk.r_ratio < 1e-15);
    CHECK(chk.r_mass < 1e-15);
}

TEST_CASE("shell relations hold on samples for every preset, kappa, family") {
    struct Case {
        const char* preset;
        double kappa;
        CFamily family;
    };
    const Case cases[] = {
        {"minkowski4", 0.5, CFamily::kappa_scale()},
        {"minkowski4", 5.0, CFamily::constant(2.0)},
        {"offdiag5", 2.0, CFamily::affine(0.5)},
        {"lightcone2", 1.0, CFamily::kappa_scale()},
        {"lightcone3", 0.7, CFamily::constant(0.9)},
    };
    for (const Case& c : cases) {
        const Metric g = metric_preset(c.preset);
        DeformationParams params;
        params.kappa = c.kappa;
        params.family = c.family;
        for (const Momentum& p : admissible_points(g, params, 40, 11)) {
            const CasimirRelationCheck chk = casimir_relation_residual(p, params, g);
            if (chk.degenerate) continue;
            CHECK(chk.r_ratio < 1e-12);
            CHECK(chk.r_mass < 1e-12);
        }
    }
}

TEST_CASE("rotations and boosts leave the deformed mass square invariant") {
    for (const char* preset : {"minkowski4", "offdiag5", "lightcone2", "lightcone3"}) {
        const Metric g = metric_preset(preset);
        for (const double kap : {0.5, 1.0, 5.0}) {
            const auto params = kappa_params(kap);
            for (const Momentum& p : admissible_points(g, params, 25, 3)) {
                const Momentum image = forward(p, params, g);
                for (const Generator& gen : lorentz_basis(g.dim()))
                    CHECK(casimir_invariance_residual(gen, image, g, kap) < 1e-11);
            }
        }
    }
}

TEST_CASE("rotations and boosts leave the classical mass square invariant") {
    SplitMix64 rng(17);
    for (const char* preset : {"minkowski4", "offdiag5", "lightcone3"}) {
        const Metric g = metric_preset(preset);
        for (int round = 0; round < 25; ++round) {
            Momentum p = Momentum::zero(g.dim());
            for (int mu = 0; mu < g.dim(); ++mu) p[mu] = rng.next_uniform(-1.0, 1.0);
            for (const Generator& gen : lorentz_basis(g.dim()))
                CHECK(classical_invariance_residual(gen, p, g) < 1e-13);
        }
    }
}

TEST_CASE("mass recovery from the deformed shell value") {
    const Metric mink = metric_preset("minkowski4");
    const auto params = kappa_params(1.0);

    const Momentum timelike = forward({1.0, 0.6, 0.0, 0.0}, params, mink);
    const RecoveredMass rec = recover_m2(timelike, params, mink);
    CHECK_FALSE(rec.degenerate);
    CHECK(rec.m2 == doctest::Approx(0.64).epsilon(1e-10));

    // spacelike shell: M^2 < 0 is recovered from a negative deformed value
    const Momentum spacelike = forward({0.2, 0.8, 0.0, 0.0}, params, mink);
    const RecoveredMass rec2 = recover_m2(spacelike, params, mink);
    CHECK_FALSE(rec2.degenerate);
    CHECK(rec2.m2 == doctest::Approx(0.04 - 0.64).epsilon(1e-9));
}

TEST_CASE("recovery across presets and families round-trips the shell") {
    struct Case {
        const char* preset;
        double kappa;
        CFamily family;
    };
    const Case cases[] = {
        {"minkowski4", 1.0, CFamily::kappa_scale()},
        {"offdiag5", 2.0, CFamily::constant(2.5)},
        {"lightcone2", 1.0, CFamily::kappa_scale()},
    };
    for (const Case& c : cases) {
        const Metric g = metric_preset(c.preset);
        DeformationParams params;
        params.kappa = c.kappa;
        params.family = c.family;
        for (const Momentum& p : admissible_points(g, params, 30, 23)) {
            const double m2 = mass_squared(g, p);
            const RecoveredMass rec = recover_m2(forward(p, params, g), params, g);
            if (rec.degenerate) {
                CHECK(std::fabs(m2) < 1e-6);
                continue;
            }
            CHECK(scaled_gap(rec.m2, m2) < 1e-8);
        }
    }
}

TEST_CASE("degenerate shells recover zero mass") {
    const Metric lc = metric_preset("lightcone2");
    const RecoveredMass on_cone = recover_m2({0.7, 0.0}, kappa_params(1.0), lc);
    CHECK(on_cone.degenerate);
    CHECK(on_cone.m2 == 0.0);

    const Metric mink = metric_preset("minkowski4");
    const RecoveredMass origin = recover_m2(Momentum::zero(4), kappa_params(1.0), mink);
    CHECK(origin.degenerate);
    CHECK(origin.m2 == 0.0);
}

TEST_CASE("an unreachable shell value reports no solution") {
    const Metric mink = metric_preset("minkowski4");
    // deformed value -4 kappa^2 sits outside the image of the shell relation
    CHECK_THROWS_AS(recover_m2({0.0, 2.0, 0.0, 0.0}, kappa_params(1.0), mink), NoSolutionError);
}

TEST_CASE("null-time metrics make the deformed value equal the mass itself") {
    const Metric lc = metric_preset("lightcone2");
    const auto params = kappa_params(1.0);
    for (const Momentum& p : admissible_points(lc, params, 30, 31)) {
        const Momentum image = forward(p, params, lc);
        const double m2tilde = deformed_mass_squared(image, lc, 1.0);
        CHECK(scaled_gap(m2tilde, mass_squared(lc, p)) < 1e-12);
    }
}
