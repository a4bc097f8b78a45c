#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kappa/coproduct.hpp"
#include "kappa/deformation.hpp"
#include "kappa/errors.hpp"
#include "kappa/rng.hpp"
#include "kappa/tolerance.hpp"

using namespace kappa;

namespace {

Momentum random_point(SplitMix64& rng, int dim, double box) {
    Momentum p = Momentum::zero(dim);
    for (int mu = 0; mu < dim; ++mu) p[mu] = rng.next_uniform(-box, box);
    return p;
}

}  // namespace

TEST_CASE("deformed addition at the pinned pair") {
    const Momentum sum = deformed_add({0.0, 1.0}, {1.0, 0.0}, 1.0);
    CHECK(sum[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(sum[1] == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
}

TEST_CASE("deformed addition is associative but not commutative") {
    SplitMix64 rng(9);
    for (const double kap : {0.5, 1.0, 5.0}) {
        double worst_assoc = 0.0;
        double best_comm = 0.0;
        for (int round = 0; round < 100; ++round) {
            const Momentum p = random_point(rng, 4, 1.0);
            const Momentum q = random_point(rng, 4, 1.0);
            const Momentum r = random_point(rng, 4, 1.0);
            worst_assoc = std::max(worst_assoc, coassociativity_gap(p, q, r, kap));
            best_comm = std::max(best_comm, cocommutativity_gap(p, q, kap));
        }
        // The gap is absolute and the spatial parts are damped by factors up
        // to e^{2/kappa} (~55 at kappa = 0.5), so a few ulps at that scale.
        CHECK(worst_assoc < 1e-13);
        CHECK(best_comm > 1e-3);  // generic pairs do not commute
    }
}

TEST_CASE("zero is the identity and the antipode is the inverse") {
    SplitMix64 rng(21);
    const Momentum zero = Momentum::zero(4);
    for (int round = 0; round < 100; ++round) {
        const Momentum p = random_point(rng, 4, 1.0);
        const Momentum left = deformed_add(zero, p, 1.0);
        const Momentum right = deformed_add(p, zero, 1.0);
        CHECK(max_abs_gap(left.components(), p.components()) < 1e-15);
        CHECK(max_abs_gap(right.components(), p.components()) < 1e-15);

        const Momentum s = antipode(p, 1.0);
        const Momentum ls = deformed_add(s, p, 1.0);
        const Momentum rs = deformed_add(p, s, 1.0);
        CHECK(max_abs_gap(ls.components(), zero.components()) < 1e-14);
        CHECK(max_abs_gap(rs.components(), zero.components()) < 1e-14);
    }
}

TEST_CASE("antipode at a pinned point and as an involution") {
    const Momentum s = antipode({1.0, 0.5}, 1.0);
    CHECK(s[0] == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(s[1] == doctest::Approx(-0.5 * std::exp(1.0)).epsilon(1e-15));

    SplitMix64 rng(33);
    for (int round = 0; round < 50; ++round) {
        const Momentum p = random_point(rng, 3, 1.0);
        const Momentum back = antipode(antipode(p, 2.0), 2.0);
        CHECK(max_scaled_gap(back.components(), p.components()) < 1e-14);
    }

    CHECK_THROWS_AS(antipode({710.0, 1.0}, 1.0), RangeError);
}

TEST_CASE("cocommutativity probe at the pinned pair") {
    const double gap = cocommutativity_gap({0.0, 1.0}, {1.0, 0.0}, 1.0);
    CHECK(gap == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
    CHECK(gap == doctest::Approx(0.6321205588285577).epsilon(1e-15));
}

TEST_CASE("the deformation map does not intertwine the additions") {
    const Metric g = metric_preset("minkowski4");
    DeformationParams params;
    params.kappa = 1.0;

    const Momentum p{{0.5, 0.5, 0.0, 0.0}};
    const Momentum q{{0.3, -0.3, 0.0, 0.0}};
    const double gap = coproduct_nonintertwining_gap(p, q, params, g);
    CHECK(gap == doctest::Approx(0.37810265826354111).epsilon(1e-12));

    const Momentum mapped_sum = forward(p + q, params, g);
    CHECK(mapped_sum[0] == doctest::Approx(1.0459320308391966).epsilon(1e-12));
    CHECK(mapped_sum[1] == doctest::Approx(0.1111111111111111).epsilon(1e-12));

    const Momentum sum_of_mapped = deformed_add(forward(p, params, g), forward(q, params, g), 1.0);
    CHECK(sum_of_mapped[0] == doctest::Approx(0.66782937257565544).epsilon(1e-12));
    CHECK(sum_of_mapped[1] == doctest::Approx(0.02564102564102564).epsilon(1e-12));
}
