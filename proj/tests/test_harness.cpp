#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <string>

#include "kappa/errors.hpp"
#include "kappa/report.hpp"
#include "kappa/rng.hpp"
#include "kappa/suites.hpp"

using namespace kappa;

namespace {

const SuiteResult& suite_named(const VerificationReport& report, const std::string& name) {
    for (const SuiteResult& s : report.suites)
        if (s.name == name) return s;
    throw std::logic_error("suite not in report: " + name);
}

const CheckResult& check_named(const SuiteResult& suite, const std::string& name) {
    for (const CheckResult& c : suite.checks)
        if (c.name == name) return c;
    throw std::logic_error("check not in suite: " + name);
}

SuiteConfig small_config(const std::string& preset, int samples) {
    SuiteConfig cfg;
    cfg.metric.preset = preset;
    cfg.samples = samples;
    return cfg;
}

}  // namespace

TEST_CASE("seeded generator reproduces its pinned stream") {
    SplitMix64 a(42);
    CHECK(a.next_u64() == 0xbdd732262feb6e95ULL);
    CHECK(a.next_u64() == 0x28efe333b266f103ULL);
    CHECK(a.next_u64() == 0x47526757130f9f52ULL);
    CHECK(a.next_u64() == 0x581ce1ff0e4ae394ULL);
    CHECK(a.next_u64() == 0x09bc585a244823f2ULL);

    SplitMix64 b(42);
    CHECK(b.next_double() == doctest::Approx(0.7415648787718233).epsilon(1e-16));
    CHECK(b.next_double() == doctest::Approx(0.1599103928769201).epsilon(1e-16));
    CHECK(b.next_double() == doctest::Approx(0.27860113025513866).epsilon(1e-16));
    CHECK(b.next_double() == doctest::Approx(0.34419071652363753).epsilon(1e-16));
    CHECK(b.next_double() == doctest::Approx(0.03803016854024621).epsilon(1e-16));

    SplitMix64 c(42);
    for (int i = 0; i < 1000; ++i) {
        const double u = c.next_uniform(-2.5, 0.5);
        CHECK(u >= -2.5);
        CHECK(u < 0.5);
    }
}

TEST_CASE("rejection sampling is deterministic and stays in the map domain") {
    const SuiteConfig cfg = small_config("minkowski4", 50);
    const Metric g = cfg.metric.build();
    DeformationParams params;
    params.kappa = cfg.kappa;
    params.family = cfg.c_family;

    const SampleSet first = sample_momenta(cfg, g, params, 50);
    const SampleSet second = sample_momenta(cfg, g, params, 50);
    CHECK(first.points.size() == 50);
    CHECK(first.attempted >= 50);
    CHECK(first.points == second.points);
    CHECK(first.attempted == second.attempted);
    for (const Momentum& p : first.points) CHECK(map_witness(p, params, g).defined);

    SuiteConfig other = cfg;
    other.seed = 7;
    const SampleSet third = sample_momenta(other, g, params, 50);
    CHECK(third.points != first.points);
}

TEST_CASE("sampling gives up loudly when the domain is a sliver of the box") {
    // Positive-definite metric: the discriminant needs M^2 <= kappa^2, which
    // confines admissible points to a radius-kappa disk inside the unit box.
    SuiteConfig cfg;
    cfg.metric.rows = {{1.0, 0.0}, {0.0, 1.0}};
    cfg.kappa = 1e-6;
    const Metric g = cfg.metric.build();
    DeformationParams params;
    params.kappa = cfg.kappa;
    CHECK_THROWS_AS(sample_momenta(cfg, g, params, 10), SamplingError);
}

TEST_CASE("the default run passes every suite and skips weyl off the null-time cone") {
    const VerificationReport report = run_suites(small_config("minkowski4", 40));
    CHECK(report.pass);
    CHECK(report.suites.size() == 7);
    for (const SuiteResult& s : report.suites) {
        CHECK(s.pass);
        CHECK(s.name != "weyl");
        CHECK(s.samples_accepted > 0);
    }
    const SuiteResult& closure = suite_named(report, "closure");
    CHECK(check_named(closure, "lorentz_pairs_deformed").pass);
    CHECK(check_named(closure, "kappa_perturbation_detected").pass);
    CHECK(check_named(suite_named(report, "ode"), "profile_conditions").pass);
    CHECK(check_named(suite_named(report, "coproduct"), "map_noncompatibility_witness").pass);
    CHECK(check_named(suite_named(report, "limit"), "map_identity").pass);
}

TEST_CASE("a null-time metric brings in the weyl suite and the dilatation rows") {
    const VerificationReport report = run_suites(small_config("lightcone2", 40));
    CHECK(report.pass);
    CHECK(report.suites.size() == 8);
    const SuiteResult& closure = suite_named(report, "closure");
    CHECK(check_named(closure, "dilatation_commutes_deformed").pass);
    const SuiteResult& inter = suite_named(report, "intertwine");
    CHECK(check_named(inter, "dilatation").pass);
    const CheckResult& control = check_named(inter, "dilatation_family_control");
    CHECK(control.pass);
    CHECK(control.value >= 0.9);
    const SuiteResult& weyl = suite_named(report, "weyl");
    CHECK(check_named(weyl, "matches_general_map").pass);
}

TEST_CASE("the serialized report is byte-identical across runs and thread counts") {
    SuiteConfig cfg = small_config("minkowski4", 25);
    cfg.suites = {Suite::closure, Suite::coproduct};

    const std::string once = report_to_json(run_suites(cfg));
    const std::string twice = report_to_json(run_suites(cfg));
    CHECK(once == twice);
    CHECK(once.substr(0, 20) == "{\"schema_version\":1,");

    setenv("KAPPA_VERIFY_THREADS", "4", 1);
    const std::string threaded = report_to_json(run_suites(cfg));
    unsetenv("KAPPA_VERIFY_THREADS");
    CHECK(threaded == once);
}

TEST_CASE("an injected kappa skew cannot produce a green report") {
    SuiteConfig cfg = small_config("minkowski4", 30);
    cfg.suites = {Suite::closure};
    cfg.fault = FaultInjection::perturb_kappa;
    const VerificationReport report = run_suites(cfg);
    CHECK_FALSE(report.pass);
    const SuiteResult& closure = suite_named(report, "closure");
    CHECK_FALSE(closure.pass);
    CHECK_FALSE(check_named(closure, "lorentz_pairs_deformed").pass);
    CHECK(check_named(closure, "lorentz_pairs_classical").pass);
}

TEST_CASE("dropping second derivatives cannot produce a green report") {
    SuiteConfig cfg = small_config("minkowski4", 30);
    cfg.suites = {Suite::closure};
    cfg.fault = FaultInjection::drop_hessian;
    const VerificationReport report = run_suites(cfg);
    CHECK_FALSE(report.pass);
    const SuiteResult& closure = suite_named(report, "closure");
    CHECK_FALSE(check_named(closure, "jacobi_deformed").pass);
    CHECK(check_named(closure, "jacobi_classical").pass);
}

TEST_CASE("config documents round-trip every recognized field") {
    const SuiteConfig cfg = config_from_json_text(R"({
        "metric": "offdiag5",
        "kappa": 2.5,
        "c_family": {"kind": "affine", "lambda": 0.5},
        "tolerance": 1e-8,
        "samples": 77,
        "seed": 9,
        "momentum_box": 0.75,
        "suites": ["closure", "ode", "closure"],
        "fault": "perturb-kappa"
    })");
    CHECK(cfg.metric.preset == "offdiag5");
    CHECK(cfg.kappa == 2.5);
    CHECK(cfg.c_family.kind == CFamily::Kind::affine);
    CHECK(cfg.c_family.value == 0.5);
    CHECK(cfg.tolerance == 1e-8);
    CHECK(cfg.samples == 77);
    CHECK(cfg.seed == 9);
    CHECK(cfg.momentum_box == 0.75);
    CHECK(cfg.suites == std::vector<Suite>{Suite::closure, Suite::ode});
    CHECK(cfg.fault == FaultInjection::perturb_kappa);

    const SuiteConfig rows = config_from_json_text(R"({"metric": {"n": 2, "rows": [[0, 1], [1, 0]]}})");
    CHECK(rows.metric.build().dim() == 2);
    CHECK(rows.metric.build().g00() == 0.0);

    const SuiteConfig constant = config_from_json_text(R"({"c_family": {"kind": "constant", "c": 2}})");
    CHECK(constant.c_family.kind == CFamily::Kind::constant);
    CHECK(constant.c_family.value == 2.0);

    const SuiteConfig named = config_from_json_text(R"({"c_family": "kappa"})");
    CHECK(named.c_family.kind == CFamily::Kind::kappa);
}

TEST_CASE("config documents with mistakes are rejected, not repaired") {
    CHECK_THROWS_AS(config_from_json_text("not json"), ConfigError);
    CHECK_THROWS_AS(config_from_json_text("[1, 2]"), ConfigError);
    CHECK_THROWS_AS(config_from_json_text(R"({"bogus": 1})"), ConfigError);
    CHECK_THROWS_AS(config_from_json_text(R"({"suites": ["nope"]})"), ConfigError);
    CHECK_THROWS_AS(config_from_json_text(R"({"suites": []})"), ConfigError);
    CHECK_THROWS_AS(config_from_json_text(R"({"kappa": -1})"), ConfigError);
    CHECK_THROWS_AS(config_from_json_text(R"({"samples": 0})"), ConfigError);
    CHECK_THROWS_AS(config_from_json_text(R"({"seed": -4})"), ConfigError);
    CHECK_THROWS_AS(config_from_json_text(R"({"c_family": {"kind": "constant", "c": -1}})"), ConfigError);
    CHECK_THROWS_AS(config_from_json_text(R"({"metric": {"rows": [[1, 1], [1, 1]]}})"), ConfigError);
    CHECK_THROWS_AS(config_from_json_text(R"({"metric": "no-such-preset"})"), ConfigError);
    // weyl needs a null-time metric and a mass-independent C
    CHECK_THROWS_AS(config_from_json_text(R"({"metric": "minkowski4", "suites": ["weyl"]})"), ConfigError);
    CHECK_THROWS_AS(config_from_json_text(
                        R"({"metric": "lightcone2", "suites": ["weyl"],
                            "c_family": {"kind": "affine", "lambda": 0.5}})"),
                    ConfigError);
}

TEST_CASE("suite selection defaults to everything the metric supports") {
    SuiteConfig mink = small_config("minkowski4", 10);
    const auto mink_suites = mink.effective_suites();
    CHECK(mink_suites.size() == 7);
    for (const Suite s : mink_suites) CHECK(s != Suite::weyl);

    SuiteConfig lc = small_config("lightcone2", 10);
    CHECK(lc.effective_suites().size() == 8);

    lc.suites = {Suite::weyl, Suite::closure};
    CHECK(lc.effective_suites() == std::vector<Suite>{Suite::weyl, Suite::closure});
}
