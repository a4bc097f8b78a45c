#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kappa/deformation.hpp"
#include "kappa/metric.hpp"

namespace kappa {

enum class Suite { closure, ode, intertwine, roundtrip, casimir, coproduct, limit, weyl };

std::string suite_name(Suite s);
std::optional<Suite> suite_from_name(const std::string& name);
std::vector<Suite> all_suites();

/// Either a named preset or an explicit matrix. build() constructs the
/// Metric (and so performs all validity checks).
struct MetricSpec {
    std::string preset = "minkowski4";
    std::vector<std::vector<double>> rows;  // non-empty overrides preset

    Metric build() const;
    std::string describe() const;

    friend bool operator==(const MetricSpec&, const MetricSpec&) = default;
};

/// Deliberate defects the harness can inject into itself, to prove a broken
/// build cannot slip through with a green report:
///   perturb_kappa - one deformed boost built with kappa off by 0.1%
///   drop_hessian  - the first boost's second derivatives truncated in one
///                   cyclic term of every Jacobi triple that contains it
enum class FaultInjection { none, perturb_kappa, drop_hessian };

std::string fault_name(FaultInjection f);
std::optional<FaultInjection> fault_from_name(const std::string& name);

/// One verification run: which metric and deformation, how hard to test.
struct SuiteConfig {
    MetricSpec metric;
    double kappa = 1.0;
    CFamily c_family;
    double tolerance = 1e-9;
    int samples = 500;
    uint64_t seed = 42;
    double momentum_box = 1.0;
    std::vector<Suite> suites;  // empty: every suite applicable to the metric
    FaultInjection fault = FaultInjection::none;

    /// Throws ConfigError on any inconsistency (bad metric, kappa <= 0,
    /// weyl suite on g00 != 0, affine family with the weyl suite, ...).
    void validate() const;

    /// The suites that will actually run: the explicit list, or every suite
    /// applicable to the metric when the list is empty.
    std::vector<Suite> effective_suites() const;
};

/// Reads a config from a JSON document. Recognized fields (all optional):
///   metric        string preset  |  {"n": 2, "rows": [[...], ...]}
///   kappa         positive number
///   c_family      "kappa" | {"kind": "constant", "c": 2.0}
///                          | {"kind": "affine", "lambda": 0.5}
///   tolerance     positive number
///   samples       positive integer
///   seed          unsigned integer
///   momentum_box  positive number
///   suites        array of suite names
///   fault         "none" | "perturb-kappa" | "drop-hessian"
/// Unknown fields are rejected so typos cannot silently disable a check.
SuiteConfig config_from_json_text(const std::string& text);
SuiteConfig config_from_file(const std::string& path);

}  // namespace kappa
