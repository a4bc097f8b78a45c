#pragma once

#include <string>
#include <vector>

#include "kappa/config.hpp"
#include "kappa/momentum.hpp"

namespace kappa {

/// How a check's `value` is judged:
///   residual_max  - pass iff value <= threshold (worst residual found)
///   control_floor - pass iff value >= threshold (an injected defect or a
///                   known non-identity must stay visibly nonzero)
///   fraction_floor- value is a fraction in [0, 1]; pass iff >= threshold
///   ratio_band    - value is the worst |gap-halving ratio - 2| across a
///                   kappa-doubling ladder; pass iff value <= threshold
enum class CheckKind { residual_max, control_floor, fraction_floor, ratio_band };

std::string check_kind_name(CheckKind k);

struct CheckResult {
    std::string name;
    CheckKind kind = CheckKind::residual_max;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
    long skipped = 0;        // points dropped because the map was undefined there
    Momentum worst_point;    // empty when there is no meaningful worst point
    std::string detail;      // free-form: which pair/triple/condition was worst
};

struct SuiteResult {
    std::string name;
    long samples_attempted = 0;
    long samples_accepted = 0;
    double max_residual = 0.0;  // over the residual_max checks
    Momentum worst_point;
    bool pass = true;
    std::vector<CheckResult> checks;
    double wall_ms = 0.0;  // human output only; never serialized to JSON
};

struct VerificationReport {
    SuiteConfig config;
    std::vector<SuiteResult> suites;
    bool pass = true;
    double wall_ms = 0.0;
};

/// Canonical JSON rendering: fixed key order, every number printed with
/// %.17g (so doubles survive a round trip), no timing data. Two runs with
/// the same config produce byte-identical output regardless of thread count.
std::string report_to_json(const VerificationReport& report);

/// Human-readable rendering, including wall-clock times.
std::string report_to_text(const VerificationReport& report);

}  // namespace kappa
