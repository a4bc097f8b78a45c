#pragma once

#include <span>
#include <vector>

#include "kappa/config.hpp"
#include "kappa/report.hpp"

namespace kappa {

struct SampleSet {
    std::vector<Momentum> points;
    long attempted = 0;
};

/// Draws `count` momenta uniform in the centered box of half-width
/// cfg.momentum_box, rejecting points where the deformation map is
/// undefined. Deterministic given the seed. Throws SamplingError if fewer
/// than `count` points survive 100x oversampling (acceptance below 1%).
SampleSet sample_momenta(const SuiteConfig& cfg, const Metric& g,
                         const DeformationParams& params, int count);

/// Runs every configured suite and aggregates the verdict. Per-point work
/// is distributed over KAPPA_VERIFY_THREADS workers; the reduction is
/// sequential, so the report is identical for any thread count.
VerificationReport run_suites(const SuiteConfig& cfg);

}  // namespace kappa
