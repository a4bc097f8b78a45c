#pragma once

#include <span>
#include <string>
#include <vector>

#include "kappa/momentum.hpp"

namespace kappa {

/// Symmetric invertible metric on n-dimensional momentum space, stored with
/// both index positions. Input rows are symmetrized as (g + g^T)/2;
/// construction fails if the asymmetry exceeds 1e-12, if n < 2, or if the
/// matrix is numerically singular (|det| < 1e-12).
class Metric {
public:
    static Metric from_rows(const std::vector<std::vector<double>>& rows);
    static Metric diagonal(const std::vector<double>& diag);

    int dim() const { return n_; }

    /// g_{mu nu}
    double lower(int mu, int nu) const { return lo_[idx(mu, nu)]; }
    /// g^{mu nu}
    double upper(int mu, int nu) const { return up_[idx(mu, nu)]; }
    double g00() const { return lo_[0]; }

    /// Index gymnastics: p^mu = g^{mu sigma} p_sigma and back down.
    std::vector<double> raise(std::span<const double> covariant) const;
    std::vector<double> lower_index(std::span<const double> contravariant) const;

    /// Full-precision matrix rendering for error messages and reports.
    std::string str() const;

private:
    Metric(int n, std::vector<double> lo, std::vector<double> up)
        : n_(n), lo_(std::move(lo)), up_(std::move(up)) {}
    size_t idx(int mu, int nu) const { return static_cast<size_t>(mu) * static_cast<size_t>(n_) + static_cast<size_t>(nu); }

    int n_ = 0;
    std::vector<double> lo_;  // row-major g_{mu nu}
    std::vector<double> up_;  // row-major g^{mu nu}
};

/// Quadratic Casimir of the undeformed algebra: M^2 = g^{mu nu} p_mu p_nu.
double mass_squared(const Metric& g, const Momentum& p);

/// Named metrics used by the suites and the CLI:
///   minkowski4  - diag(1, -1, -1, -1)
///   lightcone2  - [[0, 1], [1, 0]]                      (g00 = 0)
///   lightcone3  - [[0, 1, 0], [1, 0, 0], [0, 0, -1]]    (g00 = 0)
///   offdiag5    - diag(1, -1, -1, -1, -1) with g_{01} = g_{10} = 0.3
Metric metric_preset(const std::string& name);
std::vector<std::string> metric_preset_names();

}  // namespace kappa
