#include "kappa/metric.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>

#include "kappa/errors.hpp"

namespace kappa {

namespace {
constexpr double kAsymmetryCutoff = 1e-12;
constexpr double kSingularCutoff = 1e-12;
}  // namespace

Metric Metric::from_rows(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n < 2) throw DimensionError("metric dimension must be at least 2");
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != n) throw DimensionError("metric rows must form a square matrix");

    Eigen::MatrixXd g(n, n);
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) {
            const double asym = std::abs(rows[static_cast<size_t>(mu)][static_cast<size_t>(nu)] -
                                         rows[static_cast<size_t>(nu)][static_cast<size_t>(mu)]);
            if (asym > kAsymmetryCutoff)
                throw NonInvertibleError("metric must be symmetric (asymmetry " + std::to_string(asym) + ")");
            g(mu, nu) = 0.5 * (rows[static_cast<size_t>(mu)][static_cast<size_t>(nu)] +
                               rows[static_cast<size_t>(nu)][static_cast<size_t>(mu)]);
        }

    Eigen::FullPivLU<Eigen::MatrixXd> lu(g);
    if (std::abs(lu.determinant()) < kSingularCutoff)
        throw NonInvertibleError("metric is singular (|det| < 1e-12)");
    Eigen::MatrixXd inv = lu.inverse();
    // The LU inverse of a symmetric matrix picks up rounding asymmetry;
    // resymmetrize so g^{mu nu} == g^{nu mu} holds exactly.
    inv = 0.5 * (inv + inv.transpose()).eval();

    std::vector<double> lo(static_cast<size_t>(n) * static_cast<size_t>(n));
    std::vector<double> up(lo.size());
    for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) {
            lo[static_cast<size_t>(mu) * static_cast<size_t>(n) + static_cast<size_t>(nu)] = g(mu, nu);
            up[static_cast<size_t>(mu) * static_cast<size_t>(n) + static_cast<size_t>(nu)] = inv(mu, nu);
        }
    return Metric(n, std::move(lo), std::move(up));
}

Metric Metric::diagonal(const std::vector<double>& diag) {
    const int n = static_cast<int>(diag.size());
    std::vector<std::vector<double>> rows(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0.0));
    for (int mu = 0; mu < n; ++mu) rows[static_cast<size_t>(mu)][static_cast<size_t>(mu)] = diag[static_cast<size_t>(mu)];
    return from_rows(rows);
}

std::vector<double> Metric::raise(std::span<const double> covariant) const {
    if (static_cast<int>(covariant.size()) != n_) throw DimensionError("raise: dimension mismatch");
    std::vector<double> out(static_cast<size_t>(n_), 0.0);
    for (int mu = 0; mu < n_; ++mu)
        for (int sigma = 0; sigma < n_; ++sigma) out[static_cast<size_t>(mu)] += upper(mu, sigma) * covariant[static_cast<size_t>(sigma)];
    return out;
}

std::vector<double> Metric::lower_index(std::span<const double> contravariant) const {
    if (static_cast<int>(contravariant.size()) != n_) throw DimensionError("lower_index: dimension mismatch");
    std::vector<double> out(static_cast<size_t>(n_), 0.0);
    for (int mu = 0; mu < n_; ++mu)
        for (int sigma = 0; sigma < n_; ++sigma) out[static_cast<size_t>(mu)] += lower(mu, sigma) * contravariant[static_cast<size_t>(sigma)];
    return out;
}

std::string Metric::str() const {
    std::string out = "[";
    char buf[40];
    for (int mu = 0; mu < n_; ++mu) {
        out += mu ? ", [" : "[";
        for (int nu = 0; nu < n_; ++nu) {
            std::snprintf(buf, sizeof buf, "%.17g", lower(mu, nu));
            if (nu) out += ", ";
            out += buf;
        }
        out += "]";
    }
    out += "]";
    return out;
}

double mass_squared(const Metric& g, const Momentum& p) {
    if (p.dim() != g.dim()) throw DimensionError("mass_squared: dimension mismatch");
    double m2 = 0.0;
    for (int mu = 0; mu < g.dim(); ++mu)
        for (int nu = 0; nu < g.dim(); ++nu) m2 += g.upper(mu, nu) * p[mu] * p[nu];
    return m2;
}

Metric metric_preset(const std::string& name) {
    if (name == "minkowski4") return Metric::diagonal({1.0, -1.0, -1.0, -1.0});
    if (name == "lightcone2") return Metric::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    if (name == "lightcone3") return Metric::from_rows({{0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, -1.0}});
    if (name == "offdiag5") {
        std::vector<std::vector<double>> rows(5, std::vector<double>(5, 0.0));
        rows[0][0] = 1.0;
        for (int i = 1; i < 5; ++i) rows[static_cast<size_t>(i)][static_cast<size_t>(i)] = -1.0;
        rows[0][1] = rows[1][0] = 0.3;
        return Metric::from_rows(rows);
    }
    throw ConfigError("unknown metric preset '" + name + "'");
}

std::vector<std::string> metric_preset_names() {
    return {"minkowski4", "lightcone2", "lightcone3", "offdiag5"};
}

}  // namespace kappa
