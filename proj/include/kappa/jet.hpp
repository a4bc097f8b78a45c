#pragma once

#include <functional>
#include <span>
#include <vector>

#include "kappa/momentum.hpp"

namespace kappa {

/// Order-2 truncated jet: a value, a gradient and a symmetric Hessian with
/// respect to the n momentum components at a fixed base point. Arithmetic
/// follows the exact truncated Leibniz and chain rules, so first and second
/// derivatives of any composed expression come out exact to rounding - which
/// is what makes Lie brackets (first order) and Jacobi identities (second
/// order) checkable without symbolic algebra or finite-difference noise.
///
/// The Hessian is stored as the packed lower triangle, index (i >= j) at
/// i*(i+1)/2 + j.
class Jet {
public:
    Jet() = default;

    static Jet constant(int dim, double value);
    static Jet variable(int dim, int index, double value);

    int dim() const { return n_; }
    double value() const { return v_; }
    double grad(int mu) const { return g_[static_cast<size_t>(mu)]; }
    double hess(int mu, int nu) const;

    std::span<const double> grad() const { return g_; }
    std::span<const double> hess_packed() const { return h_; }

    Jet operator-() const;

    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator/(const Jet& a, const Jet& b);

    friend Jet operator+(const Jet& a, double s);
    friend Jet operator+(double s, const Jet& a);
    friend Jet operator-(const Jet& a, double s);
    friend Jet operator-(double s, const Jet& a);
    friend Jet operator*(const Jet& a, double s);
    friend Jet operator*(double s, const Jet& a);
    friend Jet operator/(const Jet& a, double s);
    friend Jet operator/(double s, const Jet& a);

    /// Univariate chain rule: maps this jet u through a function phi given
    /// phi(u), phi'(u), phi''(u) at u.value().
    Jet compose(double phi, double dphi, double ddphi) const;

private:
    Jet(int n, double v) : n_(n), v_(v), g_(static_cast<size_t>(n), 0.0),
                           h_(static_cast<size_t>(n) * (static_cast<size_t>(n) + 1) / 2, 0.0) {}

    int n_ = 0;
    double v_ = 0.0;
    std::vector<double> g_;
    std::vector<double> h_;
};

Jet exp(const Jet& u);
Jet log(const Jet& u);   // DomainError if u.value() <= 0
Jet sqrt(const Jet& u);  // DomainError if u.value() <= 0
Jet sinh(const Jet& u);

/// Coordinate jets seeded at p: entry mu has value p_mu and unit gradient in
/// slot mu. Feeding these through an expression yields the expression's jet.
std::vector<Jet> seed_point(const Momentum& p);

/// One scalar component of a field or map, evaluated on jets so the caller
/// picks the derivative order by seeding.
using JetFn = std::function<Jet(std::span<const Jet>)>;
/// A map R^n -> R^n on jets (all components at once).
using JetMap = std::function<std::vector<Jet>(std::span<const Jet>)>;

/// Jet of f at base (value, gradient, Hessian in one evaluation).
Jet jet_eval(const JetFn& f, const Momentum& base);

/// Jacobian of map at base: entry [rho][sigma] = d out_rho / d in_sigma.
std::vector<std::vector<double>> jacobian(const JetMap& map, const Momentum& base);

}  // namespace kappa
