#include "kappa/jet.hpp"

#include <cmath>

#include "kappa/errors.hpp"

namespace kappa {

namespace {

inline size_t tri(int i, int j) {  // packed lower-triangle index, i >= j
    return static_cast<size_t>(i) * (static_cast<size_t>(i) + 1) / 2 + static_cast<size_t>(j);
}

inline void require_same_dim(const Jet& a, const Jet& b) {
    if (a.dim() != b.dim()) throw DimensionError("jet arithmetic: dimension mismatch");
}

}  // namespace

Jet Jet::constant(int dim, double value) { return Jet(dim, value); }

Jet Jet::variable(int dim, int index, double value) {
    if (index < 0 || index >= dim) throw DimensionError("jet variable index out of range");
    Jet j(dim, value);
    j.g_[static_cast<size_t>(index)] = 1.0;
    return j;
}

double Jet::hess(int mu, int nu) const {
    if (mu < nu) std::swap(mu, nu);
    return h_[tri(mu, nu)];
}

Jet Jet::operator-() const {
    Jet out = *this;
    out.v_ = -out.v_;
    for (double& x : out.g_) x = -x;
    for (double& x : out.h_) x = -x;
    return out;
}

Jet operator+(const Jet& a, const Jet& b) {
    require_same_dim(a, b);
    Jet out = a;
    out.v_ += b.v_;
    for (size_t i = 0; i < out.g_.size(); ++i) out.g_[i] += b.g_[i];
    for (size_t i = 0; i < out.h_.size(); ++i) out.h_[i] += b.h_[i];
    return out;
}

Jet operator-(const Jet& a, const Jet& b) {
    require_same_dim(a, b);
    Jet out = a;
    out.v_ -= b.v_;
    for (size_t i = 0; i < out.g_.size(); ++i) out.g_[i] -= b.g_[i];
    for (size_t i = 0; i < out.h_.size(); ++i) out.h_[i] -= b.h_[i];
    return out;
}

Jet operator*(const Jet& a, const Jet& b) {
    require_same_dim(a, b);
    Jet out = a;
    out.v_ = a.v_ * b.v_;
    for (size_t i = 0; i < out.g_.size(); ++i) out.g_[i] = a.g_[i] * b.v_ + a.v_ * b.g_[i];
    size_t k = 0;
    for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j <= i; ++j, ++k)
            out.h_[k] = a.h_[k] * b.v_ + a.v_ * b.h_[k] +
                        a.g_[static_cast<size_t>(i)] * b.g_[static_cast<size_t>(j)] +
                        a.g_[static_cast<size_t>(j)] * b.g_[static_cast<size_t>(i)];
    return out;
}

Jet Jet::compose(double phi, double dphi, double ddphi) const {
    Jet out = *this;
    out.v_ = phi;
    for (size_t i = 0; i < out.g_.size(); ++i) out.g_[i] = dphi * g_[i];
    size_t k = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j <= i; ++j, ++k)
            out.h_[k] = dphi * h_[k] + ddphi * g_[static_cast<size_t>(i)] * g_[static_cast<size_t>(j)];
    return out;
}

Jet operator/(const Jet& a, const Jet& b) {
    require_same_dim(a, b);
    if (b.value() == 0.0) throw DomainError("jet division by zero");
    const double inv = 1.0 / b.value();
    return a * b.compose(inv, -inv * inv, 2.0 * inv * inv * inv);
}

Jet operator+(const Jet& a, double s) {
    Jet out = a;
    out.v_ += s;
    return out;
}
Jet operator+(double s, const Jet& a) { return a + s; }
Jet operator-(const Jet& a, double s) { return a + (-s); }
Jet operator-(double s, const Jet& a) { return (-a) + s; }

Jet operator*(const Jet& a, double s) {
    Jet out = a;
    out.v_ *= s;
    for (double& x : out.g_) x *= s;
    for (double& x : out.h_) x *= s;
    return out;
}
Jet operator*(double s, const Jet& a) { return a * s; }
Jet operator/(const Jet& a, double s) {
    if (s == 0.0) throw DomainError("jet division by zero");
    return a * (1.0 / s);
}
Jet operator/(double s, const Jet& a) {
    if (a.value() == 0.0) throw DomainError("jet division by zero");
    const double inv = 1.0 / a.value();
    return a.compose(s * inv, -s * inv * inv, 2.0 * s * inv * inv * inv);
}

Jet exp(const Jet& u) {
    const double e = std::exp(u.value());
    return u.compose(e, e, e);
}

Jet log(const Jet& u) {
    if (u.value() <= 0.0) throw DomainError("jet log of nonpositive value");
    const double inv = 1.0 / u.value();
    return u.compose(std::log(u.value()), inv, -inv * inv);
}

Jet sqrt(const Jet& u) {
    if (u.value() <= 0.0) throw DomainError("jet sqrt of nonpositive value");
    const double r = std::sqrt(u.value());
    return u.compose(r, 0.5 / r, -0.25 / (r * u.value()));
}

Jet sinh(const Jet& u) {
    const double s = std::sinh(u.value());
    return u.compose(s, std::cosh(u.value()), s);
}

std::vector<Jet> seed_point(const Momentum& p) {
    std::vector<Jet> seeds;
    seeds.reserve(static_cast<size_t>(p.dim()));
    for (int mu = 0; mu < p.dim(); ++mu) seeds.push_back(Jet::variable(p.dim(), mu, p[mu]));
    return seeds;
}

Jet jet_eval(const JetFn& f, const Momentum& base) { return f(seed_point(base)); }

std::vector<std::vector<double>> jacobian(const JetMap& map, const Momentum& base) {
    const auto out = map(seed_point(base));
    const int n = base.dim();
    if (static_cast<int>(out.size()) != n) throw DimensionError("jacobian: map must preserve dimension");
    std::vector<std::vector<double>> jac(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0.0));
    for (int rho = 0; rho < n; ++rho)
        for (int sigma = 0; sigma < n; ++sigma) jac[static_cast<size_t>(rho)][static_cast<size_t>(sigma)] = out[static_cast<size_t>(rho)].grad(sigma);
    return jac;
}

}  // namespace kappa
