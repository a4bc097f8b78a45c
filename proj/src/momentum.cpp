#include "kappa/momentum.hpp"

#include <cstdio>

#include "kappa/errors.hpp"

namespace kappa {

std::string Momentum::str() const {
    std::string out = "(";
    char buf[40];
    for (int mu = 0; mu < dim(); ++mu) {
        std::snprintf(buf, sizeof buf, "%.17g", (*this)[mu]);
        if (mu) out += ", ";
        out += buf;
    }
    out += ")";
    return out;
}

Momentum operator+(const Momentum& a, const Momentum& b) {
    if (a.dim() != b.dim()) throw DimensionError("momentum sum: dimension mismatch");
    Momentum out = a;
    for (int mu = 0; mu < a.dim(); ++mu) out[mu] += b[mu];
    return out;
}

}  // namespace kappa
