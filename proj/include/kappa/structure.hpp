#pragma once

#include <span>
#include <string>
#include <vector>

#include "kappa/metric.hpp"
#include "kappa/vector_field.hpp"

namespace kappa {

/// Structure constants f_{ab}^c of the Lorentz sector over the canonical
/// generator basis: [X_a, X_b] = f_{ab}^c X_c, with the coefficients read
/// directly off the inverse metric. Both the classical and the deformed
/// realizations must close with this same table; that the deformed one does
/// is the central claim the closure suite verifies.
class StructureTable {
public:
    explicit StructureTable(const Metric& g);

    const std::vector<Generator>& basis() const { return basis_; }
    int size() const { return static_cast<int>(basis_.size()); }
    double coeff(int a, int b, int c) const;

private:
    void add_term(int a, int b, double weight, int mu, int nu);
    double& at(int a, int b, int c);

    std::vector<Generator> basis_;
    std::vector<double> f_;
    int n_ = 0;
};

/// Worst case found while scanning an identity over sample points.
struct ScanResult {
    double max_residual = 0.0;
    Momentum worst_point;
    std::string worst_label;
    long evaluations = 0;
};

struct ClosureOptions {
    /// Check [X_a, X_b] = f_{ab}^c X_c over the ordered generator pairs.
    bool pairs = true;
    /// Also check [D, X_a] = 0 for every Lorentz generator. For the deformed
    /// basis this requires g00 = 0.
    bool include_dilatation = false;
    /// Nonzero: rebuild the first boost with kappa*(1+eps). Deformed basis
    /// only; used to show the check actually detects a wrong field.
    double kappa_perturbation = 0.0;
};

/// Scaled residual of [X_a, X_b] = f_{ab}^c X_c over every ordered pair of
/// distinct Lorentz generators at every point.
ScanResult check_closure(FieldBasis basis, const Metric& g, double kappa,
                         std::span<const Momentum> points, const ClosureOptions& opts = {});

/// Max-norm Jacobi residual over every generator triple a < b < c at every
/// point. include_dilatation adds D to the pool; drop_hessian truncates the
/// first boost's second derivatives in one cyclic term of every triple that
/// contains it (see jacobi_residual) to demonstrate detection.
ScanResult check_jacobi(FieldBasis basis, const Metric& g, double kappa,
                        std::span<const Momentum> points, bool include_dilatation = false,
                        bool drop_hessian = false);

}  // namespace kappa
