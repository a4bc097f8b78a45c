#pragma once

#include <vector>

#include "kappa/generators.hpp"
#include "kappa/jet.hpp"
#include "kappa/metric.hpp"
#include "kappa/momentum.hpp"

namespace kappa {

enum class FieldBasis { classical, deformed };

/// A vector field on momentum space: n scalar components, each evaluable on
/// jets. Fields act on functions as directional derivatives, and the Lie
/// bracket below matches the commutator of those actions with the overall
/// factor of i stripped, so real arithmetic suffices throughout.
class VectorField {
public:
    VectorField(Generator gen, FieldBasis basis, int dim, std::vector<JetFn> components);

    int dim() const { return dim_; }
    const Generator& generator() const { return gen_; }
    FieldBasis basis() const { return basis_; }

    /// Component values at a point.
    std::vector<double> operator()(const Momentum& p) const;
    /// Order-2 jets of every component at a point (coordinate-seeded).
    std::vector<Jet> jets(const Momentum& p) const;
    std::vector<Jet> jets(std::span<const Jet> seeds) const;

private:
    Generator gen_;
    FieldBasis basis_;
    int dim_;
    std::vector<JetFn> comps_;
};

/// The undeformed realization: rotations/boosts are the linear fields
/// X_rho = delta^nu_rho p^mu - delta^mu_rho p^nu (indices raised with g),
/// the dilatation is X_rho = p_rho. Defined for every symmetric invertible
/// metric.
VectorField classical_field(const Generator& gen, const Metric& g);

/// The deformed realization at scale kappa. Rotations and boosts exist for
/// every metric; the deformed dilatation requires g00 = 0 and otherwise
/// throws WeylNullTimeError. kappa must be positive.
VectorField deformed_field(const Generator& gen, const Metric& g, double kappa);

/// Lie bracket [X, Y]_rho = X^sigma d_sigma Y_rho - Y^sigma d_sigma X_rho at
/// a point, from first-order jet data.
std::vector<double> lie_bracket(const VectorField& x, const VectorField& y, const Momentum& at);
std::vector<double> lie_bracket_from_jets(const std::vector<Jet>& xj, const std::vector<Jet>& yj);

/// Max-norm of [[A,B],C] + [[B,C],A] + [[C,A],B] at a point. Each inner
/// bracket is carried as a first-order jet assembled from the order-2 jets
/// of the fields, so the outer bracket is exact to rounding.
///
/// drop_first_hessian is a deliberate fault for self-testing the check: it
/// zeroes the second derivatives of the first field inside [A,B] while the
/// [C,A] term keeps them. The sum is insensitive to replacing every Hessian
/// by any other symmetric matrix (those terms cancel pairwise by symmetry),
/// so only a lopsided truncation like this one can demonstrate that the
/// residual actually consumes second-order data. With it the residual jumps
/// to the size of the dropped terms at generic points.
double jacobi_residual(const VectorField& a, const VectorField& b, const VectorField& c, const Momentum& at,
                       bool drop_first_hessian = false);
double jacobi_residual_from_jets(const std::vector<Jet>& aj, const std::vector<Jet>& bj, const std::vector<Jet>& cj,
                                 bool drop_first_hessian = false);

}  // namespace kappa
