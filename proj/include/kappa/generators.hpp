#pragma once

#include <string>
#include <vector>

namespace kappa {

/// Label of one symmetry generator. Spatial indices are 1-based: rotation
/// R(i, j) mixes the spatial directions i < j, boost B(i) mixes direction i
/// with time, D is the dilatation.
struct Generator {
    enum class Kind { rotation, boost, dilatation };

    Kind kind = Kind::dilatation;
    int i = 0;
    int j = 0;

    static Generator rotation(int i, int j);  // requires 1 <= i < j
    static Generator boost(int i);            // requires i >= 1
    static Generator dilatation() { return Generator{}; }

    bool is_lorentz() const { return kind != Kind::dilatation; }
    std::string name() const;  // "R(1,2)", "B(3)", "D"

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// The canonical ordered basis of the Lorentz sector in n dimensions:
/// rotations R(i, j) with i < j in lexicographic order, then boosts
/// B(1) ... B(n-1). Structure tables and reports index generators in this
/// order. The dilatation is deliberately not included; it never appears on
/// the right-hand side of a Lorentz bracket.
std::vector<Generator> lorentz_basis(int dim);

}  // namespace kappa
