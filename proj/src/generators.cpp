#include "kappa/generators.hpp"

#include "kappa/errors.hpp"

namespace kappa {

Generator Generator::rotation(int i, int j) {
    if (i < 1 || j <= i) throw DimensionError("rotation needs spatial indices 1 <= i < j");
    return Generator{Kind::rotation, i, j};
}

Generator Generator::boost(int i) {
    if (i < 1) throw DimensionError("boost needs a spatial index i >= 1");
    return Generator{Kind::boost, i, 0};
}

std::string Generator::name() const {
    switch (kind) {
        case Kind::rotation: return "R(" + std::to_string(i) + "," + std::to_string(j) + ")";
        case Kind::boost: return "B(" + std::to_string(i) + ")";
        case Kind::dilatation: return "D";
    }
    return "?";
}

std::vector<Generator> lorentz_basis(int dim) {
    if (dim < 2) throw DimensionError("lorentz_basis needs dimension >= 2");
    std::vector<Generator> basis;
    for (int i = 1; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) basis.push_back(Generator::rotation(i, j));
    for (int i = 1; i < dim; ++i) basis.push_back(Generator::boost(i));
    return basis;
}

}  // namespace kappa
