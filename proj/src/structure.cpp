#include "kappa/structure.hpp"

#include <cmath>

#include "kappa/errors.hpp"
#include "kappa/tolerance.hpp"

namespace kappa {

namespace {

// Basis position of R(i, j), i < j, in lexicographic order.
int rotation_index(int n, int i, int j) {
    int pos = 0;
    for (int a = 1; a < i; ++a) pos += n - 1 - a;
    return pos + (j - i - 1);
}

int boost_index(int n, int i) { return (n - 1) * (n - 2) / 2 + (i - 1); }

// X^{mu nu} resolved against the canonical basis: rotations are X^{ij} with
// i < j, boosts are X^{i0}; everything else is a sign flip away.
struct Resolved {
    int index = -1;   // -1: the antisymmetric combination X^{mu mu} = 0
    double sign = 0.0;
};

Resolved resolve(int n, int mu, int nu) {
    if (mu == nu) return {};
    if (mu >= 1 && nu >= 1) {
        const bool ordered = mu < nu;
        return {rotation_index(n, ordered ? mu : nu, ordered ? nu : mu), ordered ? 1.0 : -1.0};
    }
    if (nu == 0) return {boost_index(n, mu), 1.0};
    return {boost_index(n, nu), -1.0};
}

std::pair<int, int> upper_pair(const Generator& gen) {
    return gen.kind == Generator::Kind::rotation ? std::pair{gen.i, gen.j} : std::pair{gen.i, 0};
}

std::vector<VectorField> build_basis_fields(FieldBasis basis, const Metric& g, double kappa) {
    std::vector<VectorField> fields;
    for (const Generator& gen : lorentz_basis(g.dim()))
        fields.push_back(basis == FieldBasis::classical ? classical_field(gen, g) : deformed_field(gen, g, kappa));
    return fields;
}

int first_boost_position(const std::vector<VectorField>& fields) {
    for (size_t a = 0; a < fields.size(); ++a)
        if (fields[a].generator().kind == Generator::Kind::boost) return static_cast<int>(a);
    return -1;
}

}  // namespace

StructureTable::StructureTable(const Metric& g) : basis_(lorentz_basis(g.dim())), n_(g.dim()) {
    const size_t count = basis_.size();
    f_.assign(count * count * count, 0.0);
    for (int a = 0; a < static_cast<int>(count); ++a)
        for (int b = 0; b < static_cast<int>(count); ++b) {
            const auto [mu, nu] = upper_pair(basis_[static_cast<size_t>(a)]);
            const auto [al, be] = upper_pair(basis_[static_cast<size_t>(b)]);
            // [X^{mu nu}, X^{al be}] =
            //   g^{mu be} X^{nu al} - g^{nu be} X^{mu al}
            // + g^{nu al} X^{mu be} - g^{mu al} X^{nu be}
            add_term(a, b, g.upper(mu, be), nu, al);
            add_term(a, b, -g.upper(nu, be), mu, al);
            add_term(a, b, g.upper(nu, al), mu, be);
            add_term(a, b, -g.upper(mu, al), nu, be);
        }
}

void StructureTable::add_term(int a, int b, double weight, int mu, int nu) {
    if (weight == 0.0) return;
    const Resolved r = resolve(n_, mu, nu);
    if (r.index < 0) return;
    at(a, b, r.index) += weight * r.sign;
}

double& StructureTable::at(int a, int b, int c) {
    const size_t count = basis_.size();
    return f_[(static_cast<size_t>(a) * count + static_cast<size_t>(b)) * count + static_cast<size_t>(c)];
}

double StructureTable::coeff(int a, int b, int c) const {
    const size_t count = basis_.size();
    return f_[(static_cast<size_t>(a) * count + static_cast<size_t>(b)) * count + static_cast<size_t>(c)];
}

ScanResult check_closure(FieldBasis basis, const Metric& g, double kappa,
                         std::span<const Momentum> points, const ClosureOptions& opts) {
    StructureTable table(g);
    auto fields = build_basis_fields(basis, g, kappa);
    if (opts.kappa_perturbation != 0.0) {
        if (basis != FieldBasis::deformed)
            throw ConfigError("kappa perturbation only makes sense for the deformed basis");
        const int pos = first_boost_position(fields);
        fields[static_cast<size_t>(pos)] =
            deformed_field(fields[static_cast<size_t>(pos)].generator(), g, kappa * (1.0 + opts.kappa_perturbation));
    }
    const int count = static_cast<int>(fields.size());
    const int n = g.dim();

    std::vector<VectorField> dil;
    if (opts.include_dilatation)
        dil.push_back(basis == FieldBasis::classical ? classical_field(Generator::dilatation(), g)
                                                     : deformed_field(Generator::dilatation(), g, kappa));

    ScanResult result;
    std::vector<double> rhs(static_cast<size_t>(n));
    const std::vector<double> zeros(static_cast<size_t>(n), 0.0);
    for (const Momentum& p : points) {
        const auto seeds = seed_point(p);
        std::vector<std::vector<Jet>> jets;
        jets.reserve(fields.size());
        for (const auto& x : fields) jets.push_back(x.jets(seeds));

        for (int a = 0; opts.pairs && a < count; ++a)
            for (int b = 0; b < count; ++b) {
                if (a == b) continue;
                const auto lhs = lie_bracket_from_jets(jets[static_cast<size_t>(a)], jets[static_cast<size_t>(b)]);
                for (int rho = 0; rho < n; ++rho) {
                    double acc = 0.0;
                    for (int c = 0; c < count; ++c) {
                        const double w = table.coeff(a, b, c);
                        if (w != 0.0) acc += w * jets[static_cast<size_t>(c)][static_cast<size_t>(rho)].value();
                    }
                    rhs[static_cast<size_t>(rho)] = acc;
                }
                const double res = max_scaled_gap(lhs, rhs);
                ++result.evaluations;
                if (res > result.max_residual) {
                    result.max_residual = res;
                    result.worst_point = p;
                    result.worst_label = "[" + fields[static_cast<size_t>(a)].generator().name() + "," +
                                         fields[static_cast<size_t>(b)].generator().name() + "]";
                }
            }

        if (!dil.empty()) {
            const auto dj = dil.front().jets(seeds);
            for (int a = 0; a < count; ++a) {
                const auto lhs = lie_bracket_from_jets(dj, jets[static_cast<size_t>(a)]);
                const double res = max_scaled_gap(lhs, zeros);
                ++result.evaluations;
                if (res > result.max_residual) {
                    result.max_residual = res;
                    result.worst_point = p;
                    result.worst_label = "[D," + fields[static_cast<size_t>(a)].generator().name() + "]";
                }
            }
        }
    }
    return result;
}

ScanResult check_jacobi(FieldBasis basis, const Metric& g, double kappa,
                        std::span<const Momentum> points, bool include_dilatation, bool drop_hessian) {
    auto fields = build_basis_fields(basis, g, kappa);
    if (include_dilatation)
        fields.push_back(basis == FieldBasis::classical ? classical_field(Generator::dilatation(), g)
                                                        : deformed_field(Generator::dilatation(), g, kappa));
    const int count = static_cast<int>(fields.size());
    const int fault_pos = drop_hessian ? first_boost_position(fields) : -1;

    ScanResult result;
    for (const Momentum& p : points) {
        const auto seeds = seed_point(p);
        std::vector<std::vector<Jet>> jets;
        jets.reserve(fields.size());
        for (const auto& x : fields) jets.push_back(x.jets(seeds));

        for (int a = 0; a < count; ++a)
            for (int b = a + 1; b < count; ++b)
                for (int c = b + 1; c < count; ++c) {
                    // The residual is invariant under cyclic rotation, so a
                    // faulted triple can always present the faulted field in
                    // the slot whose second derivatives are dropped.
                    int ra = a, rb = b, rc = c;
                    if (fault_pos == b) { ra = b; rb = c; rc = a; }
                    else if (fault_pos == c) { ra = c; rb = a; rc = b; }
                    const double res = jacobi_residual_from_jets(jets[static_cast<size_t>(ra)],
                                                                 jets[static_cast<size_t>(rb)],
                                                                 jets[static_cast<size_t>(rc)],
                                                                 fault_pos == ra);
                    ++result.evaluations;
                    if (res > result.max_residual) {
                        result.max_residual = res;
                        result.worst_point = p;
                        result.worst_label = "(" + fields[static_cast<size_t>(a)].generator().name() + "," +
                                             fields[static_cast<size_t>(b)].generator().name() + "," +
                                             fields[static_cast<size_t>(c)].generator().name() + ")";
                    }
                }
    }
    return result;
}

}  // namespace kappa
