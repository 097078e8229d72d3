#include "symmon/kernels.hpp"

#include <algorithm>

namespace symmon {

std::shared_ptr<const ComponentSpace> single_component(int m, const TriDegree& d) {
    return std::make_shared<ComponentSpace>(m, std::vector<TriDegree>{d});
}

namespace {

std::vector<LinearMap> weyl_maps(const std::vector<std::pair<std::string, WeylOperator>>& ops) {
    std::vector<LinearMap> maps;
    maps.reserve(ops.size());
    for (const auto& [name, op] : ops) maps.push_back(LinearMap::from_weyl(name, op));
    return maps;
}

void certify_annihilated(const Subspace& s, const std::vector<std::pair<std::string, WeylOperator>>& ops) {
    for (const Polynomial& p : s.basis_polynomials())
        for (const auto& [name, op] : ops)
            if (!apply(op, p).is_zero())
                throw std::logic_error("kernel certification failed for " + name);
}

} // namespace

Subspace howe_harmonics(const OperatorCatalog& cat, const TriDegree& d, int jobs) {
    const int m = cat.m();
    std::vector<std::pair<std::string, WeylOperator>> ops = {
        {"lap_x", laplacian(m, 'x')},
        {"lap_y", laplacian(m, 'y')},
        {"lap_z", laplacian(m, 'z')},
        {"c(dx,dy)", contraction(m, VecSym::Dx, VecSym::Dy)},
        {"c(dy,dz)", contraction(m, VecSym::Dy, VecSym::Dz)},
        {"c(dx,dz)", contraction(m, VecSym::Dx, VecSym::Dz)},
    };
    return joint_nullspace(weyl_maps(ops), single_component(m, d), jobs);
}

Subspace simplicial_harmonics(const OperatorCatalog& cat, const TriDegree& d,
                              int jobs) {
    const int m = cat.m();
    // Reduced generating set: on ker(<z,dx>, <z,dy>, <x,dy>, lap_z) the other
    // five g_{-2} conditions follow, e.g. <dx,dz> = [lap_z, <z,dx>]/2 and
    // lap_x = [<dx,dz>, <z,dx>].
    std::vector<std::pair<std::string, WeylOperator>> reduced = {
        {"lap_z", laplacian(m, 'z')},
        {"c(z,dx)", contraction(m, VecSym::Z, VecSym::Dx)},
        {"c(z,dy)", contraction(m, VecSym::Z, VecSym::Dy)},
        {"c(x,dy)", contraction(m, VecSym::X, VecSym::Dy)},
    };
    Subspace s = joint_nullspace(weyl_maps(reduced), single_component(m, d), jobs);
    std::vector<std::pair<std::string, WeylOperator>> rest = {
        {"lap_x", laplacian(m, 'x')},
        {"lap_y", laplacian(m, 'y')},
        {"c(dx,dy)", contraction(m, VecSym::Dx, VecSym::Dy)},
        {"c(dy,dz)", contraction(m, VecSym::Dy, VecSym::Dz)},
        {"c(dx,dz)", contraction(m, VecSym::Dx, VecSym::Dz)},
    };
    certify_annihilated(s, rest);
    return s;
}

Subspace z_harmonics(const OperatorCatalog& cat, int k, int jobs) {
    const int m = cat.m();
    std::vector<std::pair<std::string, WeylOperator>> ops = {
        {"lap_z", laplacian(m, 'z')}};
    return joint_nullspace(weyl_maps(ops), single_component(m, TriDegree{k, 0, 0}),
                           jobs);
}

BigInt weyl_dim_so(int m, const TriDegree& weight) {
    if (!weight.dominant())
        throw std::invalid_argument("weyl_dim_so: weight must satisfy a >= b >= c >= 0");
    const int rank = m / 2;
    std::vector<int> parts = {weight.a, weight.b, weight.c};
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    if (static_cast<int>(parts.size()) > rank)
        throw std::invalid_argument("weyl_dim_so: weight has more than floor(m/2) parts");
    parts.resize(static_cast<std::size_t>(rank), 0);

    // Work with doubled entries so both parities stay integral:
    // B_n: 2*rho = (2n-1, 2n-3, ..., 1); D_n: 2*rho = (2n-2, 2n-4, ..., 0).
    const bool odd = (m % 2) != 0;
    std::vector<long> lr(rank), rr(rank);
    for (int i = 0; i < rank; ++i) {
        long two_rho = odd ? (2 * (rank - i) - 1) : (2 * (rank - i) - 2);
        rr[i] = two_rho;
        lr[i] = 2 * parts[static_cast<std::size_t>(i)] + two_rho;
    }
    Rational dim(1);
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
            dim *= Rational(BigInt((lr[i] - lr[j])) * BigInt((lr[i] + lr[j])),
                            BigInt((rr[i] - rr[j])) * BigInt((rr[i] + rr[j])));
        }
    if (odd)
        for (int i = 0; i < rank; ++i) dim *= Rational(BigInt(lr[i]), BigInt(rr[i]));
    if (dim.den() != 1)
        throw std::logic_error("weyl_dim_so: non-integral result");
    return dim.num();
}

FischerReport fischer_audit(const OperatorCatalog& cat, int max_k, int jobs) {
    const int m = cat.m();
    FischerReport rep;
    rep.m = m;
    rep.max_k = max_k;

    std::vector<Subspace> harmonics; // H_0 .. H_max_k
    harmonics.reserve(static_cast<std::size_t>(max_k) + 1);
    for (int k = 0; k <= max_k; ++k) harmonics.push_back(z_harmonics(cat, k, jobs));

    Polynomial z2 = Polynomial::zero(m);
    for (int i = 0; i < m; ++i)
        z2 += Polynomial::variable(m, 'z', i) * Polynomial::variable(m, 'z', i);

    for (int t = 0; t <= max_k; ++t) {
        FischerRow row;
        row.t = t;
        row.dim_p = component_dimension(m, TriDegree{t, 0, 0});
        row.harmonic_sum = 0;
        auto space = single_component(m, TriDegree{t, 0, 0});
        std::vector<QVec> reconstruction;
        for (int p = 0; 2 * p <= t; ++p) {
            const Subspace& h = harmonics[static_cast<std::size_t>(t - 2 * p)];
            row.harmonic_dims.push_back(BigInt(h.dim()));
            row.harmonic_sum += BigInt(h.dim());
            Polynomial factor = Polynomial::constant(m, 1);
            for (int i = 0; i < p; ++i) factor = factor * z2;
            for (const Polynomial& hp : h.basis_polynomials())
                reconstruction.push_back(space->coordinates(factor * hp));
        }
        row.rank = rank_of(reconstruction, space->dim());
        row.pass = row.dim_p == row.harmonic_sum &&
                   BigInt(static_cast<long>(row.rank)) == row.dim_p;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

KernelAuditRow kernel_characterization_audit(const OperatorCatalog& cat,
                                             const TriDegree& d, int jobs) {
    const int m = cat.m();
    KernelAuditRow row;
    row.degree = d;

    std::vector<std::pair<std::string, WeylOperator>> lhs_ops = {
        {"Ds", cat.named("Ds")},
        {"L", cat.named("L")},
    };
    for (const LabeledQ& q : cat.negative_q())
        lhs_ops.emplace_back("Q" + q.label.str(), q.Q);

    Subspace lhs = joint_nullspace(weyl_maps(lhs_ops), single_component(m, d), jobs);
    Subspace rhs = simplicial_harmonics(cat, d, jobs);

    row.lhs_dim = lhs.dim();
    row.rhs_dim = rhs.dim();
    row.equal = lhs.equals(rhs);
    row.oracle = -1;
    row.oracle_defined = false;
    if (d.dominant()) {
        int nonzero_parts = (d.a > 0) + (d.b > 0) + (d.c > 0);
        if (nonzero_parts <= m / 2) {
            row.oracle = weyl_dim_so(m, d);
            row.oracle_defined = true;
        }
    }
    return row;
}

KernelAuditReport kernel_characterization_grid(const OperatorCatalog& cat,
                                               const TriDegree& max_deg,
                                               int jobs) {
    KernelAuditReport rep;
    rep.m = cat.m();
    std::vector<TriDegree> degrees;
    for (int a = 0; a <= max_deg.a; ++a)
        for (int b = 0; b <= max_deg.b; ++b)
            for (int c = 0; c <= max_deg.c; ++c)
                degrees.push_back(TriDegree{a, b, c});
    rep.rows.resize(degrees.size());
    // Degrees computed serially; the blocked elimination inside each audit
    // already parallelizes across parity classes.
    for (std::size_t i = 0; i < degrees.size(); ++i)
        rep.rows[i] = kernel_characterization_audit(cat, degrees[i], jobs);
    return rep;
}

} // namespace symmon
