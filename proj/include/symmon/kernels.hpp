#pragma once

#include <memory>
#include <string>
#include <vector>

#include "symmon/catalog.hpp"
#include "symmon/subspace.hpp"

namespace symmon {

std::shared_ptr<const ComponentSpace> single_component(int m, const TriDegree& d);

// P_d intersected with the kernels of the six pure second-order invariant
// operators (g_{-2}).
Subspace howe_harmonics(const OperatorCatalog& cat, const TriDegree& d, int jobs = 1);

// Howe harmonics further cut by <z,dx>, <z,dy>, <x,dy>. Computed from the
// reduced generating set {lap_z, <z,dx>, <z,dy>, <x,dy>} (the remaining five
// second-order conditions are commutators of these), then certified against
// all nine defining operators.
Subspace simplicial_harmonics(const OperatorCatalog& cat, const TriDegree& d,
                              int jobs = 1);

// Pure-z harmonics H_k as a subspace of P_(k,0,0).
Subspace z_harmonics(const OperatorCatalog& cat, int k, int jobs = 1);

// Weyl dimension formula for so(m) (both parities of m), weight padded to
// rank floor(m/2). Requires a >= b >= c >= 0 and at most rank nonzero parts.
BigInt weyl_dim_so(int m, const TriDegree& weight);

struct FischerRow {
    int t = 0;
    BigInt dim_p;             // dim P_t(R^m) in z alone
    BigInt harmonic_sum;      // sum of dim H_(t-2p)
    std::size_t rank = 0;     // rank of the concatenated |z|^(2p) h basis
    bool pass = false;
    std::vector<BigInt> harmonic_dims;
};

struct FischerReport {
    int m = 0;
    int max_k = 0;
    std::vector<FischerRow> rows;
    bool pass() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
};

// Dimension identity dim P_t = sum_p dim H_(t-2p) and exact full-rank
// reconstruction from the |z|^(2p) h products, for every t <= max_k.
FischerReport fischer_audit(const OperatorCatalog& cat, int max_k, int jobs = 1);

struct KernelAuditRow {
    TriDegree degree;
    std::size_t lhs_dim = 0;     // ker(Ds, L, rho^-) in P_d
    std::size_t rhs_dim = 0;     // simplicial harmonics
    bool equal = false;          // exact subspace equality
    BigInt oracle;               // so(m) Weyl dimension, -1 when undefined
    bool oracle_defined = false;
};

struct KernelAuditReport {
    int m = 0;
    std::vector<KernelAuditRow> rows;
    bool pass() const {
        for (const auto& r : rows)
            if (!r.equal) return false;
        return true;
    }
};

// The kernel characterization audit: ker(Ds, L, seven negative raw Q) on P_d
// must equal the simplicial harmonics, decided by exact mutual membership.
KernelAuditRow kernel_characterization_audit(const OperatorCatalog& cat,
                                             const TriDegree& d, int jobs = 1);

KernelAuditReport kernel_characterization_grid(const OperatorCatalog& cat,
                                               const TriDegree& max_deg,
                                               int jobs = 1);

} // namespace symmon
