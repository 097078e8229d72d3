#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symmon/catalog.hpp"

namespace symmon {

struct CheckResult {
    std::string check;
    bool pass = false;
    // Canonical form of the nonzero residual, when there is one.
    std::optional<std::string> residual;
    // Extra structured payload (e.g. structure constants) for reports.
    std::optional<std::string> detail;
};

struct SuiteReport {
    std::string suite;
    int m = 0;
    std::vector<CheckResult> entries;

    bool pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
};

// The three sl(2) bracket identities for a triple; residuals are canonical
// operator forms of [H,X]-2X, [X,Y]-H, [H,Y]+2Y.
SuiteReport verify_sl2(const Sl2Triple& t, int m);

// Both triples of the catalog plus a deliberately perturbed negative control.
SuiteReport sl2_suite(const OperatorCatalog& cat);

// [Ds,L] = [Ds,R] = [Xs,L] = [Xs,R] = 0, plus the nonzero control [Ds,|y|^2].
SuiteReport so4_split_suite(const OperatorCatalog& cat);

// For s in {Ds, Xs, L, R, H_D, H_L} and each labeled Q: solve [s,Q] exactly
// in the span of the fifteen Q. Also checks the Cartan eigenvalue tables
// ad(H_L) Q = lambda Q and ad(H_D) Q = -mu Q, the linear independence of the
// fifteen generators, and their bigrade labels against the grid.
SuiteReport reductive_suite(const OperatorCatalog& cat);

// [Ds,G] = [Xs,G] = [E+m,G] = 0 for every sp(2m) generator G, plus the
// even/odd z-shift control per generator.
SuiteReport invariance_suite(const OperatorCatalog& cat, int jobs = 1);

// [L_ab, <u,v>] = 0 for the angular generators and every contraction.
SuiteReport so_m_invariants_suite(const OperatorCatalog& cat);

} // namespace symmon
