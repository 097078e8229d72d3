#pragma once

#include <vector>

#include "symmon/catalog.hpp"

namespace symmon {

// How a vanishing denominator h + i in the projector series is handled.
//  Raise      - throw SingularWeight (the default operation contract).
//  Regularize - evaluate the residue instead: the series is multiplied by
//               the unique vanishing factor before evaluation. The result
//               is still annihilated by X and still kills the image of Y,
//               but the regularized map is no longer idempotent.
enum class SingularPolicy { Raise, Regularize };

struct ProjectionNote {
    TriDegree component;
    Rational weight;
    int series_index = 0; // the i with h + i = 0
};

struct ProjectionResult {
    Polynomial value;
    bool regularized = false;
    std::vector<ProjectionNote> notes;
};

// Extremal projector of one sl(2) triple applied to a polynomial,
// evaluated per weight component with scalar denominators:
//   pi p = sum_j ((-1)^j / j!) (prod_{i=2..j+1} (h+i))^-1 Y^j X^j p,
// truncated at the first j with X^j p = 0.
ProjectionResult extremal_project(const Sl2Triple& t, const Polynomial& p,
                                  SingularPolicy policy);

// Convenience wrapper with the Raise policy.
Polynomial extremal_apply(const Sl2Triple& t, const Polynomial& p);

// Projection onto ker(Ds, L): pi_Ds pi_L (= pi_L pi_Ds where defined).
ProjectionResult pi_so4_project(const OperatorCatalog& cat, const Polynomial& p,
                                SingularPolicy policy);
Polynomial pi_so4(const OperatorCatalog& cat, const Polynomial& p);

// A transvector generator: the raw labeled Q together with its projected
// action pi_so4 * Q, which acts as an endomorphism of ker(Ds, L).
class LabeledGenerator {
public:
    LabeledGenerator(const OperatorCatalog& cat, const LabeledQ& q)
        : cat_(&cat), q_(q) {}

    const Bigrade& label() const { return q_.label; }
    GeneratorColor color() const { return q_.color; }
    const WeylOperator& raw() const { return q_.Q; }

    // Requires p in ker(Ds, L); the result is again in ker(Ds, L).
    ProjectionResult apply(const Polynomial& p, SingularPolicy policy) const;
    Polynomial apply(const Polynomial& p) const;

private:
    const OperatorCatalog* cat_;
    LabeledQ q_;
};

} // namespace symmon
