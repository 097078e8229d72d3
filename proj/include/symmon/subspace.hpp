#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "symmon/linalg.hpp"
#include "symmon/weyl.hpp"

namespace symmon {

// Fixed coordinatization of a finite direct sum of tri-homogeneous
// components: columns are the canonical monomial bases of the components,
// components sorted ascending.
class ComponentSpace {
public:
    ComponentSpace(int m, std::vector<TriDegree> components);

    int m() const { return m_; }
    const std::vector<TriDegree>& components() const { return components_; }
    std::size_t dim() const { return monomials_.size(); }
    const std::vector<Monomial>& monomials() const { return monomials_; }

    // Index of a monomial; throws when it lies outside the space.
    std::size_t index_of(const Monomial& mono) const;
    bool contains_component(const TriDegree& d) const;

    QVec coordinates(const Polynomial& p) const;
    Polynomial from_coordinates(const QVec& v) const;

private:
    int m_;
    std::vector<TriDegree> components_;
    std::vector<Monomial> monomials_;
    std::map<Monomial, std::size_t> index_;
};

// A linear polynomial-to-polynomial map used in kernel computations.
struct LinearMap {
    std::string name;
    std::function<Polynomial(const Polynomial&)> fn;
    // True when the map preserves the per-index parity grading, which
    // allows block-diagonal elimination. All catalog operators qualify.
    bool parity_graded = true;

    static LinearMap from_weyl(std::string name, const WeylOperator& op);
};

// Exact basis of a linear subspace of a component space. The basis is
// canonical: reduced row echelon vectors, primitive integer, ordered by
// leading column.
class Subspace {
public:
    Subspace(std::shared_ptr<const ComponentSpace> space,
             std::vector<QVec> canonical_basis);

    static Subspace zero(std::shared_ptr<const ComponentSpace> space);

    const ComponentSpace& space() const { return *space_; }
    std::shared_ptr<const ComponentSpace> space_ptr() const { return space_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<QVec>& basis_vectors() const { return basis_; }
    std::vector<Polynomial> basis_polynomials() const;

    bool contains(const Polynomial& p) const;
    bool contains_vector(const QVec& v) const;

    // Mutual membership, exact.
    bool equals(const Subspace& other) const;
    bool contains_subspace(const Subspace& other) const;

    Subspace intersect(const Subspace& other) const;

private:
    std::shared_ptr<const ComponentSpace> space_;
    std::vector<QVec> basis_;
    Echelon membership_;
};

// Exact joint nullspace of the maps on the component space, computed with
// fraction-free elimination. When every map is parity-graded the
// computation is block-diagonal over index-parity classes; the resulting
// canonical basis is independent of the blocking.
Subspace joint_nullspace(const std::vector<LinearMap>& maps,
                         std::shared_ptr<const ComponentSpace> space,
                         int jobs = 1);

// Canonical subspace spanned by arbitrary polynomials inside the space.
Subspace span_of(const std::vector<Polynomial>& vectors,
                 std::shared_ptr<const ComponentSpace> space);

// Matrix blocks of a Weyl operator out of one source component: one exact
// block per target tri-degree, rows indexed by the target component basis.
struct OperatorMatrix {
    TriDegree source;
    // target degree -> dense block, rows = target basis, cols = source basis
    std::map<TriDegree, std::vector<QVec>> blocks;
};

OperatorMatrix operator_matrix(const WeylOperator& A, const TriDegree& src);

} // namespace symmon
