#include "symmon/subspace.hpp"

#include <algorithm>
#include <set>

#include "symmon/parallel.hpp"

namespace symmon {

ComponentSpace::ComponentSpace(int m, std::vector<TriDegree> components)
    : m_(m), components_(std::move(components)) {
    std::sort(components_.begin(), components_.end());
    components_.erase(std::unique(components_.begin(), components_.end()),
                      components_.end());
    for (const TriDegree& d : components_) {
        if (!d.valid())
            throw std::invalid_argument("ComponentSpace: invalid tri-degree " + d.str());
        for (Monomial& mono : component_basis(m_, d))
            monomials_.push_back(std::move(mono));
    }
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_[monomials_[i]] = i;
}

std::size_t ComponentSpace::index_of(const Monomial& mono) const {
    auto it = index_.find(mono);
    if (it == index_.end())
        throw std::invalid_argument("ComponentSpace: monomial outside the space");
    return it->second;
}

bool ComponentSpace::contains_component(const TriDegree& d) const {
    return std::binary_search(components_.begin(), components_.end(), d);
}

QVec ComponentSpace::coordinates(const Polynomial& p) const {
    if (p.m() != m_) throw DimensionMismatch("ComponentSpace::coordinates: mixed m");
    QVec v(dim());
    for (const auto& [mono, c] : p.terms()) v[index_of(mono)] = c;
    return v;
}

Polynomial ComponentSpace::from_coordinates(const QVec& v) const {
    if (v.size() != dim())
        throw std::invalid_argument("ComponentSpace::from_coordinates: bad length");
    Polynomial p(m_);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) p.add_term(monomials_[i], v[i]);
    return p;
}

LinearMap LinearMap::from_weyl(std::string name, const WeylOperator& op) {
    LinearMap map;
    map.name = std::move(name);
    map.parity_graded = preserves_index_parity(op);
    map.fn = [op](const Polynomial& p) { return apply(op, p); };
    return map;
}

Subspace::Subspace(std::shared_ptr<const ComponentSpace> space,
                   std::vector<QVec> canonical_basis)
    : space_(std::move(space)),
      basis_(std::move(canonical_basis)),
      membership_(space_->dim()) {
    for (const QVec& v : basis_)
        if (!membership_.insert(v))
            throw std::invalid_argument("Subspace: dependent basis vector");
}

Subspace Subspace::zero(std::shared_ptr<const ComponentSpace> space) {
    return Subspace(std::move(space), {});
}

std::vector<Polynomial> Subspace::basis_polynomials() const {
    std::vector<Polynomial> out;
    out.reserve(basis_.size());
    for (const QVec& v : basis_) out.push_back(space_->from_coordinates(v));
    return out;
}

bool Subspace::contains(const Polynomial& p) const {
    return contains_vector(space_->coordinates(p));
}

bool Subspace::contains_vector(const QVec& v) const {
    return membership_.in_row_space(v);
}

bool Subspace::contains_subspace(const Subspace& other) const {
    for (const QVec& v : other.basis_)
        if (!contains_vector(v)) return false;
    return true;
}

bool Subspace::equals(const Subspace& other) const {
    return dim() == other.dim() && contains_subspace(other) &&
           other.contains_subspace(*this);
}

Subspace Subspace::intersect(const Subspace& other) const {
    const std::size_t da = dim(), db = other.dim();
    const std::size_t n = space_->dim();
    Echelon e(da + db);
    for (std::size_t r = 0; r < n; ++r) {
        QVec row(da + db);
        bool nonzero = false;
        for (std::size_t i = 0; i < da; ++i) {
            row[i] = basis_[i][r];
            nonzero = nonzero || !row[i].is_zero();
        }
        for (std::size_t j = 0; j < db; ++j) {
            row[da + j] = -other.basis_[j][r];
            nonzero = nonzero || !row[da + j].is_zero();
        }
        if (nonzero) e.insert(std::move(row));
    }
    std::vector<Polynomial> vectors;
    for (const QVec& k : e.nullspace_basis()) {
        QVec w(n);
        for (std::size_t i = 0; i < da; ++i) {
            if (k[i].is_zero()) continue;
            for (std::size_t r = 0; r < n; ++r) w[r] += k[i] * basis_[i][r];
        }
        vectors.push_back(space_->from_coordinates(w));
    }
    return span_of(vectors, space_);
}

namespace {

struct Block {
    std::vector<std::size_t> columns; // global column indices, ascending
};

std::vector<Block> parity_blocks(const ComponentSpace& space, bool blocked) {
    std::vector<Block> out;
    if (!blocked) {
        Block all;
        all.columns.resize(space.dim());
        for (std::size_t i = 0; i < space.dim(); ++i) all.columns[i] = i;
        out.push_back(std::move(all));
        return out;
    }
    std::map<std::vector<std::uint8_t>, Block> by_parity;
    for (std::size_t i = 0; i < space.dim(); ++i)
        by_parity[space.monomials()[i].index_parity()].columns.push_back(i);
    for (auto& [key, block] : by_parity) {
        (void)key;
        out.push_back(std::move(block));
    }
    return out;
}

// Kernel vectors (free global column, canonical vector) of one block.
std::vector<std::pair<std::size_t, QVec>> block_kernel(
    const std::vector<LinearMap>& maps, const ComponentSpace& space,
    const Block& block) {
    const std::size_t ncols = block.columns.size();
    Echelon ech(ncols);

    for (const LinearMap& map : maps) {
        std::vector<Polynomial> images;
        images.reserve(ncols);
        for (std::size_t j = 0; j < ncols; ++j) {
            Monomial mono = space.monomials()[block.columns[j]];
            images.push_back(map.fn(Polynomial::monomial(mono, Rational(1))));
        }
        std::set<Monomial> targets;
        for (const Polynomial& img : images)
            for (const auto& [mono, c] : img.terms()) {
                (void)c;
                targets.insert(mono);
            }
        std::map<Monomial, std::size_t> tindex;
        std::size_t t = 0;
        for (const Monomial& mono : targets) tindex[mono] = t++;
        std::vector<QVec> rows(targets.size(), QVec(ncols));
        for (std::size_t j = 0; j < ncols; ++j)
            for (const auto& [mono, c] : images[j].terms())
                rows[tindex[mono]][j] = c;
        for (QVec& row : rows) ech.insert(std::move(row));
    }

    std::vector<std::size_t> pivots = ech.pivot_columns();
    std::vector<QVec> local = ech.nullspace_basis();
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < ncols; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    std::vector<std::pair<std::size_t, QVec>> out;
    out.reserve(local.size());
    for (std::size_t i = 0; i < local.size(); ++i) {
        QVec global(space.dim());
        for (std::size_t j = 0; j < ncols; ++j)
            if (!local[i][j].is_zero()) global[block.columns[j]] = local[i][j];
        out.emplace_back(block.columns[free_cols[i]], std::move(global));
    }
    return out;
}

} // namespace

Subspace joint_nullspace(const std::vector<LinearMap>& maps,
                         std::shared_ptr<const ComponentSpace> space,
                         int jobs) {
    bool blocked = true;
    for (const LinearMap& map : maps) blocked = blocked && map.parity_graded;

    std::vector<Block> blocks = parity_blocks(*space, blocked);
    std::vector<std::vector<std::pair<std::size_t, QVec>>> slots(blocks.size());
    parallel_for(blocks.size(), jobs, [&](std::size_t b) {
        slots[b] = block_kernel(maps, *space, blocks[b]);
    });

    std::vector<std::pair<std::size_t, QVec>> merged;
    for (auto& s : slots)
        for (auto& kv : s) merged.push_back(std::move(kv));
    std::sort(merged.begin(), merged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<QVec> basis;
    basis.reserve(merged.size());
    for (auto& kv : merged) basis.push_back(std::move(kv.second));
    return Subspace(space, std::move(basis));
}

Subspace span_of(const std::vector<Polynomial>& vectors,
                 std::shared_ptr<const ComponentSpace> space) {
    Echelon e(space->dim());
    for (const Polynomial& p : vectors) e.insert(space->coordinates(p));
    std::vector<QVec> basis;
    for (QVec& row : e.rref()) basis.push_back(primitive_normalize(std::move(row)));
    return Subspace(space, std::move(basis));
}

OperatorMatrix operator_matrix(const WeylOperator& A, const TriDegree& src) {
    OperatorMatrix out;
    out.source = src;
    std::vector<Monomial> source_basis = component_basis(A.m(), src);
    std::map<TriDegree, std::map<Monomial, std::size_t>> target_index;
    std::vector<std::pair<std::size_t, Polynomial>> images;
    for (std::size_t j = 0; j < source_basis.size(); ++j) {
        Polynomial img = apply(A, Polynomial::monomial(source_basis[j], Rational(1)));
        for (const auto& [d, comp] : img.tri_components()) {
            (void)comp;
            if (!target_index.count(d)) {
                std::vector<Monomial> tb = component_basis(A.m(), d);
                std::map<Monomial, std::size_t> idx;
                for (std::size_t r = 0; r < tb.size(); ++r) idx[tb[r]] = r;
                target_index[d] = std::move(idx);
            }
        }
        images.emplace_back(j, std::move(img));
    }
    for (const auto& [d, idx] : target_index)
        out.blocks[d] = std::vector<QVec>(idx.size(), QVec(source_basis.size()));
    for (const auto& [j, img] : images)
        for (const auto& [mono, c] : img.terms()) {
            TriDegree d = mono.tri_degree();
            out.blocks[d][target_index[d][mono]][j] = c;
        }
    return out;
}

} // namespace symmon
