#pragma once

#include <vector>

#include "symmon/rational.hpp"

namespace symmon {

using QVec = std::vector<Rational>;

// Streaming exact row reduction. Rows are inserted in a fixed order and
// reduced against the pivots found so far; the pivot of a reduced row is its
// first nonzero column. Rows are kept integer and content-normalized
// (primitive, positive leading entry), so the elimination is fraction-free.
class Echelon {
public:
    explicit Echelon(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }

    // Reduces r against the current pivots; keeps it iff nonzero.
    // Returns true when the row added a new pivot.
    bool insert(QVec row);

    // Reduced residual of a vector against the current pivot rows.
    QVec reduce(QVec v) const;

    bool in_row_space(const QVec& v) const;

    // Full reduced row echelon form over Q (pivot entries 1, zeros above).
    // Rows come out sorted by pivot column.
    std::vector<QVec> rref() const;

    std::vector<std::size_t> pivot_columns() const;

    // Basis of the nullspace of the inserted rows, one vector per free
    // column in ascending column order. Vectors are primitive integer with
    // positive entry at their free column.
    std::vector<QVec> nullspace_basis() const;

private:
    struct Row {
        std::size_t pivot;
        std::vector<BigInt> v;
    };

    void normalize(std::vector<BigInt>& v) const;

    std::size_t cols_;
    std::vector<Row> rows_; // sorted by pivot column
};

// Rank of a list of vectors (exact).
std::size_t rank_of(const std::vector<QVec>& vectors, std::size_t cols);

// Solves A c = rhs exactly where A is given by columns. Returns the
// coefficient vector when the system is consistent; nullopt otherwise.
// When the columns are linearly independent the solution is unique.
std::optional<QVec> solve_columns(const std::vector<QVec>& columns,
                                  const QVec& rhs, std::size_t rows);

// Primitive integer form of a rational vector: multiplies by the lcm of
// denominators, divides by the gcd, sign fixed so the first nonzero entry
// is positive. Zero vectors are returned unchanged.
QVec primitive_normalize(QVec v);

} // namespace symmon
