#include "symmon/linalg.hpp"

#include <algorithm>
#include <optional>

namespace symmon {

namespace {

BigInt vec_content(const std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const BigInt& e : v) {
        if (e == 0) continue;
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(e));
        if (g == 1) break;
    }
    return g;
}

std::vector<BigInt> to_integer_row(const QVec& row) {
    BigInt l = 1;
    for (const Rational& r : row)
        if (!r.is_zero()) l = boost::multiprecision::lcm(l, r.den());
    std::vector<BigInt> out(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i].is_zero()) continue;
        out[i] = row[i].num() * (l / row[i].den());
    }
    return out;
}

} // namespace

void Echelon::normalize(std::vector<BigInt>& v) const {
    BigInt g = vec_content(v);
    if (g == 0) return;
    int sign = 0;
    for (const BigInt& e : v) {
        if (e != 0) { sign = e > 0 ? 1 : -1; break; }
    }
    if (sign < 0) g = -g;
    if (g != 1)
        for (BigInt& e : v) e /= g;
}

bool Echelon::insert(QVec row) {
    if (row.size() != cols_) throw std::invalid_argument("Echelon::insert: bad row length");
    std::vector<BigInt> v = to_integer_row(row);
    for (const Row& p : rows_) {
        if (v[p.pivot] == 0) continue;
        const BigInt lead = p.v[p.pivot];
        const BigInt factor = v[p.pivot];
        for (std::size_t j = 0; j < cols_; ++j)
            v[j] = lead * v[j] - factor * p.v[j];
        normalize(v);
    }
    std::size_t pivot = cols_;
    for (std::size_t j = 0; j < cols_; ++j)
        if (v[j] != 0) { pivot = j; break; }
    if (pivot == cols_) return false;
    normalize(v);
    Row r{pivot, std::move(v)};
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), r,
                                [](const Row& a, const Row& b) { return a.pivot < b.pivot; });
    rows_.insert(pos, std::move(r));
    return true;
}

QVec Echelon::reduce(QVec v) const {
    if (v.size() != cols_) throw std::invalid_argument("Echelon::reduce: bad vector length");
    for (const Row& p : rows_) {
        if (v[p.pivot].is_zero()) continue;
        Rational factor = v[p.pivot] / Rational(p.v[p.pivot]);
        for (std::size_t j = p.pivot; j < cols_; ++j) {
            if (p.v[j] == 0) continue;
            v[j] -= factor * Rational(p.v[j]);
        }
    }
    return v;
}

bool Echelon::in_row_space(const QVec& v) const {
    QVec r = reduce(v);
    for (const Rational& e : r)
        if (!e.is_zero()) return false;
    return true;
}

std::vector<QVec> Echelon::rref() const {
    std::vector<QVec> rows;
    rows.reserve(rows_.size());
    for (const Row& r : rows_) {
        QVec q(cols_);
        Rational lead = Rational(r.v[r.pivot]);
        for (std::size_t j = 0; j < cols_; ++j)
            if (r.v[j] != 0) q[j] = Rational(r.v[j]) / lead;
        rows.push_back(std::move(q));
    }
    // Clear entries above each pivot, bottom-up.
    for (std::size_t i = rows.size(); i-- > 0;) {
        std::size_t p = rows_[i].pivot;
        for (std::size_t k = 0; k < i; ++k) {
            Rational f = rows[k][p];
            if (f.is_zero()) continue;
            for (std::size_t j = p; j < cols_; ++j) {
                if (rows[i][j].is_zero()) continue;
                rows[k][j] -= f * rows[i][j];
            }
        }
    }
    return rows;
}

std::vector<std::size_t> Echelon::pivot_columns() const {
    std::vector<std::size_t> out;
    out.reserve(rows_.size());
    for (const Row& r : rows_) out.push_back(r.pivot);
    return out;
}

std::vector<QVec> Echelon::nullspace_basis() const {
    std::vector<QVec> rref_rows = rref();
    std::vector<std::size_t> pivots = pivot_columns();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<QVec> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        QVec v(cols_);
        v[f] = Rational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -rref_rows[i][f];
        basis.push_back(primitive_normalize(std::move(v)));
    }
    return basis;
}

std::size_t rank_of(const std::vector<QVec>& vectors, std::size_t cols) {
    Echelon e(cols);
    for (const QVec& v : vectors) e.insert(v);
    return e.rank();
}

std::optional<QVec> solve_columns(const std::vector<QVec>& columns,
                                  const QVec& rhs, std::size_t rows) {
    const std::size_t k = columns.size();
    for (const QVec& c : columns)
        if (c.size() != rows) throw std::invalid_argument("solve_columns: bad column length");
    if (rhs.size() != rows) throw std::invalid_argument("solve_columns: bad rhs length");

    // Dense Gauss-Jordan on [A | rhs]; first-nonzero pivoting in row order.
    std::vector<QVec> M(rows, QVec(k + 1));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < rows; ++i) M[i][j] = columns[j][i];
    for (std::size_t i = 0; i < rows; ++i) M[i][k] = rhs[i];

    std::vector<std::optional<std::size_t>> pivot_row_of(k);
    std::size_t r = 0;
    for (std::size_t j = 0; j < k && r < rows; ++j) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!M[i][j].is_zero()) { sel = i; break; }
        if (sel == rows) continue;
        std::swap(M[r], M[sel]);
        Rational lead = M[r][j];
        for (std::size_t t = j; t <= k; ++t) M[r][t] /= lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][j].is_zero()) continue;
            Rational f = M[i][j];
            for (std::size_t t = j; t <= k; ++t) M[i][t] -= f * M[r][t];
        }
        pivot_row_of[j] = r;
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!M[i][k].is_zero()) return std::nullopt;

    QVec c(k, Rational(0));
    for (std::size_t j = 0; j < k; ++j)
        if (pivot_row_of[j]) c[j] = M[*pivot_row_of[j]][k];
    return c;
}

QVec primitive_normalize(QVec v) {
    std::vector<BigInt> iv = to_integer_row(v);
    BigInt g = vec_content(iv);
    if (g == 0) return v;
    int sign = 0;
    for (const BigInt& e : iv) {
        if (e != 0) { sign = e > 0 ? 1 : -1; break; }
    }
    if (sign < 0) g = -g;
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = Rational(BigInt(iv[i] / g));
    return v;
}

} // namespace symmon
