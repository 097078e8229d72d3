#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symmon/rational.hpp"

namespace symmon {

// Total degrees in (z, x, y).
struct TriDegree {
    int a = 0; // z
    int b = 0; // x
    int c = 0; // y

    int total() const { return a + b + c; }
    bool valid() const { return a >= 0 && b >= 0 && c >= 0; }
    bool dominant() const { return a >= b && b >= c && c >= 0; }

    friend bool operator==(const TriDegree&, const TriDegree&) = default;
    friend auto operator<=>(const TriDegree&, const TriDegree&) = default;

    std::string str() const {
        return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
               std::to_string(c) + ")";
    }
};

// Exponent vector over the 3m variables, stored as [z_1..z_m, x_1..x_m, y_1..y_m].
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int m) : m_(m), exps_(3 * static_cast<std::size_t>(m), 0) {}
    Monomial(int m, std::vector<int> exps) : m_(m), exps_(std::move(exps)) {
        if (exps_.size() != 3 * static_cast<std::size_t>(m))
            throw DimensionMismatch("Monomial: exponent vector length != 3m");
    }

    int m() const { return m_; }

    int z(int i) const { return exps_[static_cast<std::size_t>(i)]; }
    int x(int i) const { return exps_[static_cast<std::size_t>(m_ + i)]; }
    int y(int i) const { return exps_[static_cast<std::size_t>(2 * m_ + i)]; }
    int& z(int i) { return exps_[static_cast<std::size_t>(i)]; }
    int& x(int i) { return exps_[static_cast<std::size_t>(m_ + i)]; }
    int& y(int i) { return exps_[static_cast<std::size_t>(2 * m_ + i)]; }

    const std::vector<int>& exps() const { return exps_; }

    TriDegree tri_degree() const {
        TriDegree d;
        for (int i = 0; i < m_; ++i) {
            d.a += z(i);
            d.b += x(i);
            d.c += y(i);
        }
        return d;
    }

    int total_degree() const {
        int t = 0;
        for (int e : exps_) t += e;
        return t;
    }

    // Per-index parity bit vector: (deg_k mod 2) over z_k + x_k + y_k.
    std::vector<std::uint8_t> index_parity() const {
        std::vector<std::uint8_t> p(static_cast<std::size_t>(m_), 0);
        for (int i = 0; i < m_; ++i)
            p[static_cast<std::size_t>(i)] =
                static_cast<std::uint8_t>((z(i) + x(i) + y(i)) & 1);
        return p;
    }

    friend bool operator==(const Monomial& l, const Monomial& r) {
        return l.m_ == r.m_ && l.exps_ == r.exps_;
    }

    // Canonical order: graded by (total, a, b, c) ascending, then descending
    // lexicographic on the concatenated exponent vector (z before x before y).
    friend bool operator<(const Monomial& l, const Monomial& r) {
        TriDegree ld = l.tri_degree(), rd = r.tri_degree();
        auto lk = std::make_tuple(ld.total(), ld.a, ld.b, ld.c);
        auto rk = std::make_tuple(rd.total(), rd.a, rd.b, rd.c);
        if (lk != rk) return lk < rk;
        return l.exps_ > r.exps_;
    }

    std::string str() const;

private:
    int m_ = 0;
    std::vector<int> exps_;
};

// Sparse exact polynomial in 3m variables; no zero coefficients are stored.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int m) : m_(m) {}

    static Polynomial zero(int m) { return Polynomial(m); }
    static Polynomial constant(int m, const Rational& c);
    static Polynomial monomial(const Monomial& mono, const Rational& c);
    // kind: 'z', 'x' or 'y'; i is 0-based.
    static Polynomial variable(int m, char kind, int i);

    int m() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Rational coeff(const Monomial& mono) const {
        auto it = terms_.find(mono);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& mono, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }

    // Splits into tri-homogeneous components; re-summing reproduces the input.
    std::map<TriDegree, Polynomial> tri_components() const;

    // The unique tri-degree when the polynomial is tri-homogeneous.
    std::optional<TriDegree> homogeneous_degree() const;

    // Exact evaluation with values given per variable in [z|x|y] layout.
    Rational evaluate(const std::vector<Rational>& point) const;

    std::string str() const;

private:
    void check_same_m(const Polynomial& o) const {
        if (m_ != o.m_) throw DimensionMismatch("Polynomial: mixed dimensions");
    }

    int m_ = 0;
    std::map<Monomial, Rational> terms_;
};

// All monomials of tri-degree d in the canonical (descending lexicographic)
// order. Length is C(a+m-1,a) * C(b+m-1,b) * C(c+m-1,c).
std::vector<Monomial> component_basis(int m, const TriDegree& d);

BigInt component_dimension(int m, const TriDegree& d);

} // namespace symmon
