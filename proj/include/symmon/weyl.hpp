#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "symmon/poly.hpp"

namespace symmon {

// Key of a normal-ordered Weyl term: all multiplications left of all
// derivatives. Ordered so that canonical forms print deterministically.
struct WeylKey {
    Monomial mul;
    Monomial der;

    friend bool operator==(const WeylKey& l, const WeylKey& r) {
        return l.mul == r.mul && l.der == r.der;
    }
    friend bool operator<(const WeylKey& l, const WeylKey& r) {
        if (l.mul == r.mul) return l.der < r.der;
        return l.mul < r.mul;
    }
};

// A tri-degree shift (Δa, Δb, Δc) of a graded operator.
struct TriShift {
    int da = 0;
    int db = 0;
    int dc = 0;
    friend bool operator==(const TriShift&, const TriShift&) = default;
};

// Bigrade label (lambda, mu) in the 5x3 generator grid convention:
// lambda = Δb - Δc - Δa, mu = 2(Δb + Δc).
struct Bigrade {
    int lambda = 0;
    int mu = 0;
    friend bool operator==(const Bigrade&, const Bigrade&) = default;
    friend auto operator<=>(const Bigrade&, const Bigrade&) = default;
    std::string str() const {
        return "(" + std::to_string(lambda) + "," + std::to_string(mu) + ")";
    }
};

// Element of the Weyl algebra on 3m variables in canonical normal-ordered
// form. The zero operator is the empty term map; equality of operators is
// equality of canonical forms.
class WeylOperator {
public:
    WeylOperator() = default;
    explicit WeylOperator(int m) : m_(m) {}

    static WeylOperator zero(int m) { return WeylOperator(m); }
    static WeylOperator scalar(int m, const Rational& c);
    static WeylOperator identity(int m) { return scalar(m, 1); }
    // kind: 'z','x','y' for multiplications, 'Z','X','Y' for derivatives.
    static WeylOperator atom(int m, char kind, int i);
    static WeylOperator from_polynomial(const Polynomial& p);

    int m() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<WeylKey, Rational>& terms() const { return terms_; }

    void add_term(const Monomial& mul, const Monomial& der, const Rational& c);

    WeylOperator operator-() const;
    WeylOperator& operator+=(const WeylOperator& o);
    WeylOperator& operator-=(const WeylOperator& o);
    friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
    friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
    WeylOperator scaled(const Rational& c) const;

    friend bool operator==(const WeylOperator& a, const WeylOperator& b) {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    int m_ = 0;
    std::map<WeylKey, Rational> terms_;
};

// Normal-ordered product A*B via the per-variable reordering
// d^d u^a = sum_i C(d,i) a!/(a-i)! u^(a-i) d^(d-i).
WeylOperator compose(const WeylOperator& A, const WeylOperator& B);

WeylOperator commutator(const WeylOperator& A, const WeylOperator& B);

WeylOperator power(const WeylOperator& A, int n);

// Exact action on a polynomial.
Polynomial apply(const WeylOperator& A, const Polynomial& p);

// Tri-degree shift of a single normal-ordered term.
TriShift term_shift(const WeylKey& k);

// The (lambda, mu) label when every term shifts tri-degree identically in
// both functionals; nullopt for ungraded or zero operators.
std::optional<Bigrade> bigrade(const WeylOperator& A);

// True when every term shifts every per-index degree by an even amount, so
// the operator preserves the index-parity blocking of polynomial components.
bool preserves_index_parity(const WeylOperator& A);

// True when all terms share one tri-degree shift (returned via out).
std::optional<TriShift> tri_shift(const WeylOperator& A);

} // namespace symmon
