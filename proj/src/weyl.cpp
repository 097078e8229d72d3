#include "symmon/weyl.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace symmon {

WeylOperator WeylOperator::scalar(int m, const Rational& c) {
    WeylOperator op(m);
    op.add_term(Monomial(m), Monomial(m), c);
    return op;
}

WeylOperator WeylOperator::atom(int m, char kind, int i) {
    if (i < 0 || i >= m) throw DimensionMismatch("WeylOperator::atom: index out of range");
    Monomial mul(m), der(m);
    switch (kind) {
        case 'z': mul.z(i) = 1; break;
        case 'x': mul.x(i) = 1; break;
        case 'y': mul.y(i) = 1; break;
        case 'Z': der.z(i) = 1; break;
        case 'X': der.x(i) = 1; break;
        case 'Y': der.y(i) = 1; break;
        default: throw std::invalid_argument("WeylOperator::atom: bad kind");
    }
    WeylOperator op(m);
    op.add_term(mul, der, 1);
    return op;
}

WeylOperator WeylOperator::from_polynomial(const Polynomial& p) {
    WeylOperator op(p.m());
    for (const auto& [mono, c] : p.terms()) op.add_term(mono, Monomial(p.m()), c);
    return op;
}

void WeylOperator::add_term(const Monomial& mul, const Monomial& der, const Rational& c) {
    if (c.is_zero()) return;
    if (mul.m() != m_ || der.m() != m_)
        throw DimensionMismatch("WeylOperator::add_term: mixed dimensions");
    WeylKey key{mul, der};
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeylOperator WeylOperator::operator-() const {
    WeylOperator r(m_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& o) {
    if (m_ != o.m_) throw DimensionMismatch("WeylOperator: mixed dimensions");
    for (const auto& [k, c] : o.terms_) add_term(k.mul, k.der, c);
    return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& o) {
    if (m_ != o.m_) throw DimensionMismatch("WeylOperator: mixed dimensions");
    for (const auto& [k, c] : o.terms_) add_term(k.mul, k.der, -c);
    return *this;
}

WeylOperator WeylOperator::scaled(const Rational& c) const {
    WeylOperator r(m_);
    if (c.is_zero()) return r;
    for (const auto& [k, coeff] : terms_) r.terms_.emplace(k, coeff * c);
    return r;
}

std::string WeylOperator::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rational abs = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        std::ostringstream sym;
        bool any = false;
        auto emit = [&](const char* base, int i, int e) {
            if (e == 0) return;
            if (any) sym << "*";
            any = true;
            sym << base << "_" << (i + 1);
            if (e > 1) sym << "^" << e;
        };
        const int m = m_;
        for (int i = 0; i < m; ++i) emit("z", i, k.mul.z(i));
        for (int i = 0; i < m; ++i) emit("x", i, k.mul.x(i));
        for (int i = 0; i < m; ++i) emit("y", i, k.mul.y(i));
        for (int i = 0; i < m; ++i) emit("dz", i, k.der.z(i));
        for (int i = 0; i < m; ++i) emit("dx", i, k.der.x(i));
        for (int i = 0; i < m; ++i) emit("dy", i, k.der.y(i));
        if (!any) {
            out << abs.str();
        } else if (abs == Rational(1)) {
            out << sym.str();
        } else {
            out << abs.str() << "*" << sym.str();
        }
    }
    return out.str();
}

namespace {

// Enumerates the multi-index i in the reordering
//   d^dA u^mB = sum_i prod_s C(dA_s, i_s) fall(mB_s, i_s) u^(mB-i) d^(dA-i)
// restricted to slots where both exponents are positive.
void reorder_rec(const std::vector<int>& dA, const std::vector<int>& mB,
                 const std::vector<std::size_t>& slots, std::size_t pos,
                 std::vector<int>& pick, const Rational& coeff,
                 const std::function<void(const std::vector<int>&, const Rational&)>& emit) {
    if (pos == slots.size()) {
        emit(pick, coeff);
        return;
    }
    std::size_t s = slots[pos];
    int top = std::min(dA[s], mB[s]);
    for (int i = 0; i <= top; ++i) {
        pick[s] = i;
        Rational f = coeff;
        if (i > 0)
            f *= Rational(binomial(dA[s], i) * falling_factorial(mB[s], i));
        reorder_rec(dA, mB, slots, pos + 1, pick, f, emit);
    }
    pick[s] = 0;
}

} // namespace

WeylOperator compose(const WeylOperator& A, const WeylOperator& B) {
    if (A.m() != B.m()) throw DimensionMismatch("compose: mixed dimensions");
    const int m = A.m();
    WeylOperator out(m);
    for (const auto& [ka, ca] : A.terms()) {
        for (const auto& [kb, cb] : B.terms()) {
            const std::vector<int>& dA = ka.der.exps();
            const std::vector<int>& mB = kb.mul.exps();
            std::vector<std::size_t> slots;
            for (std::size_t s = 0; s < dA.size(); ++s)
                if (dA[s] > 0 && mB[s] > 0) slots.push_back(s);
            std::vector<int> pick(dA.size(), 0);
            Rational base = ca * cb;
            reorder_rec(dA, mB, slots, 0, pick, base,
                        [&](const std::vector<int>& i, const Rational& coeff) {
                            std::vector<int> mul = ka.mul.exps();
                            std::vector<int> der = kb.der.exps();
                            for (std::size_t s = 0; s < mul.size(); ++s) {
                                mul[s] += mB[s] - i[s];
                                der[s] += dA[s] - i[s];
                            }
                            out.add_term(Monomial(m, std::move(mul)),
                                         Monomial(m, std::move(der)), coeff);
                        });
        }
    }
    return out;
}

WeylOperator commutator(const WeylOperator& A, const WeylOperator& B) {
    return compose(A, B) - compose(B, A);
}

WeylOperator power(const WeylOperator& A, int n) {
    if (n < 0) throw std::invalid_argument("power: negative exponent");
    WeylOperator r = WeylOperator::identity(A.m());
    for (int i = 0; i < n; ++i) r = compose(r, A);
    return r;
}

Polynomial apply(const WeylOperator& A, const Polynomial& p) {
    if (A.m() != p.m()) throw DimensionMismatch("apply: mixed dimensions");
    const int m = A.m();
    Polynomial out(m);
    for (const auto& [k, c] : A.terms()) {
        const std::vector<int>& der = k.der.exps();
        const std::vector<int>& mul = k.mul.exps();
        for (const auto& [mono, q] : p.terms()) {
            const std::vector<int>& e = mono.exps();
            Rational coeff = c * q;
            bool dead = false;
            for (std::size_t s = 0; s < e.size() && !dead; ++s) {
                if (der[s] == 0) continue;
                if (e[s] < der[s]) { dead = true; break; }
                coeff *= Rational(falling_factorial(e[s], der[s]));
            }
            if (dead || coeff.is_zero()) continue;
            std::vector<int> r(e.size());
            for (std::size_t s = 0; s < e.size(); ++s) r[s] = e[s] - der[s] + mul[s];
            out.add_term(Monomial(m, std::move(r)), coeff);
        }
    }
    return out;
}

TriShift term_shift(const WeylKey& k) {
    TriDegree md = k.mul.tri_degree();
    TriDegree dd = k.der.tri_degree();
    return TriShift{md.a - dd.a, md.b - dd.b, md.c - dd.c};
}

std::optional<Bigrade> bigrade(const WeylOperator& A) {
    std::optional<Bigrade> out;
    for (const auto& [k, c] : A.terms()) {
        (void)c;
        TriShift s = term_shift(k);
        Bigrade g{s.db - s.dc - s.da, 2 * (s.db + s.dc)};
        if (!out) out = g;
        else if (*out != g) return std::nullopt;
    }
    return out;
}

bool preserves_index_parity(const WeylOperator& A) {
    const int m = A.m();
    for (const auto& [k, c] : A.terms()) {
        (void)c;
        for (int i = 0; i < m; ++i) {
            int shift = (k.mul.z(i) - k.der.z(i)) + (k.mul.x(i) - k.der.x(i)) +
                        (k.mul.y(i) - k.der.y(i));
            if (shift & 1) return false;
        }
    }
    return true;
}

std::optional<TriShift> tri_shift(const WeylOperator& A) {
    std::optional<TriShift> out;
    for (const auto& [k, c] : A.terms()) {
        (void)c;
        TriShift s = term_shift(k);
        if (!out) out = s;
        else if (!(*out == s)) return std::nullopt;
    }
    return out;
}

} // namespace symmon
