#include "symmon/poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace symmon {

std::string Monomial::str() const {
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const char* base, int i, int e) {
        if (e == 0) return;
        if (!first) out << "*";
        first = false;
        out << base << "_" << (i + 1);
        if (e > 1) out << "^" << e;
    };
    for (int i = 0; i < m_; ++i) emit("z", i, z(i));
    for (int i = 0; i < m_; ++i) emit("x", i, x(i));
    for (int i = 0; i < m_; ++i) emit("y", i, y(i));
    if (first) out << "1";
    return out.str();
}

Polynomial Polynomial::constant(int m, const Rational& c) {
    Polynomial p(m);
    p.add_term(Monomial(m), c);
    return p;
}

Polynomial Polynomial::monomial(const Monomial& mono, const Rational& c) {
    Polynomial p(mono.m());
    p.add_term(mono, c);
    return p;
}

Polynomial Polynomial::variable(int m, char kind, int i) {
    if (i < 0 || i >= m)
        throw DimensionMismatch("Polynomial::variable: index out of range");
    Monomial mono(m);
    switch (kind) {
        case 'z': mono.z(i) = 1; break;
        case 'x': mono.x(i) = 1; break;
        case 'y': mono.y(i) = 1; break;
        default: throw std::invalid_argument("Polynomial::variable: bad kind");
    }
    return monomial(mono, 1);
}

void Polynomial::add_term(const Monomial& mono, const Rational& c) {
    if (c.is_zero()) return;
    if (mono.m() != m_) throw DimensionMismatch("Polynomial::add_term: mixed dimensions");
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(m_);
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_m(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_m(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_m(b);
    Polynomial r(a.m_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            std::vector<int> e = ma.exps();
            const std::vector<int>& f = mb.exps();
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += f[i];
            r.add_term(Monomial(a.m_, std::move(e)), ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(m_);
    if (c.is_zero()) return r;
    for (const auto& [mono, coeff] : terms_) r.terms_.emplace(mono, coeff * c);
    return r;
}

std::map<TriDegree, Polynomial> Polynomial::tri_components() const {
    std::map<TriDegree, Polynomial> out;
    for (const auto& [mono, c] : terms_) {
        TriDegree d = mono.tri_degree();
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, Polynomial(m_)).first;
        it->second.add_term(mono, c);
    }
    return out;
}

std::optional<TriDegree> Polynomial::homogeneous_degree() const {
    std::optional<TriDegree> d;
    for (const auto& [mono, c] : terms_) {
        (void)c;
        TriDegree md = mono.tri_degree();
        if (!d) d = md;
        else if (*d != md) return std::nullopt;
    }
    return d;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != 3 * static_cast<std::size_t>(m_))
        throw DimensionMismatch("Polynomial::evaluate: point length != 3m");
    Rational total(0);
    for (const auto& [mono, c] : terms_) {
        Rational v = c;
        const auto& e = mono.exps();
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) v *= point[i];
        total += v;
    }
    return total;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        Rational abs = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        bool is_const = mono.total_degree() == 0;
        if (abs == Rational(1) && !is_const) out << mono.str();
        else if (is_const) out << abs.str();
        else out << abs.str() << "*" << mono.str();
    }
    return out.str();
}

namespace {

// Compositions of degree d into m parts, descending lexicographic.
void enumerate_parts(int m, int d, std::vector<int>& cur,
                     const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(cur.size()) == m - 1) {
        cur.push_back(d);
        emit(cur);
        cur.pop_back();
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur.push_back(e);
        enumerate_parts(m, d - e, cur, emit);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> all_parts(int m, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    enumerate_parts(m, d, cur, [&](const std::vector<int>& v) { out.push_back(v); });
    return out;
}

} // namespace

std::vector<Monomial> component_basis(int m, const TriDegree& d) {
    if (m < 1) throw DimensionMismatch("component_basis: m must be >= 1");
    std::vector<Monomial> out;
    if (!d.valid()) return out;
    auto zs = all_parts(m, d.a);
    auto xs = all_parts(m, d.b);
    auto ys = all_parts(m, d.c);
    out.reserve(zs.size() * xs.size() * ys.size());
    for (const auto& ze : zs)
        for (const auto& xe : xs)
            for (const auto& ye : ys) {
                std::vector<int> e;
                e.reserve(3 * static_cast<std::size_t>(m));
                e.insert(e.end(), ze.begin(), ze.end());
                e.insert(e.end(), xe.begin(), xe.end());
                e.insert(e.end(), ye.begin(), ye.end());
                out.emplace_back(m, std::move(e));
            }
    return out;
}

BigInt component_dimension(int m, const TriDegree& d) {
    if (!d.valid()) return 0;
    return binomial(d.a + m - 1, d.a) * binomial(d.b + m - 1, d.b) *
           binomial(d.c + m - 1, d.c);
}

} // namespace symmon
