#include "symmon/catalog.hpp"

namespace symmon {

WeylOperator vec_atom(int m, VecSym s, int i) {
    switch (s) {
        case VecSym::Z: return WeylOperator::atom(m, 'z', i);
        case VecSym::X: return WeylOperator::atom(m, 'x', i);
        case VecSym::Y: return WeylOperator::atom(m, 'y', i);
        case VecSym::Dz: return WeylOperator::atom(m, 'Z', i);
        case VecSym::Dx: return WeylOperator::atom(m, 'X', i);
        case VecSym::Dy: return WeylOperator::atom(m, 'Y', i);
    }
    throw std::invalid_argument("vec_atom: bad symbol");
}

WeylOperator contraction(int m, VecSym u, VecSym v) {
    WeylOperator out(m);
    for (int k = 0; k < m; ++k)
        out += compose(vec_atom(m, u, k), vec_atom(m, v, k));
    return out;
}

WeylOperator euler(int m, char base) {
    switch (base) {
        case 'z': return contraction(m, VecSym::Z, VecSym::Dz);
        case 'x': return contraction(m, VecSym::X, VecSym::Dx);
        case 'y': return contraction(m, VecSym::Y, VecSym::Dy);
        default: throw std::invalid_argument("euler: bad base");
    }
}

WeylOperator laplacian(int m, char base) {
    switch (base) {
        case 'z': return contraction(m, VecSym::Dz, VecSym::Dz);
        case 'x': return contraction(m, VecSym::Dx, VecSym::Dx);
        case 'y': return contraction(m, VecSym::Dy, VecSym::Dy);
        default: throw std::invalid_argument("laplacian: bad base");
    }
}

WeylOperator norm_squared(int m, char base) {
    switch (base) {
        case 'z': return contraction(m, VecSym::Z, VecSym::Z);
        case 'x': return contraction(m, VecSym::X, VecSym::X);
        case 'y': return contraction(m, VecSym::Y, VecSym::Y);
        default: throw std::invalid_argument("norm_squared: bad base");
    }
}

OperatorCatalog::OperatorCatalog(int m) : m_(m) {
    if (m < 1) throw DimensionMismatch("OperatorCatalog: m must be >= 1");
    using S = VecSym;
    const Rational half(BigInt(1), BigInt(2));

    WeylOperator Ex = euler(m, 'x');
    WeylOperator Ey = euler(m, 'y');
    WeylOperator Ez = euler(m, 'z');
    WeylOperator Ds = contraction(m, S::Z, S::Dy) - contraction(m, S::Dx, S::Dz);
    WeylOperator Xs = contraction(m, S::Y, S::Dz) + contraction(m, S::X, S::Z);
    WeylOperator L = contraction(m, S::X, S::Dy) - laplacian(m, 'z').scaled(half);
    WeylOperator R = contraction(m, S::Y, S::Dx) + norm_squared(m, 'z').scaled(half);
    WeylOperator scriptE =
        Ey - Ex + Ez + WeylOperator::scalar(m, Rational(BigInt(m), BigInt(2)));
    WeylOperator H_D = (Ex + Ey + WeylOperator::scalar(m, m)).scaled(-2);
    WeylOperator H_L = -scriptE;

    named_["Ds"] = Ds;
    named_["Xs"] = Xs;
    named_["Ex"] = Ex;
    named_["Ey"] = Ey;
    named_["Ez"] = Ez;
    named_["E"] = Ex + Ey;
    named_["L"] = L;
    named_["R"] = R;
    named_["scriptE"] = scriptE;
    named_["H_D"] = H_D;
    named_["H_L"] = H_L;

    // The paper's sqrt(2)-rescaled pair is replaced by the rational pair
    // (2 Ds, Xs): same H, and Y^j X^j = 2^j Xs^j Ds^j matches the projector
    // series of the symmetric normalization exactly.
    ds_triple_.name = "Ds";
    ds_triple_.X = Ds.scaled(2);
    ds_triple_.Y = Xs;
    ds_triple_.H = H_D;
    ds_triple_.weight_of = [m](const TriDegree& d) {
        return Rational(-2 * (d.b + d.c + m));
    };

    l_triple_.name = "L";
    l_triple_.X = L;
    l_triple_.Y = R;
    l_triple_.H = H_L;
    l_triple_.weight_of = [m](const TriDegree& d) {
        return Rational(BigInt(2 * (d.b - d.c - d.a) - m), BigInt(2));
    };

    g_minus2_ = {laplacian(m, 'x'), laplacian(m, 'y'), laplacian(m, 'z'),
                 contraction(m, S::Dx, S::Dy), contraction(m, S::Dy, S::Dz),
                 contraction(m, S::Dx, S::Dz)};
    g_zero_ = {contraction(m, S::X, S::Dy), contraction(m, S::Y, S::Dx),
               contraction(m, S::X, S::Dz), contraction(m, S::Z, S::Dx),
               contraction(m, S::Y, S::Dz), contraction(m, S::Z, S::Dy),
               Ex, Ey, Ez};
    g_plus2_ = {norm_squared(m, 'x'), norm_squared(m, 'y'), norm_squared(m, 'z'),
                contraction(m, S::X, S::Y), contraction(m, S::Y, S::Z),
                contraction(m, S::X, S::Z)};

    auto add_q = [&](int lambda, int mu, GeneratorColor color, WeylOperator op) {
        q_.push_back(LabeledQ{Bigrade{lambda, mu}, color, std::move(op)});
    };
    const auto neg = GeneratorColor::Negative;
    const auto pos = GeneratorColor::Positive;
    add_q(-2, -4, neg, laplacian(m, 'x'));
    add_q(-2, -2, neg, contraction(m, S::Z, S::Dx));
    add_q(-2, 0, neg, contraction(m, S::Y, S::Dx) - norm_squared(m, 'z'));
    add_q(-2, 2, pos, contraction(m, S::Y, S::Z));
    add_q(-2, 4, pos, norm_squared(m, 'y'));
    add_q(0, -4, neg, contraction(m, S::Dx, S::Dy));
    add_q(0, -2, neg, contraction(m, S::Z, S::Dy) + contraction(m, S::Dz, S::Dx));
    add_q(0, 0, GeneratorColor::Cartan,
          Ex - Ey + Ez.scaled(2) + WeylOperator::scalar(m, m));
    add_q(0, 2, pos, contraction(m, S::X, S::Z) - contraction(m, S::Y, S::Dz));
    add_q(0, 4, pos, contraction(m, S::X, S::Y));
    add_q(2, -4, neg, laplacian(m, 'y'));
    add_q(2, -2, neg, contraction(m, S::Dy, S::Dz));
    add_q(2, 0, pos, contraction(m, S::X, S::Dy) + laplacian(m, 'z'));
    add_q(2, 2, pos, contraction(m, S::X, S::Dz));
    add_q(2, 4, pos, norm_squared(m, 'x'));

    for (const LabeledQ& q : q_) {
        std::string key = "Q(" + std::to_string(q.label.lambda) + "," +
                          std::to_string(q.label.mu) + ")";
        named_[key] = q.Q;
    }

    // sp(2m) realization on spinor-valued polynomials.
    auto X_jk = [&](int j, int k) {
        WeylOperator op = compose(vec_atom(m, S::X, j), vec_atom(m, S::Dx, k)) -
                          compose(vec_atom(m, S::Y, k), vec_atom(m, S::Dy, j)) -
                          compose(vec_atom(m, S::Z, k), vec_atom(m, S::Dz, j));
        if (j == k) op -= WeylOperator::scalar(m, half);
        return op;
    };
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
            sp2m_.push_back({"X_" + std::to_string(j + 1) + std::to_string(k + 1),
                             X_jk(j, k)});
    for (int j = 0; j < m; ++j) {
        for (int k = j; k < m; ++k) {
            WeylOperator Y_op(m), Z_op(m);
            if (j == k) {
                Y_op = compose(vec_atom(m, S::X, j), vec_atom(m, S::Dy, j)) -
                       compose(vec_atom(m, S::Dz, j), vec_atom(m, S::Dz, j)).scaled(half);
                Z_op = compose(vec_atom(m, S::Y, j), vec_atom(m, S::Dx, j)) +
                       compose(vec_atom(m, S::Z, j), vec_atom(m, S::Z, j)).scaled(half);
            } else {
                Y_op = compose(vec_atom(m, S::X, j), vec_atom(m, S::Dy, k)) +
                       compose(vec_atom(m, S::X, k), vec_atom(m, S::Dy, j)) -
                       compose(vec_atom(m, S::Dz, j), vec_atom(m, S::Dz, k));
                Z_op = compose(vec_atom(m, S::Y, j), vec_atom(m, S::Dx, k)) +
                       compose(vec_atom(m, S::Y, k), vec_atom(m, S::Dx, j)) +
                       compose(vec_atom(m, S::Z, j), vec_atom(m, S::Z, k));
            }
            sp2m_.push_back({"Y_" + std::to_string(j + 1) + std::to_string(k + 1), Y_op});
            sp2m_.push_back({"Z_" + std::to_string(j + 1) + std::to_string(k + 1), Z_op});
        }
    }

    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            so_m_.push_back({"L_" + std::to_string(a + 1) + std::to_string(b + 1),
                             X_jk(a, b) - X_jk(b, a)});
}

const WeylOperator& OperatorCatalog::named(const std::string& name) const {
    auto it = named_.find(name);
    if (it == named_.end())
        throw std::invalid_argument("OperatorCatalog: unknown operator '" + name + "'");
    return it->second;
}

bool OperatorCatalog::has_named(const std::string& name) const {
    return named_.find(name) != named_.end();
}

const LabeledQ& OperatorCatalog::q(int lambda, int mu) const {
    for (const LabeledQ& q : q_)
        if (q.label.lambda == lambda && q.label.mu == mu) return q;
    throw std::invalid_argument("OperatorCatalog: no generator with label (" +
                                std::to_string(lambda) + "," + std::to_string(mu) + ")");
}

std::vector<LabeledQ> OperatorCatalog::negative_q() const {
    std::vector<LabeledQ> out;
    for (const LabeledQ& q : q_)
        if (q.color == GeneratorColor::Negative) out.push_back(q);
    return out;
}

std::vector<LabeledQ> OperatorCatalog::positive_q() const {
    std::vector<LabeledQ> out;
    for (const LabeledQ& q : q_)
        if (q.color == GeneratorColor::Positive) out.push_back(q);
    return out;
}

} // namespace symmon
