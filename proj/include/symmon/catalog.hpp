#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "symmon/weyl.hpp"

namespace symmon {

// Variable-family symbols usable in contractions: multiplications z,x,y and
// derivatives dz,dx,dy.
enum class VecSym { Z, X, Y, Dz, Dx, Dy };

WeylOperator vec_atom(int m, VecSym s, int i);

// Contraction <u, v> = sum_k u_k v_k (normal-ordered).
WeylOperator contraction(int m, VecSym u, VecSym v);

// Euler operator of one variable family ('z','x','y').
WeylOperator euler(int m, char base);

// Laplacian / squared norm of one family.
WeylOperator laplacian(int m, char base);
WeylOperator norm_squared(int m, char base);

// An sl(2) triple with [H,X] = 2X, [X,Y] = H, [H,Y] = -2Y, together with the
// eigenvalue of H on each tri-homogeneous component.
struct Sl2Triple {
    std::string name;
    WeylOperator X;
    WeylOperator Y;
    WeylOperator H;
    std::function<Rational(const TriDegree&)> weight_of;
};

enum class GeneratorColor { Negative, Cartan, Positive };

// A labeled generator of the 15-dimensional complement t inside sp(6):
// the raw operator Q and its grid position/color. The projected action
// pi_so4 * Q lives in the projector module.
struct LabeledQ {
    Bigrade label;
    GeneratorColor color;
    WeylOperator Q;
};

struct SpGenerator {
    std::string name;
    WeylOperator op;
};

// Every named operator family for a fixed dimension m.
class OperatorCatalog {
public:
    explicit OperatorCatalog(int m);

    int m() const { return m_; }

    // Named lookup (Ds, Xs, Ex, Ey, Ez, E, L, R, scriptE, H_D, H_L, ...).
    const WeylOperator& named(const std::string& name) const;
    bool has_named(const std::string& name) const;
    const std::map<std::string, WeylOperator>& all_named() const { return named_; }

    const Sl2Triple& ds_triple() const { return ds_triple_; }
    const Sl2Triple& l_triple() const { return l_triple_; }

    const std::vector<WeylOperator>& g_minus2() const { return g_minus2_; }
    const std::vector<WeylOperator>& g_zero() const { return g_zero_; }
    const std::vector<WeylOperator>& g_plus2() const { return g_plus2_; }

    // The fifteen labeled generators, ordered by (lambda, mu).
    const std::vector<LabeledQ>& q_generators() const { return q_; }
    const LabeledQ& q(int lambda, int mu) const;
    std::vector<LabeledQ> negative_q() const;
    std::vector<LabeledQ> positive_q() const;

    // Realization of sp(2m): X_jk (all j,k), Y_jk, Z_jk (j <= k).
    const std::vector<SpGenerator>& sp2m_generators() const { return sp2m_; }

    // so(m) angular generators L_ab = X_ab - X_ba (a < b).
    const std::vector<SpGenerator>& so_m_generators() const { return so_m_; }

private:
    int m_;
    std::map<std::string, WeylOperator> named_;
    Sl2Triple ds_triple_;
    Sl2Triple l_triple_;
    std::vector<WeylOperator> g_minus2_, g_zero_, g_plus2_;
    std::vector<LabeledQ> q_;
    std::vector<SpGenerator> sp2m_;
    std::vector<SpGenerator> so_m_;
};

} // namespace symmon
