#pragma once

#include <memory>
#include <string>
#include <vector>

#include "symmon/projector.hpp"

namespace symmon {

// Abstract syntax of the operator expression language:
//
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ('^' nat)?
//   primary := rational | '-' primary | '(' expr ')'
//            | atom '_' nat                       -- x_1, dy_2, ...
//            | 'c' '(' vec ',' vec ')'            -- contraction
//            | 'lap' '(' base ')' | 'norm2' '(' base ')' | 'E' '(' base ')'
//            | 'comm' '(' expr ',' expr ')'
//            | 'Q' '(' int ',' int ')' | 'P' '(' int ',' int ')'
//            | 'Ds' | 'Xs' | 'L' | 'R'
//   vec     := 'x' | 'y' | 'z' | 'dx' | 'dy' | 'dz'
//   base    := 'x' | 'y' | 'z'
//   rational:= int ('/' int)?
//
// Unindexed vector symbols are only valid inside c(...), lap(...), norm2(...)
// and E(...).
struct OpExpr {
    enum class Kind {
        Number, Atom, Contract, Lap, Norm2, Euler,
        Named, QGen, PGen, Add, Sub, Mul, Pow, Comm, Neg
    };

    Kind kind;
    Rational number;                 // Number
    VecSym vec_u = VecSym::Z;        // Atom / Contract
    VecSym vec_v = VecSym::Z;        // Contract
    int index = 0;                   // Atom: 1-based variable index
    char base = 'z';                 // Lap / Norm2 / Euler
    std::string name;                // Named
    int lambda = 0, mu = 0;          // QGen / PGen
    int exponent = 0;                // Pow
    std::shared_ptr<OpExpr> lhs, rhs;

    std::size_t position = 0;        // byte offset in the source text
};

using OpExprPtr = std::shared_ptr<OpExpr>;

// Parses source text to an AST; throws ParseError with a byte position.
OpExprPtr parse_op(const std::string& text);

// Elaborates to a canonical Weyl operator. P(l,u) nodes have no finite
// normal-ordered form and raise NotElaborable; use apply_expr for them.
WeylOperator elaborate(const OpExprPtr& expr, const OperatorCatalog& cat);
WeylOperator elaborate(const OpExprPtr& expr, int m);

// Evaluates the expression as a polynomial-to-polynomial map. P(l,u) nodes
// act by the projected generator (their input must lie in ker(Ds, L)).
Polynomial apply_expr(const OpExprPtr& expr, const OperatorCatalog& cat,
                      const Polynomial& p,
                      SingularPolicy policy = SingularPolicy::Raise);

// Canonical DSL rendering of a Weyl operator; parsing it back yields an
// equal operator.
std::string print_weyl(const WeylOperator& op);

} // namespace symmon
