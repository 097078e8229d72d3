#include "symmon/exprs.hpp"

#include <cctype>

namespace symmon {

namespace {

struct Token {
    enum class Kind { Name, Integer, Plus, Minus, Star, Caret, Slash,
                      LParen, RParen, Comma, End };
    Kind kind;
    std::string text;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        tok_.pos = i_;
        if (i_ >= src_.size()) {
            tok_.kind = Token::Kind::End;
            tok_.text.clear();
            return;
        }
        char c = src_[i_];
        auto single = [&](Token::Kind k) {
            tok_.kind = k;
            tok_.text = std::string(1, c);
            ++i_;
        };
        switch (c) {
            case '+': single(Token::Kind::Plus); return;
            case '-': single(Token::Kind::Minus); return;
            case '*': single(Token::Kind::Star); return;
            case '^': single(Token::Kind::Caret); return;
            case '/': single(Token::Kind::Slash); return;
            case '(': single(Token::Kind::LParen); return;
            case ')': single(Token::Kind::RParen); return;
            case ',': single(Token::Kind::Comma); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            tok_.kind = Token::Kind::Integer;
            tok_.text = src_.substr(i_, j - i_);
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[j])))) ++j;
            // An optional _digits suffix belongs to the identifier (x_1).
            if (j < src_.size() && src_[j] == '_') {
                std::size_t k = j + 1;
                while (k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]))) ++k;
                if (k == j + 1) throw ParseError("expected digits after '_'", j + 1);
                j = k;
            }
            tok_.kind = Token::Kind::Name;
            tok_.text = src_.substr(i_, j - i_);
            i_ = j;
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", i_);
    }

    const std::string& src_;
    Token tok_;
    std::size_t i_ = 0;
};

long parse_long(const std::string& text, std::size_t pos) {
    try {
        return std::stol(text);
    } catch (const std::exception&) {
        throw ParseError("integer '" + text + "' out of range", pos);
    }
}

std::optional<VecSym> vec_sym_of(const std::string& s) {
    if (s == "z") return VecSym::Z;
    if (s == "x") return VecSym::X;
    if (s == "y") return VecSym::Y;
    if (s == "dz") return VecSym::Dz;
    if (s == "dx") return VecSym::Dx;
    if (s == "dy") return VecSym::Dy;
    return std::nullopt;
}

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    OpExprPtr parse() {
        OpExprPtr e = expr();
        if (lex_.peek().kind != Token::Kind::End)
            throw ParseError("trailing input after expression", lex_.peek().pos);
        return e;
    }

private:
    OpExprPtr make(OpExpr::Kind k, std::size_t pos) {
        auto e = std::make_shared<OpExpr>();
        e->kind = k;
        e->position = pos;
        return e;
    }

    void expect(Token::Kind k, const char* what) {
        if (lex_.peek().kind != k)
            throw ParseError(std::string("expected ") + what, lex_.peek().pos);
        lex_.take();
    }

    long integer(const char* what) {
        bool negative = false;
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            negative = true;
        }
        if (lex_.peek().kind != Token::Kind::Integer)
            throw ParseError(std::string("expected ") + what, lex_.peek().pos);
        Token t = lex_.take();
        long v = parse_long(t.text, t.pos);
        return negative ? -v : v;
    }

    OpExprPtr expr() {
        OpExprPtr left = term();
        for (;;) {
            Token::Kind k = lex_.peek().kind;
            if (k != Token::Kind::Plus && k != Token::Kind::Minus) return left;
            Token op = lex_.take();
            OpExprPtr right = term();
            OpExprPtr node = make(k == Token::Kind::Plus ? OpExpr::Kind::Add
                                                         : OpExpr::Kind::Sub,
                                  op.pos);
            node->lhs = left;
            node->rhs = right;
            left = node;
        }
    }

    OpExprPtr term() {
        OpExprPtr left = factor();
        while (lex_.peek().kind == Token::Kind::Star) {
            Token op = lex_.take();
            OpExprPtr right = factor();
            OpExprPtr node = make(OpExpr::Kind::Mul, op.pos);
            node->lhs = left;
            node->rhs = right;
            left = node;
        }
        return left;
    }

    OpExprPtr factor() {
        OpExprPtr base = primary();
        if (lex_.peek().kind == Token::Kind::Caret) {
            Token op = lex_.take();
            if (lex_.peek().kind != Token::Kind::Integer)
                throw ParseError("expected a nonnegative integer exponent", lex_.peek().pos);
            Token e = lex_.take();
            OpExprPtr node = make(OpExpr::Kind::Pow, op.pos);
            node->lhs = base;
            node->exponent = static_cast<int>(parse_long(e.text, e.pos));
            return node;
        }
        return base;
    }

    OpExprPtr primary() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Token::Kind::Minus: {
                Token op = lex_.take();
                OpExprPtr node = make(OpExpr::Kind::Neg, op.pos);
                node->lhs = primary();
                return node;
            }
            case Token::Kind::LParen: {
                lex_.take();
                OpExprPtr inner = expr();
                expect(Token::Kind::RParen, "')'");
                return inner;
            }
            case Token::Kind::Integer: {
                Token num = lex_.take();
                OpExprPtr node = make(OpExpr::Kind::Number, num.pos);
                if (lex_.peek().kind == Token::Kind::Slash) {
                    lex_.take();
                    if (lex_.peek().kind != Token::Kind::Integer)
                        throw ParseError("expected denominator digits", lex_.peek().pos);
                    Token den = lex_.take();
                    if (BigInt(den.text) == 0)
                        throw ParseError("zero denominator", den.pos);
                    node->number = Rational(BigInt(num.text), BigInt(den.text));
                } else {
                    node->number = Rational(BigInt(num.text));
                }
                return node;
            }
            case Token::Kind::Name:
                return named_primary();
            default:
                throw ParseError("expected an operand", t.pos);
        }
    }

    OpExprPtr named_primary() {
        Token t = lex_.take();
        const std::string& s = t.text;

        auto underscore = s.find('_');
        if (underscore != std::string::npos) {
            std::string head = s.substr(0, underscore);
            auto sym = vec_sym_of(head);
            if (!sym)
                throw ParseError("unknown variable '" + head + "'", t.pos);
            OpExprPtr node = make(OpExpr::Kind::Atom, t.pos);
            node->vec_u = *sym;
            node->index = static_cast<int>(parse_long(s.substr(underscore + 1), t.pos));
            if (node->index < 1)
                throw ParseError("variable index must be >= 1", t.pos);
            return node;
        }

        if (s == "Ds" || s == "Xs" || s == "L" || s == "R") {
            OpExprPtr node = make(OpExpr::Kind::Named, t.pos);
            node->name = s;
            return node;
        }
        if (s == "c") {
            expect(Token::Kind::LParen, "'(' after c");
            VecSym u = vec_argument();
            expect(Token::Kind::Comma, "',' (c takes two vector arguments)");
            VecSym v = vec_argument();
            expect(Token::Kind::RParen, "')'");
            OpExprPtr node = make(OpExpr::Kind::Contract, t.pos);
            node->vec_u = u;
            node->vec_v = v;
            return node;
        }
        if (s == "lap" || s == "norm2" || s == "E") {
            expect(Token::Kind::LParen, "'('");
            Token arg = lex_.peek();
            if (arg.kind != Token::Kind::Name ||
                (arg.text != "x" && arg.text != "y" && arg.text != "z"))
                throw ParseError(s + " takes one of x, y, z", arg.pos);
            lex_.take();
            expect(Token::Kind::RParen, "')'");
            OpExprPtr node = make(s == "lap" ? OpExpr::Kind::Lap
                                  : s == "norm2" ? OpExpr::Kind::Norm2
                                                 : OpExpr::Kind::Euler,
                                  t.pos);
            node->base = arg.text[0];
            return node;
        }
        if (s == "comm") {
            expect(Token::Kind::LParen, "'('");
            OpExprPtr a = expr();
            expect(Token::Kind::Comma, "',' (comm takes two arguments)");
            OpExprPtr b = expr();
            expect(Token::Kind::RParen, "')'");
            OpExprPtr node = make(OpExpr::Kind::Comm, t.pos);
            node->lhs = a;
            node->rhs = b;
            return node;
        }
        if (s == "Q" || s == "P") {
            expect(Token::Kind::LParen, "'('");
            long lambda = integer("integer label");
            expect(Token::Kind::Comma, "','");
            long mu = integer("integer label");
            expect(Token::Kind::RParen, "')'");
            OpExprPtr node = make(s == "Q" ? OpExpr::Kind::QGen : OpExpr::Kind::PGen,
                                  t.pos);
            node->lambda = static_cast<int>(lambda);
            node->mu = static_cast<int>(mu);
            return node;
        }
        if (vec_sym_of(s))
            throw ParseError("unindexed vector symbol '" + s +
                                 "' is only valid inside c(...), lap(...), norm2(...), E(...)",
                             t.pos);
        throw ParseError("unknown name '" + s + "'", t.pos);
    }

    VecSym vec_argument() {
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::Name)
            throw ParseError("expected a vector symbol (x, y, z, dx, dy, dz)", t.pos);
        auto sym = vec_sym_of(t.text);
        if (!sym)
            throw ParseError("expected a vector symbol (x, y, z, dx, dy, dz), got '" +
                                 t.text + "'",
                             t.pos);
        lex_.take();
        return *sym;
    }

    Lexer lex_;
};

char atom_kind(VecSym s, bool& derivative) {
    switch (s) {
        case VecSym::Z: derivative = false; return 'z';
        case VecSym::X: derivative = false; return 'x';
        case VecSym::Y: derivative = false; return 'y';
        case VecSym::Dz: derivative = true; return 'Z';
        case VecSym::Dx: derivative = true; return 'X';
        case VecSym::Dy: derivative = true; return 'Y';
    }
    throw std::invalid_argument("atom_kind");
}

} // namespace

OpExprPtr parse_op(const std::string& text) {
    Parser p(text);
    return p.parse();
}

WeylOperator elaborate(const OpExprPtr& expr, const OperatorCatalog& cat) {
    if (!expr) throw std::invalid_argument("elaborate: null expression");
    const int m = cat.m();
    switch (expr->kind) {
        case OpExpr::Kind::Number:
            return WeylOperator::scalar(m, expr->number);
        case OpExpr::Kind::Atom: {
            if (expr->index > m)
                throw DimensionMismatch("variable index " + std::to_string(expr->index) +
                                        " out of range for m = " + std::to_string(m));
            bool derivative = false;
            char kind = atom_kind(expr->vec_u, derivative);
            return WeylOperator::atom(m, kind, expr->index - 1);
        }
        case OpExpr::Kind::Contract:
            return contraction(m, expr->vec_u, expr->vec_v);
        case OpExpr::Kind::Lap:
            return laplacian(m, expr->base);
        case OpExpr::Kind::Norm2:
            return norm_squared(m, expr->base);
        case OpExpr::Kind::Euler:
            return euler(m, expr->base);
        case OpExpr::Kind::Named:
            return cat.named(expr->name);
        case OpExpr::Kind::QGen:
            return cat.q(expr->lambda, expr->mu).Q;
        case OpExpr::Kind::PGen:
            throw NotElaborable(
                "P(" + std::to_string(expr->lambda) + "," + std::to_string(expr->mu) +
                ") has no finite normal-ordered form; it acts pointwise (use apply)");
        case OpExpr::Kind::Add:
            return elaborate(expr->lhs, cat) + elaborate(expr->rhs, cat);
        case OpExpr::Kind::Sub:
            return elaborate(expr->lhs, cat) - elaborate(expr->rhs, cat);
        case OpExpr::Kind::Mul:
            return compose(elaborate(expr->lhs, cat), elaborate(expr->rhs, cat));
        case OpExpr::Kind::Pow:
            return power(elaborate(expr->lhs, cat), expr->exponent);
        case OpExpr::Kind::Comm:
            return commutator(elaborate(expr->lhs, cat), elaborate(expr->rhs, cat));
        case OpExpr::Kind::Neg:
            return -elaborate(expr->lhs, cat);
    }
    throw std::logic_error("elaborate: unhandled node");
}

WeylOperator elaborate(const OpExprPtr& expr, int m) {
    OperatorCatalog cat(m);
    return elaborate(expr, cat);
}

Polynomial apply_expr(const OpExprPtr& expr, const OperatorCatalog& cat,
                      const Polynomial& p, SingularPolicy policy) {
    if (!expr) throw std::invalid_argument("apply_expr: null expression");
    switch (expr->kind) {
        case OpExpr::Kind::PGen: {
            LabeledGenerator gen(cat, cat.q(expr->lambda, expr->mu));
            return gen.apply(p, policy).value;
        }
        case OpExpr::Kind::Add:
            return apply_expr(expr->lhs, cat, p, policy) +
                   apply_expr(expr->rhs, cat, p, policy);
        case OpExpr::Kind::Sub:
            return apply_expr(expr->lhs, cat, p, policy) -
                   apply_expr(expr->rhs, cat, p, policy);
        case OpExpr::Kind::Mul:
            return apply_expr(expr->lhs, cat,
                              apply_expr(expr->rhs, cat, p, policy), policy);
        case OpExpr::Kind::Pow: {
            Polynomial cur = p;
            for (int i = 0; i < expr->exponent; ++i)
                cur = apply_expr(expr->lhs, cat, cur, policy);
            return cur;
        }
        case OpExpr::Kind::Comm: {
            Polynomial ab = apply_expr(expr->lhs, cat,
                                       apply_expr(expr->rhs, cat, p, policy), policy);
            Polynomial ba = apply_expr(expr->rhs, cat,
                                       apply_expr(expr->lhs, cat, p, policy), policy);
            return ab - ba;
        }
        case OpExpr::Kind::Neg:
            return -apply_expr(expr->lhs, cat, p, policy);
        default:
            return apply(elaborate(expr, cat), p);
    }
}

std::string print_weyl(const WeylOperator& op) { return op.str(); }

} // namespace symmon
