#include "riordan/exprlang.hpp"

#include <cctype>
#include <sstream>

#include "riordan/errors.hpp"

namespace riordan {

ExprPtr expr_const(Rational v) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Const;
    e->value = std::move(v);
    return e;
}

ExprPtr expr_var() {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Var;
    return e;
}

ExprPtr expr_node(Expr::Kind k, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr expr_pow(ExprPtr base, unsigned exp) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Pow;
    e->lhs = std::move(base);
    e->exponent = exp;
    return e;
}

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    ExprPtr run() {
        skip_ws();
        if (pos_ >= text_.size())
            throw SyntaxError("empty expression", 0, "expression");
        ExprPtr e = expr();
        skip_ws();
        if (pos_ < text_.size())
            throw SyntaxError("trailing input after expression", pos_, "end of input");
        return e;
    }

  private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& expected) {
        skip_ws();
        throw SyntaxError("syntax error at offset " + std::to_string(pos_) +
                              ", expected " + expected,
                          pos_, expected);
    }

    Integer uint_literal() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("unsigned integer");
        return Integer(text_.substr(start, pos_ - start));
    }

    ExprPtr expr() {
        ExprPtr e = term();
        while (true) {
            if (eat('+'))
                e = expr_node(Expr::Kind::Add, e, term());
            else if (eat('-'))
                e = expr_node(Expr::Kind::Sub, e, term());
            else
                return e;
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (true) {
            if (eat('*'))
                e = expr_node(Expr::Kind::Mul, e, factor());
            else if (eat('/'))
                e = expr_node(Expr::Kind::Div, e, factor());
            else
                return e;
        }
    }

    ExprPtr factor() {
        ExprPtr b = base();
        if (eat('^')) {
            skip_ws();
            Integer e = uint_literal();
            if (!e.fits_uint_p()) fail("small exponent");
            return expr_pow(b, static_cast<unsigned>(e.get_ui()));
        }
        return b;
    }

    ExprPtr base() {
        char c = peek();
        if (c == 't') {
            ++pos_;
            return expr_var();
        }
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            if (!eat(')')) fail("')'");
            return e;
        }
        if (c == '-') {
            ++pos_;
            return expr_node(Expr::Kind::Neg, base(), nullptr);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = uint_literal();
            // A '/' directly followed by digits is a rational literal, not
            // a division; everything else falls back to the term level.
            std::size_t save = pos_;
            if (pos_ < text_.size() && text_[pos_] == '/') {
                std::size_t after = pos_ + 1;
                if (after < text_.size() &&
                    std::isdigit(static_cast<unsigned char>(text_[after]))) {
                    ++pos_;
                    Integer den = uint_literal();
                    if (den == 0)
                        throw SyntaxError("zero denominator in rational literal", save + 1,
                                          "nonzero integer");
                    Rational q(num, den);
                    q.canonicalize();
                    return expr_const(std::move(q));
                }
            }
            return expr_const(Rational(num));
        }
        fail("'t', unsigned integer, '(' or '-'");
    }
};

void print_rec(const Expr& e, std::ostream& os) {
    switch (e.kind) {
        case Expr::Kind::Const:
            os << rat_str(e.value);
            return;
        case Expr::Kind::Var:
            os << 't';
            return;
        case Expr::Kind::Neg:
            os << '-';
            if (e.lhs->kind == Expr::Kind::Const || e.lhs->kind == Expr::Kind::Var ||
                e.lhs->kind == Expr::Kind::Neg) {
                print_rec(*e.lhs, os);
            } else {
                os << '(';
                print_rec(*e.lhs, os);
                os << ')';
            }
            return;
        case Expr::Kind::Pow: {
            bool atom = e.lhs->kind == Expr::Kind::Var ||
                        (e.lhs->kind == Expr::Kind::Const && e.lhs->value.get_den() == 1 &&
                         e.lhs->value >= 0);
            if (!atom) os << '(';
            print_rec(*e.lhs, os);
            if (!atom) os << ')';
            os << '^' << e.exponent;
            return;
        }
        default: {
            char op = e.kind == Expr::Kind::Add   ? '+'
                      : e.kind == Expr::Kind::Sub ? '-'
                      : e.kind == Expr::Kind::Mul ? '*'
                                                  : '/';
            os << '(';
            print_rec(*e.lhs, os);
            os << ')' << op << '(';
            print_rec(*e.rhs, os);
            os << ')';
            return;
        }
    }
}

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).run(); }

std::string print_expr(const Expr& e) {
    std::ostringstream os;
    print_rec(e, os);
    return os.str();
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Expr::Kind::Const: return a.value == b.value;
        case Expr::Kind::Var: return true;
        case Expr::Kind::Neg: return expr_equal(*a.lhs, *b.lhs);
        case Expr::Kind::Pow:
            return a.exponent == b.exponent && expr_equal(*a.lhs, *b.lhs);
        default:
            return expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
    }
}

static Series eval_rec(const Expr& e, int trunc) {
    switch (e.kind) {
        case Expr::Kind::Const: return Series::constant(e.value, trunc);
        case Expr::Kind::Var: return Series::t(trunc);
        case Expr::Kind::Add: return add(eval_rec(*e.lhs, trunc), eval_rec(*e.rhs, trunc));
        case Expr::Kind::Sub: return sub(eval_rec(*e.lhs, trunc), eval_rec(*e.rhs, trunc));
        case Expr::Kind::Neg: return neg(eval_rec(*e.lhs, trunc));
        case Expr::Kind::Mul: return mul(eval_rec(*e.lhs, trunc), eval_rec(*e.rhs, trunc));
        case Expr::Kind::Div: return div(eval_rec(*e.lhs, trunc), eval_rec(*e.rhs, trunc));
        case Expr::Kind::Pow: return pow(eval_rec(*e.lhs, trunc), e.exponent);
    }
    throw Error("unreachable expression kind");
}

Series eval_series(const Expr& e, int trunc) {
    return eval_rec(e, trunc).with_inferred_parity();
}

Series eval_expr_string(const std::string& text, int trunc) {
    return eval_series(*parse_expr(text), trunc);
}

}  // namespace riordan
