// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cctype>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qfrac/truncation.hpp"

namespace qfrac::expr {

/// Evaluation failure (division by zero, invalid power, non-finite result).
class eval_error : public std::runtime_error {
  public:
    explicit eval_error(const std::string& what) : std::runtime_error(what) {}
};

enum class NodeKind { number, variable, neg, add, sub, mul, div, pow };

/// Immutable expression tree in the single free variable t.
struct Expr {
    NodeKind kind = NodeKind::number;
    double number = 0.0;
    std::vector<Expr> kids;

    static Expr num(double v) { return {NodeKind::number, v, {}}; }
    static Expr var() { return {NodeKind::variable, 0.0, {}}; }
    static Expr unary(NodeKind k, Expr a) { return {k, 0.0, {std::move(a)}}; }
    static Expr binary(NodeKind k, Expr a, Expr b) { return {k, 0.0, {std::move(a), std::move(b)}}; }
};

struct ParseError {
    std::size_t position = 0;  ///< byte offset into the input
    std::string message;
};

namespace detail {

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | atom ('^' factor)?
//   atom   := number | 't' | '(' expr ')'
// '^' is right-associative; unary minus applies to the whole factor, so
// "-t^2" parses as Neg(Pow(t,2)). Numbers are decimal literals with
// optional fraction and exponent.
class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::variant<Expr, ParseError> run() {
        skip_ws();
        if (pos_ >= text_.size())
            return ParseError{pos_, "empty input"};
        Expr e;
        if (!parse_expr(e))
            return err_;
        skip_ws();
        if (pos_ < text_.size())
            return ParseError{pos_, "unexpected trailing input"};
        return e;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
    ParseError err_;

    bool fail(std::size_t at, std::string msg) {
        err_ = ParseError{at, std::move(msg)};
        return false;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool consume(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool parse_expr(Expr& out) {
        if (!parse_term(out))
            return false;
        for (;;) {
            if (consume('+')) {
                Expr rhs;
                if (!parse_term(rhs))
                    return false;
                out = Expr::binary(NodeKind::add, std::move(out), std::move(rhs));
            } else if (consume('-')) {
                Expr rhs;
                if (!parse_term(rhs))
                    return false;
                out = Expr::binary(NodeKind::sub, std::move(out), std::move(rhs));
            } else {
                return true;
            }
        }
    }

    bool parse_term(Expr& out) {
        if (!parse_factor(out))
            return false;
        for (;;) {
            if (consume('*')) {
                Expr rhs;
                if (!parse_factor(rhs))
                    return false;
                out = Expr::binary(NodeKind::mul, std::move(out), std::move(rhs));
            } else if (consume('/')) {
                Expr rhs;
                if (!parse_factor(rhs))
                    return false;
                out = Expr::binary(NodeKind::div, std::move(out), std::move(rhs));
            } else {
                return true;
            }
        }
    }

    bool parse_factor(Expr& out) {
        if (consume('-')) {
            Expr inner;
            if (!parse_factor(inner))
                return false;
            out = Expr::unary(NodeKind::neg, std::move(inner));
            return true;
        }
        if (!parse_atom(out))
            return false;
        if (consume('^')) {
            Expr exponent;
            if (!parse_factor(exponent))
                return false;
            out = Expr::binary(NodeKind::pow, std::move(out), std::move(exponent));
        }
        return true;
    }

    bool parse_atom(Expr& out) {
        skip_ws();
        if (pos_ >= text_.size())
            return fail(pos_, "unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            if (!parse_expr(out))
                return false;
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                return fail(pos_, "expected ')'");
            ++pos_;
            return true;
        }
        if (c == 't') {
            ++pos_;
            out = Expr::var();
            return true;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return parse_number(out);
        return fail(pos_, std::string("unexpected character '") + c + "'");
    }

    bool parse_number(Expr& out) {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                return fail(pos_, "expected digits after decimal point");
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-'))
                ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                pos_ = mark;  // not an exponent; leave for the caller to reject
            } else {
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            }
        }
        out = Expr::num(std::stod(std::string(text_.substr(start, pos_ - start))));
        return true;
    }
};

inline int precedence(NodeKind k) {
    switch (k) {
        case NodeKind::add:
        case NodeKind::sub:
            return 1;
        case NodeKind::mul:
        case NodeKind::div:
            return 2;
        case NodeKind::neg:
            return 3;
        case NodeKind::pow:
            return 4;
        default:
            return 5;
    }
}

}  // namespace detail

/// Parses the expression mini-language; returns the tree or the first error
/// with its byte offset.
inline std::variant<Expr, ParseError> parse(std::string_view text) {
    return detail::Parser(text).run();
}

/// Evaluates at t > 0. Division by zero, invalid powers, and non-finite
/// results throw eval_error.
inline double evaluate(const Expr& e, double t) {
    switch (e.kind) {
        case NodeKind::number:
            return e.number;
        case NodeKind::variable:
            return t;
        case NodeKind::neg:
            return -evaluate(e.kids[0], t);
        case NodeKind::add:
            return evaluate(e.kids[0], t) + evaluate(e.kids[1], t);
        case NodeKind::sub:
            return evaluate(e.kids[0], t) - evaluate(e.kids[1], t);
        case NodeKind::mul:
            return evaluate(e.kids[0], t) * evaluate(e.kids[1], t);
        case NodeKind::div: {
            const double den = evaluate(e.kids[1], t);
            if (den == 0.0)
                throw eval_error("division by zero");
            const double r = evaluate(e.kids[0], t) / den;
            if (!std::isfinite(r))
                throw eval_error("non-finite result");
            return r;
        }
        case NodeKind::pow: {
            const double base = evaluate(e.kids[0], t);
            const double exponent = evaluate(e.kids[1], t);
            const double r = std::pow(base, exponent);
            if (std::isnan(r))
                throw eval_error("invalid power (negative base with fractional exponent)");
            if (!std::isfinite(r))
                throw eval_error("non-finite result");
            return r;
        }
    }
    throw eval_error("corrupt expression tree");
}

/// Canonical printed form; parse(to_string(e)) is structurally equal to e.
inline std::string to_string(const Expr& e) {
    const auto wrap = [](const Expr& child, bool parens) {
        return parens ? "(" + to_string(child) + ")" : to_string(child);
    };
    const int prec = detail::precedence(e.kind);
    switch (e.kind) {
        case NodeKind::number: {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", e.number);
            return std::string(buf);
        }
        case NodeKind::variable:
            return "t";
        case NodeKind::neg:
            // the operand of unary minus must bind at least as tightly as a factor
            return "-" + wrap(e.kids[0], detail::precedence(e.kids[0].kind) < prec);
        case NodeKind::pow:
            // right-associative; mul-or-looser exponents need parentheses
            return wrap(e.kids[0], detail::precedence(e.kids[0].kind) <= prec) + "^" +
                   wrap(e.kids[1], detail::precedence(e.kids[1].kind) < 3);
        default: {
            const char* op = e.kind == NodeKind::add   ? "+"
                             : e.kind == NodeKind::sub ? "-"
                             : e.kind == NodeKind::mul ? "*"
                                                       : "/";
            return wrap(e.kids[0], detail::precedence(e.kids[0].kind) < prec) + op +
                   wrap(e.kids[1], detail::precedence(e.kids[1].kind) <= prec);
        }
    }
}

inline bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.kids.size() != b.kids.size())
        return false;
    if (a.kind == NodeKind::number && a.number != b.number)
        return false;
    for (std::size_t i = 0; i < a.kids.size(); ++i)
        if (!structurally_equal(a.kids[i], b.kids[i]))
            return false;
    return true;
}

}  // namespace qfrac::expr
