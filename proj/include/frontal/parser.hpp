#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "frontal/errors.hpp"
#include "frontal/polynomial.hpp"

namespace frontal {

namespace detail {

// Recursive-descent parser for the polynomial grammar:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | power
//   power  := atom ('^' natural)?
//   atom   := number | identifier | '(' expr ')'
//   number := natural ('/' natural)?        exact rational literal
//
// '^' binds tighter than unary minus, which binds tighter than '*'.
// Whitespace is insignificant everywhere, including around '/'.
class PolynomialParser {
public:
    PolynomialParser(std::string_view text, VarContextPtr ctx)
        : text_(text), ctx_(std::move(ctx)) {}

    Polynomial parse() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("empty polynomial expression", pos_);
        Polynomial p = parse_expr();
        skip_ws();
        if (pos_ < text_.size()) {
            throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
        }
        return p;
    }

private:
    Polynomial parse_expr() {
        Polynomial acc = parse_term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                acc = acc + parse_term();
            } else if (peek() == '-') {
                ++pos_;
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * parse_factor();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_factor() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return -parse_factor();
        }
        return parse_power();
    }

    Polynomial parse_power() {
        Polynomial base = parse_atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            const std::size_t at = pos_;
            const std::uint64_t e = parse_natural("exponent");
            if (e > 100000) throw ParseError("exponent too large", at);
            return base.pow(static_cast<std::uint32_t>(e));
        }
        return base;
    }

    Polynomial parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = parse_expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_variable();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Polynomial parse_number() {
        Integer num = parse_integer();
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            const std::size_t at = pos_;
            Integer den = parse_integer();
            if (den == 0) throw ParseError("zero denominator in rational literal", at);
            return Polynomial::constant(ctx_, Rational(num, den));
        }
        return Polynomial::constant(ctx_, Rational(num));
    }

    Polynomial parse_variable() {
        const std::size_t start = pos_;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                ++pos_;
            } else {
                break;
            }
        }
        const std::string name(text_.substr(start, pos_ - start));
        auto idx = ctx_->index_of(name);
        if (!idx) throw UnknownVariableError(name, start);
        return Polynomial::variable(ctx_, *idx);
    }

    Integer parse_integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected a number", start);
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    std::uint64_t parse_natural(const char* what) {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            throw ParseError(std::string("expected ") + what, pos_);
        }
        Integer v = parse_integer();
        if (v > 1000000) throw ParseError(std::string(what) + " too large", start);
        return v.convert_to<std::uint64_t>();
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    std::string_view text_;
    VarContextPtr ctx_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const VarContextPtr& ctx) {
    return detail::PolynomialParser(text, ctx).parse();
}

} // namespace frontal
