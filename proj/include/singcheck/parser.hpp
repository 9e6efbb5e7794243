#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "poly.hpp"

namespace singcheck {

/// Syntax or semantic error in a polynomial expression. `position` is the
/// 0-based byte offset into the source text.
struct ParseError : std::runtime_error {
    std::size_t position;

    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos + 1) + ")"),
          position(pos) {}
};

namespace detail {

// Grammar (explicit '*' required between factors, '^' binds tighter than
// unary minus, '/' only by a plain integer literal):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*' factor) | ('/' INT))*
//   factor := '-' factor | base ('^' NAT)?
//   base   := '(' expr ')' | IDENT | INT
class ExprParser {
public:
    ExprParser(std::string_view text, ContextPtr ctx) : text_(text), ctx_(std::move(ctx)) {
        for (std::size_t i = 0; i < text_.size(); ++i)
            if (static_cast<unsigned char>(text_[i]) > 0x7f)
                throw ParseError("non-ASCII byte in expression", i);
    }

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ < text_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    Poly expr() {
        Poly p = term();
        for (;;) {
            skip_ws();
            if (accept('+'))
                p += term();
            else if (accept('-'))
                p -= term();
            else
                return p;
        }
    }

    Poly term() {
        Poly p = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                p *= factor();
            } else if (accept('/')) {
                skip_ws();
                std::size_t at = pos_;
                if (pos_ >= text_.size() || !std::isdigit(peek()))
                    throw ParseError("division is only allowed by an integer literal", at);
                Integer den = integer_literal();
                if (den == 0) throw ParseError("division by zero", at);
                p = p.scaled(make_rational(1, den));
            } else {
                return p;
            }
        }
    }

    Poly factor() {
        skip_ws();
        if (accept('-')) return -factor();
        Poly b = base();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            std::size_t at = pos_;
            if (pos_ >= text_.size() || !std::isdigit(peek()))
                throw ParseError("exponent must be a natural number literal", at);
            Integer e = integer_literal();
            if (e > 100000) throw ParseError("exponent too large", at);
            unsigned long n = e.get_ui();
            Poly acc = Poly::constant(ctx_, Rational(1));
            for (unsigned long k = 0; k < n; ++k) acc *= b;
            return acc;
        }
        return b;
    }

    Poly base() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            skip_ws();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Poly::constant(ctx_, Rational(integer_literal()));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            std::string name = identifier();
            auto idx = ctx_->index_of(name);
            if (!idx) throw ParseError("unknown variable '" + name + "'", at);
            return Poly::variable(ctx_, *idx);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Integer integer_literal() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(peek())) ++pos_;
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    std::string identifier() {
        std::size_t start = pos_;
        ++pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(peek()) || text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    unsigned char peek() const { return static_cast<unsigned char>(text_[pos_]); }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(peek())) ++pos_;
    }

    std::string_view text_;
    ContextPtr ctx_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses a polynomial expression into expanded normal form. Every
/// non-grammatical input raises ParseError with a position, never a crash.
inline Poly parse_poly(std::string_view text, const ContextPtr& ctx) {
    return detail::ExprParser(text, ctx).parse();
}

} // namespace singcheck
