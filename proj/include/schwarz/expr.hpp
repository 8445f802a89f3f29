#pragma once

// Rational expressions in one variable y:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' ['-'] integer)?
//   primary := integer | 'y' | '(' expr ')'

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "ratfunc.hpp"

namespace schwarz {

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : s_(text) {}

    RatFunc parse()
    {
        RatFunc f = expr();
        skip_ws();
        if (i_ != s_.size()) {
            throw ParseError("unexpected '" + std::string(1, s_[i_]) + "'", i_);
        }
        return f;
    }

private:
    void skip_ws()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
            ++i_;
        }
    }

    bool accept(char c)
    {
        skip_ws();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    RatFunc expr()
    {
        RatFunc acc = term();
        while (true) {
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    RatFunc term()
    {
        RatFunc acc = unary();
        while (true) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                const std::size_t at = i_;
                RatFunc rhs = unary();
                if (rhs.is_zero()) {
                    throw ParseError("division by zero", at);
                }
                acc = acc / rhs;
            } else {
                return acc;
            }
        }
    }

    RatFunc unary()
    {
        if (accept('-')) {
            return -unary();
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    RatFunc power()
    {
        RatFunc base = primary();
        if (!accept('^')) {
            return base;
        }
        skip_ws();
        const std::size_t at = i_;
        const bool negative = accept('-');
        skip_ws();
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            ++i_;
        }
        if (start == i_) {
            throw ParseError("expected integer exponent", i_);
        }
        const unsigned long e = std::stoul(std::string(s_.substr(start, i_ - start)));
        if (e > 64) {
            throw ParseError("exponent too large", start);
        }
        RatFunc result = RatFunc::constant(1);
        for (unsigned long k = 0; k < e; ++k) {
            result = result * base;
        }
        if (negative) {
            if (result.is_zero()) {
                throw ParseError("negative power of zero", at);
            }
            result = RatFunc::constant(1) / result;
        }
        return result;
    }

    RatFunc primary()
    {
        skip_ws();
        if (i_ >= s_.size()) {
            throw ParseError("unexpected end of expression", i_);
        }
        const char c = s_[i_];
        if (c == '(') {
            ++i_;
            RatFunc inner = expr();
            if (!accept(')')) {
                throw ParseError("expected ')'", i_);
            }
            return inner;
        }
        if (c == 'y') {
            ++i_;
            return RatFunc::identity();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
                ++i_;
            }
            return RatFunc::constant(Rational(Integer(std::string(s_.substr(start, i_ - start)))));
        }
        throw ParseError("unexpected '" + std::string(1, c) + "'", i_);
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

} // namespace detail

inline RatFunc parse_expression(std::string_view text) { return detail::ExprParser(text).parse(); }

} // namespace schwarz
