#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "errors.hpp"

namespace schwarz {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (GMP canonicalizes after every operation).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0) {
        throw DomainError("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool is_odd_integer(const Rational& q)
{
    return is_integer(q) && mpz_odd_p(q.get_num_mpz_t()) != 0;
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

namespace detail {

inline std::size_t skip_digits(std::string_view s, std::size_t i)
{
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        ++i;
    }
    return i;
}

} // namespace detail

/// Parses "[-+]digits[/digits]". `offset` is added to reported error
/// positions so callers can point into a larger string.
inline Rational parse_rational(std::string_view text, std::size_t offset = 0)
{
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
    }
    const std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        ++i;
    }
    std::size_t j = detail::skip_digits(text, i);
    if (j == i) {
        throw ParseError("expected digits", offset + i);
    }
    std::string num(text.substr(start, j - start));
    if (!num.empty() && num.front() == '+') {
        num.erase(0, 1);
    }
    std::string den = "1";
    if (j < text.size() && text[j] == '/') {
        const std::size_t k = detail::skip_digits(text, j + 1);
        if (k == j + 1) {
            throw ParseError("expected denominator digits", offset + j + 1);
        }
        den = std::string(text.substr(j + 1, k - j - 1));
        j = k;
    }
    while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) {
        ++j;
    }
    if (j != text.size()) {
        throw ParseError("unexpected character '" + std::string(1, text[j]) + "'", offset + j);
    }
    Integer d(den);
    if (d == 0) {
        throw ParseError("zero denominator", offset + start);
    }
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

} // namespace schwarz
