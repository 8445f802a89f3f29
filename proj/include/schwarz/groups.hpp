#pragma once

// Triangle groups Gamma(k, l, m) of signature (0; k, l, m): geometry,
// arithmeticity, maximality and the existence of special polynomials.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "rational.hpp"
#include "triangle.hpp"

namespace schwarz {

/// A rotation order: natural number >= 2, or infinity (a cusp).
class Order {
public:
    constexpr Order() = default;
    constexpr explicit Order(std::uint32_t n) : n_(n)
    {
        if (n < 2) {
            throw DomainError("signature entries must be >= 2 or infinity");
        }
    }

    static constexpr Order infinity()
    {
        Order o;
        o.n_ = 0;
        return o;
    }

    constexpr bool is_infinite() const { return n_ == 0; }
    constexpr std::uint32_t value() const { return n_; }

    /// 1/n, with 1/infinity = 0.
    Rational reciprocal() const { return is_infinite() ? Rational(0) : Rational(1, n_); }

    /// Multiplication by a natural number, with c * infinity = infinity.
    constexpr Order times(std::uint32_t c) const
    {
        Order o;
        o.n_ = is_infinite() ? 0 : n_ * c;
        return o;
    }

    constexpr friend bool operator==(Order, Order) = default;
    constexpr friend std::strong_ordering operator<=>(Order a, Order b)
    {
        if (a.is_infinite() || b.is_infinite()) {
            return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
        }
        return a.n_ <=> b.n_;
    }

    std::string to_string() const { return is_infinite() ? "inf" : std::to_string(n_); }

private:
    std::uint32_t n_ = 0; // 0 encodes infinity
};

class Signature {
public:
    Signature(Order k, Order l, Order m) : original_{k, l, m}, sorted_{k, l, m}
    {
        std::sort(sorted_.begin(), sorted_.end());
    }

    /// Entries as given.
    const std::array<Order, 3>& original() const { return original_; }
    /// Entries ascending, infinity last.
    const std::array<Order, 3>& sorted() const { return sorted_; }

    std::string to_string() const
    {
        return original_[0].to_string() + "," + original_[1].to_string() + "," + original_[2].to_string();
    }

    /// Inverse angles (1/k, 1/l, 1/m) in the original order.
    AngleParams to_angle_params() const
    {
        return AngleParams::exact(original_[0].reciprocal(), original_[1].reciprocal(), original_[2].reciprocal());
    }

    friend bool operator==(const Signature& a, const Signature& b) { return a.sorted_ == b.sorted_; }

private:
    std::array<Order, 3> original_;
    std::array<Order, 3> sorted_;
};

/// Parses "k,l,m" with "inf" (or "oo") for infinity.
inline Signature parse_signature(std::string_view text)
{
    std::array<Order, 3> entries;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t comma = text.find(',', pos);
        if ((i < 2) != (comma != std::string_view::npos)) {
            throw ParseError("expected exactly three comma-separated entries", comma == std::string_view::npos ? text.size() : comma);
        }
        std::string_view tok = text.substr(pos, i < 2 ? comma - pos : std::string_view::npos);
        std::size_t lead = 0;
        while (lead < tok.size() && tok[lead] == ' ') {
            ++lead;
        }
        tok.remove_prefix(lead);
        while (!tok.empty() && tok.back() == ' ') {
            tok.remove_suffix(1);
        }
        const std::size_t at = pos + lead;
        if (tok == "inf" || tok == "oo" || tok == "infinity") {
            entries[i] = Order::infinity();
        } else {
            if (tok.empty() || tok.size() > 9 ||
                !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
                throw ParseError("expected a natural number or 'inf'", at);
            }
            const auto n = static_cast<std::uint32_t>(std::stoul(std::string(tok)));
            if (n < 2) {
                throw ParseError("signature entries must be >= 2", at);
            }
            entries[i] = Order(n);
        }
        pos = comma + 1;
    }
    return {entries[0], entries[1], entries[2]};
}

enum class Geometry { Spherical, Euclidean, Hyperbolic };

inline std::string to_string(Geometry g)
{
    switch (g) {
    case Geometry::Spherical: return "Spherical";
    case Geometry::Euclidean: return "Euclidean";
    case Geometry::Hyperbolic: return "Hyperbolic";
    }
    return "?";
}

/// Sign of 1/k + 1/l + 1/m - 1.
inline Geometry geometry(const Signature& sig)
{
    const auto& s = sig.sorted();
    const Rational total = s[0].reciprocal() + s[1].reciprocal() + s[2].reciprocal();
    if (total < 1) {
        return Geometry::Hyperbolic;
    }
    return total == 1 ? Geometry::Euclidean : Geometry::Spherical;
}

namespace detail {

// Arithmetic hyperbolic triangle groups, sorted triples, 0 = infinity:
// 76 cocompact followed by 9 non-cocompact.
inline constexpr std::array<std::array<std::uint32_t, 3>, 85> arithmetic_signatures{{
    {2, 3, 7}, {2, 3, 8}, {2, 3, 9}, {2, 3, 10}, {2, 3, 11}, {2, 3, 12},
    {2, 3, 14}, {2, 3, 16}, {2, 3, 18}, {2, 3, 24}, {2, 3, 30}, {2, 4, 5},
    {2, 4, 6}, {2, 4, 7}, {2, 4, 8}, {2, 4, 10}, {2, 4, 12}, {2, 4, 18},
    {2, 5, 5}, {2, 5, 6}, {2, 5, 8}, {2, 5, 10}, {2, 5, 20}, {2, 5, 30},
    {2, 6, 6}, {2, 6, 8}, {2, 6, 12}, {2, 7, 7}, {2, 7, 14}, {2, 8, 8},
    {2, 8, 16}, {2, 9, 18}, {2, 10, 10}, {2, 12, 12}, {2, 12, 24}, {2, 15, 30},
    {2, 18, 18}, {3, 3, 4}, {3, 3, 5}, {3, 3, 6}, {3, 3, 7}, {3, 3, 8},
    {3, 3, 9}, {3, 3, 12}, {3, 3, 15}, {3, 4, 4}, {3, 4, 6}, {3, 4, 12},
    {3, 5, 5}, {3, 6, 6}, {3, 6, 18}, {3, 8, 8}, {3, 8, 24}, {3, 10, 30},
    {3, 12, 12}, {4, 4, 4}, {4, 4, 5}, {4, 4, 6}, {4, 4, 9}, {4, 5, 5},
    {4, 6, 6}, {4, 8, 8}, {4, 16, 16}, {5, 5, 5}, {5, 5, 10}, {5, 5, 15},
    {5, 10, 10}, {6, 6, 6}, {6, 12, 12}, {6, 24, 24}, {7, 7, 7}, {8, 8, 8},
    {9, 9, 9}, {9, 18, 18}, {12, 12, 12}, {15, 15, 15}, {2, 3, 0}, {2, 4, 0},
    {2, 6, 0}, {2, 0, 0}, {3, 3, 0}, {3, 0, 0}, {4, 4, 0}, {6, 6, 0},
    {0, 0, 0},
}};

inline std::array<std::uint32_t, 3> key(const Signature& sig)
{
    const auto& s = sig.sorted();
    return {s[0].value(), s[1].value(), s[2].value()};
}

} // namespace detail

inline bool is_arithmetic(const Signature& sig)
{
    if (geometry(sig) != Geometry::Hyperbolic) {
        throw DomainError("arithmeticity is defined for hyperbolic signatures only (got " + sig.to_string() + ")");
    }
    const auto k = detail::key(sig);
    return std::find(detail::arithmetic_signatures.begin(), detail::arithmetic_signatures.end(), k) !=
           detail::arithmetic_signatures.end();
}

/// False iff the signature is of the form (2, l, 2l), (3, l, 3l) or
/// (k, l, l) in some order, l allowed to be infinite.
inline bool is_maximal(const Signature& sig)
{
    std::array<Order, 3> p = sig.sorted();
    do {
        if (p[1] == p[2]) {
            return false;
        }
        if (p[0] == Order(2) && p[2] == p[1].times(2)) {
            return false;
        }
        if (p[0] == Order(3) && p[2] == p[1].times(3)) {
            return false;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return true;
}

enum class SpecialPolynomials { None, FinitelyConstrained, InfinitelyMany };

inline std::string to_string(SpecialPolynomials s)
{
    switch (s) {
    case SpecialPolynomials::None: return "None";
    case SpecialPolynomials::FinitelyConstrained: return "FinitelyConstrained";
    case SpecialPolynomials::InfinitelyMany: return "InfinitelyMany";
    }
    return "?";
}

struct GroupReport {
    Geometry geometry;
    bool arithmetic;
    bool maximal;
    bool in_M; // matches a non-maximal pattern
    bool in_W; // in_M or arithmetic
    SpecialPolynomials special_polynomials;

    friend bool operator==(const GroupReport&, const GroupReport&) = default;
};

/// Arithmetic groups have infinitely many special polynomials; maximal
/// non-arithmetic ones have none (the group is its own commensurator);
/// the remaining non-arithmetic groups sit with finite index s > 1 in
/// their commensurator, which bounds how many solutions a special
/// polynomial can tie together. The index itself is not computed.
inline GroupReport group_report(const Signature& sig)
{
    GroupReport r{};
    r.geometry = geometry(sig);
    r.arithmetic = is_arithmetic(sig);
    r.maximal = is_maximal(sig);
    r.in_M = !r.maximal;
    r.in_W = r.in_M || r.arithmetic;
    if (r.arithmetic) {
        r.special_polynomials = SpecialPolynomials::InfinitelyMany;
    } else if (r.maximal) {
        r.special_polynomials = SpecialPolynomials::None;
    } else {
        r.special_polynomials = SpecialPolynomials::FinitelyConstrained;
    }
    return r;
}

} // namespace schwarz
