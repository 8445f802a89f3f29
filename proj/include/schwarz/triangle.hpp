#pragma once

// Schwarz triangle equations S_t(y) + (y')^2 R(y) = 0 with
//
//   R(y) = 1/2 ( (1 - b^2)/y^2 + (1 - c^2)/(y-1)^2 + (b^2 + c^2 - a^2 - 1)/(y(y-1)) )
//
// where (a, b, c) are the inverse angle parameters; the vertex with
// parameter a sits over infinity, b over 0 and c over 1.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "errors.hpp"
#include "ratfunc.hpp"

namespace schwarz {

/// An exact angle value that is not rational (for example sqrt(2)). Kept
/// symbolically so it can be rejected with a clear message.
struct AlgebraicValue {
    std::string text;
    friend bool operator==(const AlgebraicValue&, const AlgebraicValue&) = default;
};

using AngleEntry = std::variant<Rational, AlgebraicValue>;

/// The inverse angles (alpha^-1, beta^-1, gamma^-1). A signature entry of
/// infinity corresponds to the value 0. Either all three entries are exact
/// values or the whole triple is Generic (algebraically independent
/// transcendentals); mixing is not representable.
class AngleParams {
public:
    static AngleParams generic() { return AngleParams(); }

    static AngleParams exact(Rational inv_alpha, Rational inv_beta, Rational inv_gamma)
    {
        return AngleParams(std::array<AngleEntry, 3>{std::move(inv_alpha), std::move(inv_beta),
                                                     std::move(inv_gamma)});
    }

    static AngleParams from_entries(std::array<AngleEntry, 3> entries) { return AngleParams(std::move(entries)); }

    bool is_generic() const { return !entries_.has_value(); }

    bool is_rational() const
    {
        if (!entries_) {
            return false;
        }
        for (const auto& e : *entries_) {
            if (!std::holds_alternative<Rational>(e)) {
                return false;
            }
        }
        return true;
    }

    /// Entries in (alpha, beta, gamma) order; throws for Generic.
    const std::array<AngleEntry, 3>& entries() const
    {
        if (!entries_) {
            throw UnsupportedParams("generic parameters have no exact entries");
        }
        return *entries_;
    }

    /// Rational entries (alpha, beta, gamma); throws UnsupportedParams otherwise.
    std::array<Rational, 3> rational_entries() const
    {
        if (!entries_) {
            throw UnsupportedParams("exact parameter values required, got generic");
        }
        std::array<Rational, 3> out;
        for (std::size_t i = 0; i < 3; ++i) {
            if (const auto* q = std::get_if<Rational>(&(*entries_)[i])) {
                out[i] = *q;
            } else {
                throw UnsupportedParams("irrational parameter '" + std::get<AlgebraicValue>((*entries_)[i]).text +
                                        "' is not supported by the exact procedures");
            }
        }
        return out;
    }

    friend bool operator==(const AngleParams&, const AngleParams&) = default;

private:
    AngleParams() = default;
    explicit AngleParams(std::array<AngleEntry, 3> e) : entries_(std::move(e)) {}

    std::optional<std::array<AngleEntry, 3>> entries_;
};

/// Exponent differences of psi'' + R psi / 2 = 0 at 0, 1 and infinity.
struct ExponentTriple {
    Rational at0;
    Rational at1;
    Rational at_inf;

    friend bool operator==(const ExponentTriple&, const ExponentTriple&) = default;
};

/// Parameters of t(1-t)y'' + (c - (a+b+1)t)y' - ab y = 0.
struct HGParams {
    Rational a;
    Rational b;
    Rational c;

    /// Exponent differences of the hypergeometric equation: 1-c, c-a-b, a-b.
    ExponentTriple exponent_differences() const { return {1 - c, c - a - b, a - b}; }

    friend bool operator==(const HGParams&, const HGParams&) = default;
};

/// psi'' + first_order psi' + zeroth_order psi = 0.
struct ODECoefficients {
    RatFunc first_order;
    RatFunc zeroth_order;
};

inline RatFunc build_R(const AngleParams& params)
{
    const auto [ia, ib, ic] = params.rational_entries();
    const Rational a2 = ia * ia, b2 = ib * ib, c2 = ic * ic;
    const RatFunc y = RatFunc::identity();
    const RatFunc y1 = y - RatFunc::constant(1);
    const RatFunc one = RatFunc::constant(1);
    const RatFunc sum = Rational(1 - b2) * (one / (y * y)) + Rational(1 - c2) * (one / (y1 * y1)) +
                        Rational(b2 + c2 - a2 - 1) * (one / (y * y1));
    return Rational(1, 2) * sum;
}

inline ExponentTriple exponent_differences(const AngleParams& params)
{
    const auto [ia, ib, ic] = params.rational_entries();
    return {ib, ic, ia};
}

inline HGParams to_hypergeometric(const AngleParams& params)
{
    const auto [ia, ib, ic] = params.rational_entries();
    HGParams hg{Rational(1 + ia - ib - ic) / 2, Rational(1 - ia - ib - ic) / 2, 1 - ib};
    if (hg.exponent_differences() != exponent_differences(params)) {
        throw Error("hypergeometric reduction failed its exponent cross-check");
    }
    return hg;
}

/// The linearization psi'' + R/2 psi = 0.
inline ODECoefficients linear_ode(const RatFunc& r)
{
    return {RatFunc(), Rational(1, 2) * r};
}

/// "generic", or three comma-separated entries each either a fraction or
/// sqrt(p/q). A square root of a rational square collapses to a Rational.
inline AngleParams parse_angle_params(std::string_view text)
{
    std::size_t lead = 0;
    while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead]))) {
        ++lead;
    }
    std::size_t end = text.size();
    while (end > lead && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
        --end;
    }
    if (text.substr(lead, end - lead) == "generic") {
        return AngleParams::generic();
    }
    std::array<AngleEntry, 3> entries;
    std::size_t start = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t comma = text.find(',', start);
        if (i < 2 && comma == std::string_view::npos) {
            throw ParseError("expected three comma-separated entries", text.size());
        }
        if (i == 2 && comma != std::string_view::npos) {
            throw ParseError("more than three entries", comma);
        }
        const std::size_t stop = i < 2 ? comma : text.size();
        std::string_view field = text.substr(start, stop - start);
        std::size_t a = 0;
        while (a < field.size() && std::isspace(static_cast<unsigned char>(field[a]))) {
            ++a;
        }
        if (field.substr(a).starts_with("generic")) {
            throw ParseError("generic must replace the whole triple", start + a);
        }
        if (field.substr(a).starts_with("sqrt(")) {
            const std::size_t close = field.rfind(')');
            if (close == std::string_view::npos || close < a + 5) {
                throw ParseError("unterminated sqrt(", start + a);
            }
            for (std::size_t k = close + 1; k < field.size(); ++k) {
                if (!std::isspace(static_cast<unsigned char>(field[k]))) {
                    throw ParseError("unexpected character after sqrt(...)", start + k);
                }
            }
            const Rational radicand = parse_rational(field.substr(a + 5, close - a - 5), start + a + 5);
            if (radicand < 0) {
                throw ParseError("negative radicand", start + a + 5);
            }
            if (mpz_perfect_square_p(radicand.get_num_mpz_t()) && mpz_perfect_square_p(radicand.get_den_mpz_t())) {
                entries[i] = Rational(sqrt(Integer(radicand.get_num())), sqrt(Integer(radicand.get_den())));
            } else {
                entries[i] = AlgebraicValue{"sqrt(" + to_string(radicand) + ")"};
            }
        } else {
            entries[i] = parse_rational(field, start);
        }
        start = stop + 1;
    }
    return AngleParams::from_entries(std::move(entries));
}

inline std::string to_string(const AngleParams& params)
{
    if (params.is_generic()) {
        return "generic";
    }
    std::string out;
    for (const auto& e : params.entries()) {
        if (!out.empty()) {
            out += ",";
        }
        if (const auto* q = std::get_if<Rational>(&e)) {
            out += to_string(*q);
        } else {
            out += std::get<AlgebraicValue>(e).text;
        }
    }
    return out;
}

} // namespace schwarz
