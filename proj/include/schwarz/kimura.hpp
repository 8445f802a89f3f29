#pragma once

// Exact decision procedure for strong minimality of the Schwarz triangle
// equation.
//
// The equation is projectively equivalent to the hypergeometric equation
// with exponent differences (beta^-1, gamma^-1, alpha^-1) at (0, 1, inf).
// It fails to be strongly minimal exactly when the Riccati equation
// u' + u^2 + R/2 = 0 has an algebraic solution, i.e. when the linear
// equation is Liouville integrable, and Kimura's theorem characterizes
// that through the exponent differences:
//
//   (1) one of  a+b+c, -a+b+c, a-b+c, a+b-c  is an odd integer, or
//   (2) (+-a, +-b, +-c), in some order, lies in one of the fifteen
//       classes of Schwarz's list below (up to integer shifts l, m, n,
//       with l+m+n even where the row says so).
//
// The classifier uses both directions of this equivalence.

#include <algorithm>
#include <array>
#include <optional>
#include <variant>

#include "errors.hpp"
#include "rational.hpp"
#include "triangle.hpp"

namespace schwarz {

/// Which entry is negated in the signed sum of condition (1).
enum class NegatedEntry { None, Alpha, Beta, Gamma };

struct Condition1Witness {
    NegatedEntry negated;
    Rational value; // the odd integer

    friend bool operator==(const Condition1Witness&, const Condition1Witness&) = default;
};

struct Condition2Witness {
    int row;                           // 1..15
    std::array<int, 3> signs;          // +1/-1 applied to e.at0, e.at1, e.at_inf
    std::array<int, 3> permutation;    // permutation[col] = index of the entry in that column
    std::array<std::optional<Integer>, 3> shifts; // (l, m, n); nullopt for an "arbitrary" column
    bool parity_used;

    friend bool operator==(const Condition2Witness&, const Condition2Witness&) = default;
};

using KimuraWitness = std::variant<Condition1Witness, Condition2Witness>;

struct StronglyMinimal {
    friend bool operator==(const StronglyMinimal&, const StronglyMinimal&) = default;
};
struct NotStronglyMinimal {
    KimuraWitness witness;
    friend bool operator==(const NotStronglyMinimal&, const NotStronglyMinimal&) = default;
};
struct GenericStronglyMinimal {
    friend bool operator==(const GenericStronglyMinimal&, const GenericStronglyMinimal&) = default;
};

using MinimalityVerdict = std::variant<StronglyMinimal, NotStronglyMinimal, GenericStronglyMinimal>;

namespace detail {

struct SchwarzRow {
    // Fractional parts per column as (num, den); den == 0 marks "arbitrary".
    std::array<std::array<int, 2>, 3> columns;
    bool parity;
};

// Kimura's form of Schwarz's list.
inline constexpr std::array<SchwarzRow, 15> schwarz_rows{{
    {{{{1, 2}, {1, 2}, {0, 0}}}, false},
    {{{{1, 2}, {1, 3}, {1, 3}}}, false},
    {{{{2, 3}, {1, 3}, {1, 3}}}, true},
    {{{{1, 2}, {1, 3}, {1, 4}}}, false},
    {{{{2, 3}, {1, 4}, {1, 4}}}, true},
    {{{{1, 2}, {1, 3}, {1, 5}}}, false},
    {{{{2, 5}, {1, 3}, {1, 3}}}, true},
    {{{{2, 3}, {1, 5}, {1, 5}}}, true},
    {{{{1, 2}, {2, 5}, {1, 5}}}, true},
    {{{{3, 5}, {1, 3}, {1, 5}}}, true},
    {{{{2, 5}, {2, 5}, {2, 5}}}, true},
    {{{{2, 3}, {1, 3}, {1, 5}}}, true},
    {{{{4, 5}, {1, 5}, {1, 5}}}, true},
    {{{{1, 2}, {2, 5}, {1, 3}}}, true},
    {{{{3, 5}, {2, 5}, {1, 3}}}, true},
}};

inline std::array<Rational, 3> as_array(const ExponentTriple& e) { return {e.at0, e.at1, e.at_inf}; }

inline bool denominators_compatible(const std::array<Rational, 3>& values, const SchwarzRow& row)
{
    std::array<bool, 3> used{};
    for (const auto& column : row.columns) {
        if (column[1] == 0) {
            continue;
        }
        bool found = false;
        for (std::size_t i = 0; i < 3 && !found; ++i) {
            if (!used[i] && values[i].get_den() == static_cast<unsigned long>(column[1])) {
                used[i] = found = true;
            }
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

/// Tries one row under fixed signs and column assignment.
inline std::optional<Condition2Witness> match_row(const std::array<Rational, 3>& signed_values, int row_index,
                                                  const std::array<int, 3>& signs,
                                                  const std::array<int, 3>& permutation)
{
    const SchwarzRow& row = schwarz_rows[static_cast<std::size_t>(row_index)];
    std::array<std::optional<Integer>, 3> shifts;
    Integer shift_sum = 0;
    for (std::size_t col = 0; col < 3; ++col) {
        const auto [num, den] = row.columns[col];
        if (den == 0) {
            continue;
        }
        const Rational diff = signed_values[static_cast<std::size_t>(permutation[col])] - make_rational(num, den);
        if (!is_integer(diff)) {
            return std::nullopt;
        }
        shifts[col] = diff.get_num();
        shift_sum += diff.get_num();
    }
    if (row.parity && mpz_odd_p(shift_sum.get_mpz_t()) != 0) {
        return std::nullopt;
    }
    return Condition2Witness{row_index + 1, signs, permutation, shifts, row.parity};
}

} // namespace detail

/// The four signed sums a+b+c, -a+b+c, a-b+c, a+b-c over (a, b, c) =
/// (alpha^-1, beta^-1, gamma^-1), first odd integer found.
inline std::optional<Condition1Witness> check_condition1(const ExponentTriple& e)
{
    const Rational& a = e.at_inf;
    const Rational& b = e.at0;
    const Rational& c = e.at1;
    const std::array<std::pair<NegatedEntry, Rational>, 4> sums{{
        {NegatedEntry::None, a + b + c},
        {NegatedEntry::Alpha, -a + b + c},
        {NegatedEntry::Beta, a - b + c},
        {NegatedEntry::Gamma, a + b - c},
    }};
    for (const auto& [which, value] : sums) {
        if (is_odd_integer(value)) {
            return Condition1Witness{which, value};
        }
    }
    return std::nullopt;
}

/// Sweeps rows, then the 8 sign choices, then the 6 column assignments
/// (lexicographic); returns the first match.
inline std::optional<Condition2Witness> check_condition2(const ExponentTriple& e)
{
    const auto values = detail::as_array(e);
    for (int row = 0; row < static_cast<int>(detail::schwarz_rows.size()); ++row) {
        // v - f is an integer only if v and f share their denominator.
        if (!detail::denominators_compatible(values, detail::schwarz_rows[static_cast<std::size_t>(row)])) {
            continue;
        }
        for (unsigned mask = 0; mask < 8; ++mask) {
            std::array<int, 3> signs{};
            std::array<Rational, 3> signed_values;
            for (std::size_t i = 0; i < 3; ++i) {
                signs[i] = ((mask >> i) & 1U) != 0 ? -1 : 1;
                signed_values[i] = signs[i] < 0 ? Rational(-values[i]) : values[i];
            }
            std::array<int, 3> perm{0, 1, 2};
            do {
                if (auto w = detail::match_row(signed_values, row, signs, perm)) {
                    return w;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    return std::nullopt;
}

/// Re-checks a witness against e by direct substitution.
inline bool verify_witness(const ExponentTriple& e, const KimuraWitness& witness)
{
    if (const auto* w1 = std::get_if<Condition1Witness>(&witness)) {
        const Rational& a = e.at_inf;
        const Rational& b = e.at0;
        const Rational& c = e.at1;
        Rational value;
        switch (w1->negated) {
        case NegatedEntry::None: value = a + b + c; break;
        case NegatedEntry::Alpha: value = -a + b + c; break;
        case NegatedEntry::Beta: value = a - b + c; break;
        case NegatedEntry::Gamma: value = a + b - c; break;
        }
        return value == w1->value && is_odd_integer(value);
    }
    const auto& w2 = std::get<Condition2Witness>(witness);
    if (w2.row < 1 || w2.row > 15) {
        return false;
    }
    std::array<int, 3> sorted = w2.permutation;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 3>{0, 1, 2}) {
        return false;
    }
    const auto& row = detail::schwarz_rows[static_cast<std::size_t>(w2.row - 1)];
    const auto values = detail::as_array(e);
    Integer shift_sum = 0;
    for (std::size_t col = 0; col < 3; ++col) {
        const auto [num, den] = row.columns[col];
        if (den == 0) {
            if (w2.shifts[col]) {
                return false;
            }
            continue;
        }
        if (!w2.shifts[col]) {
            return false;
        }
        const auto idx = static_cast<std::size_t>(w2.permutation[col]);
        const Rational v = w2.signs[idx] < 0 ? Rational(-values[idx]) : values[idx];
        if (v != make_rational(num, den) + Rational(*w2.shifts[col])) {
            return false;
        }
        shift_sum += *w2.shifts[col];
    }
    if (row.parity != w2.parity_used) {
        return false;
    }
    return !row.parity || mpz_even_p(shift_sum.get_mpz_t()) != 0;
}

/// Generic parameters are strongly minimal; exact rational parameters are
/// decided by Kimura's conditions. Exact irrational entries throw
/// UnsupportedParams: membership of an irrational in a shifted lattice
/// cannot be certified without algebraic-number arithmetic.
inline MinimalityVerdict classify(const AngleParams& params)
{
    if (params.is_generic()) {
        return GenericStronglyMinimal{};
    }
    const ExponentTriple e = exponent_differences(params);
    if (auto w = check_condition1(e)) {
        return NotStronglyMinimal{*w};
    }
    if (auto w = check_condition2(e)) {
        return NotStronglyMinimal{*w};
    }
    return StronglyMinimal{};
}

inline bool is_strongly_minimal(const MinimalityVerdict& v) { return !std::holds_alternative<NotStronglyMinimal>(v); }

} // namespace schwarz
