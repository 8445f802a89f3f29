#pragma once

// Structured records for verdicts, reports and command results. Exact
// values are written as "p/q" strings, complex numbers as [re, im].

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "groups.hpp"
#include "kimura.hpp"
#include "monodromy.hpp"
#include "numerics.hpp"

namespace schwarz {

using nlohmann::json;

namespace detail {

inline json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

inline json matrix_to_json(const Matrix2& m)
{
    return json::array({json::array({complex_to_json(m(0, 0)), complex_to_json(m(0, 1))}),
                        json::array({complex_to_json(m(1, 0)), complex_to_json(m(1, 1))})});
}

inline Matrix2 matrix_from_json(const json& j)
{
    Matrix2 m;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            m(r, c) = complex_from_json(j.at(r).at(c));
        }
    }
    return m;
}

inline Rational rational_from_json(const json& j) { return parse_rational(j.get<std::string>()); }

inline const char* negated_name(NegatedEntry n)
{
    switch (n) {
    case NegatedEntry::None: return "none";
    case NegatedEntry::Alpha: return "alpha";
    case NegatedEntry::Beta: return "beta";
    case NegatedEntry::Gamma: return "gamma";
    }
    return "none";
}

inline NegatedEntry negated_from_name(const std::string& s)
{
    if (s == "none") return NegatedEntry::None;
    if (s == "alpha") return NegatedEntry::Alpha;
    if (s == "beta") return NegatedEntry::Beta;
    if (s == "gamma") return NegatedEntry::Gamma;
    throw ParseError("unknown negated entry '" + s + "'", 0);
}

} // namespace detail

inline void to_json(json& j, const KimuraWitness& w)
{
    if (const auto* c1 = std::get_if<Condition1Witness>(&w)) {
        // signs in (at0, at1, at_inf) order, i.e. (beta, gamma, alpha)
        std::array<int, 3> signs{1, 1, 1};
        if (c1->negated == NegatedEntry::Beta) signs[0] = -1;
        if (c1->negated == NegatedEntry::Gamma) signs[1] = -1;
        if (c1->negated == NegatedEntry::Alpha) signs[2] = -1;
        j = {{"kind", "Condition1"}, {"negated", detail::negated_name(c1->negated)},
             {"sum", to_string(c1->value)}, {"row", nullptr}, {"signs", signs}, {"permutation", nullptr},
             {"l", nullptr}, {"m", nullptr}, {"n", nullptr}, {"parity_used", false}};
        return;
    }
    const auto& c2 = std::get<Condition2Witness>(w);
    j = {{"kind", "Condition2"}, {"row", c2.row}, {"signs", c2.signs}, {"permutation", c2.permutation},
         {"parity_used", c2.parity_used}};
    const char* names[] = {"l", "m", "n"};
    for (std::size_t i = 0; i < 3; ++i) {
        j[names[i]] = c2.shifts[i] ? json(c2.shifts[i]->get_str()) : json(nullptr);
    }
}

inline void from_json(const json& j, KimuraWitness& w)
{
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "Condition1") {
        w = Condition1Witness{detail::negated_from_name(j.at("negated").get<std::string>()),
                              detail::rational_from_json(j.at("sum"))};
        return;
    }
    if (kind != "Condition2") {
        throw ParseError("unknown witness kind '" + kind + "'", 0);
    }
    Condition2Witness c2{j.at("row").get<int>(), j.at("signs").get<std::array<int, 3>>(),
                         j.at("permutation").get<std::array<int, 3>>(), {}, j.at("parity_used").get<bool>()};
    const char* names[] = {"l", "m", "n"};
    for (std::size_t i = 0; i < 3; ++i) {
        const json& s = j.at(names[i]);
        if (!s.is_null()) {
            c2.shifts[i] = Integer(s.get<std::string>());
        }
    }
    w = c2;
}

inline std::string verdict_name(const MinimalityVerdict& v)
{
    if (std::holds_alternative<StronglyMinimal>(v)) return "StronglyMinimal";
    if (std::holds_alternative<GenericStronglyMinimal>(v)) return "GenericStronglyMinimal";
    return "NotStronglyMinimal";
}

inline void to_json(json& j, const MinimalityVerdict& v)
{
    j = {{"verdict", verdict_name(v)}};
    if (const auto* n = std::get_if<NotStronglyMinimal>(&v)) {
        j["witness"] = n->witness;
    }
}

inline void from_json(const json& j, MinimalityVerdict& v)
{
    const auto name = j.at("verdict").get<std::string>();
    if (name == "StronglyMinimal") {
        v = StronglyMinimal{};
    } else if (name == "GenericStronglyMinimal") {
        v = GenericStronglyMinimal{};
    } else if (name == "NotStronglyMinimal") {
        v = NotStronglyMinimal{j.at("witness").get<KimuraWitness>()};
    } else {
        throw ParseError("unknown verdict '" + name + "'", 0);
    }
}

inline void to_json(json& j, const GroupReport& r)
{
    j = {{"geometry", to_string(r.geometry)}, {"arithmetic", r.arithmetic}, {"maximal", r.maximal},
         {"in_m", r.in_M}, {"in_w", r.in_W}, {"special_polynomials", to_string(r.special_polynomials)}};
}

inline void from_json(const json& j, GroupReport& r)
{
    const auto g = j.at("geometry").get<std::string>();
    const auto s = j.at("special_polynomials").get<std::string>();
    r.geometry = g == "Spherical" ? Geometry::Spherical : g == "Euclidean" ? Geometry::Euclidean : Geometry::Hyperbolic;
    r.arithmetic = j.at("arithmetic").get<bool>();
    r.maximal = j.at("maximal").get<bool>();
    r.in_M = j.at("in_m").get<bool>();
    r.in_W = j.at("in_w").get<bool>();
    r.special_polynomials = s == "InfinitelyMany"        ? SpecialPolynomials::InfinitelyMany
                            : s == "FinitelyConstrained" ? SpecialPolynomials::FinitelyConstrained
                                                         : SpecialPolynomials::None;
}

inline void to_json(json& j, const ResidualReport& r)
{
    json pts = json::array();
    for (const Complex& z : r.sample_points) {
        pts.push_back(detail::complex_to_json(z));
    }
    j = {{"sample_points", pts}, {"max_abs_residual", r.max_abs_residual}, {"truncation_order", r.truncation_order}};
}

inline void from_json(const json& j, ResidualReport& r)
{
    r.sample_points.clear();
    for (const json& p : j.at("sample_points")) {
        r.sample_points.push_back(detail::complex_from_json(p));
    }
    r.max_abs_residual = j.at("max_abs_residual").get<double>();
    r.truncation_order = j.at("truncation_order").get<int>();
}

inline void to_json(json& j, const MonodromyRep& r)
{
    j = {{"m0", detail::matrix_to_json(r.m0)}, {"m1", detail::matrix_to_json(r.m1)},
         {"estimated_error", r.estimated_error}, {"resonant", r.resonant}};
}

inline void from_json(const json& j, MonodromyRep& r)
{
    r.m0 = detail::matrix_from_json(j.at("m0"));
    r.m1 = detail::matrix_from_json(j.at("m1"));
    r.estimated_error = j.at("estimated_error").get<double>();
    r.resonant = j.at("resonant").get<bool>();
}

inline void to_json(json& j, const ProjectiveClass& c)
{
    const auto* finite = std::get_if<FiniteGroup>(&c.kind);
    j = {{"class", to_string(c)},
         {"order", finite ? json(finite->order) : json(nullptr)},
         {"tolerance_used", c.tolerance_used},
         {"caps", {{"max_order", c.caps.max_order}, {"max_word_length", c.caps.max_word_length}}}};
}

inline void from_json(const json& j, ProjectiveClass& c)
{
    const auto name = j.at("class").get<std::string>();
    if (name == "Finite") {
        c.kind = FiniteGroup{j.at("order").get<std::size_t>()};
    } else if (name == "Dihedral") {
        c.kind = Dihedral{};
    } else if (name == "Triangularizable") {
        c.kind = Triangularizable{};
    } else if (name == "Dense") {
        c.kind = Dense{};
    } else {
        throw ParseError("unknown projective class '" + name + "'", 0);
    }
    c.tolerance_used = j.at("tolerance_used").get<double>();
    c.caps.max_order = j.at("caps").at("max_order").get<std::size_t>();
    c.caps.max_word_length = j.at("caps").at("max_word_length").get<int>();
}

struct CommandResult {
    std::string command;
    json inputs;
    json result;
    std::int64_t elapsed_ms = 0;

    friend bool operator==(const CommandResult&, const CommandResult&) = default;
};

inline void to_json(json& j, const CommandResult& r)
{
    j = {{"command", r.command}, {"inputs", r.inputs}, {"result", r.result}, {"elapsed_ms", r.elapsed_ms}};
}

inline void from_json(const json& j, CommandResult& r)
{
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.result = j.at("result");
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
}

} // namespace schwarz
