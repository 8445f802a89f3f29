#pragma once

// Command implementations behind the schwarz CLI. Each returns a
// CommandResult; only elapsed_ms depends on the wall clock.

#include <chrono>
#include <optional>
#include <ostream>
#include <string>

#include "expr.hpp"
#include "records.hpp"

namespace schwarz {

namespace detail {

class Stopwatch {
public:
    std::int64_t elapsed_ms() const
    {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

} // namespace detail

inline CommandResult cmd_classify_equation(const std::string& inv_angles)
{
    const detail::Stopwatch clock;
    const AngleParams params = parse_angle_params(inv_angles);
    const MinimalityVerdict verdict = classify(params);
    return {"classify-equation", {{"inv_angles", to_string(params)}}, verdict, clock.elapsed_ms()};
}

/// Non-hyperbolic signatures get geometry only; the remaining fields are null.
inline CommandResult cmd_classify_group(const std::string& sig_text)
{
    const detail::Stopwatch clock;
    const Signature sig = parse_signature(sig_text);
    json result;
    if (geometry(sig) == Geometry::Hyperbolic) {
        result = group_report(sig);
    } else {
        result = {{"geometry", to_string(geometry(sig))}, {"arithmetic", nullptr}, {"maximal", nullptr},
                  {"in_m", nullptr}, {"in_w", nullptr}, {"special_polynomials", nullptr}};
    }
    return {"classify-group", {{"sig", sig.to_string()}}, result, clock.elapsed_ms()};
}

struct VerifyRequest {
    std::string kind; // principal, riccati, star or pullback
    std::optional<std::string> inv_angles;
    std::optional<std::string> rfunc;
    std::optional<std::string> phi;
    int order = 40;
    double tol = 1e-8;
    std::string base = "1/2";
    std::optional<double> radius;
};

/// result.pass is true when the maximal residual is below tol.
inline CommandResult cmd_verify(const VerifyRequest& req)
{
    const detail::Stopwatch clock;
    if (req.inv_angles.has_value() == req.rfunc.has_value()) {
        throw DomainError("exactly one of --inv-angles and --rfunc is required");
    }
    const RatFunc r = req.inv_angles ? build_R(parse_angle_params(*req.inv_angles)) : parse_ratfunc(*req.rfunc);
    const Complex base(parse_rational(req.base).get_d(), 0.0);

    json inputs = {{"kind", req.kind}, {"order", req.order}, {"tol", req.tol}, {"base", req.base},
                   {"r", to_string(r)}};
    if (req.inv_angles) {
        inputs["inv_angles"] = to_string(parse_angle_params(*req.inv_angles));
    }
    if (req.radius) {
        inputs["radius"] = *req.radius;
    }

    ResidualReport report;
    if (req.kind == "principal") {
        report = residual_principal(r, base, req.order, req.radius);
    } else if (req.kind == "riccati") {
        report = residual_riccati(r, base, req.order, req.radius);
    } else if (req.kind == "star") {
        report = residual_star(r, base, req.order, req.radius);
    } else if (req.kind == "pullback") {
        if (!req.phi) {
            throw DomainError("verify pullback needs --phi");
        }
        const RatFunc phi = parse_expression(*req.phi);
        inputs["phi"] = to_string(phi);
        report = verify_pullback(r, phi, base, req.order, req.radius);
    } else {
        throw DomainError("unknown verification kind '" + req.kind + "'");
    }
    json result = {{"residual", report}, {"tolerance", req.tol}, {"pass", report.max_abs_residual < req.tol}};
    return {"verify", inputs, result, clock.elapsed_ms()};
}

/// Reduced fractions in (0,1) with denominator <= max_den, ascending.
inline std::vector<Rational> fractions_up_to(long max_den)
{
    std::vector<Rational> out;
    for (long q = 2; q <= max_den; ++q) {
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) == 1) {
                out.push_back(make_rational(p, q));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// One record for a triple: Kimura verdict, oracle class, agreement
/// (null when the oracle is inconclusive).
inline json sweep_record(const AngleParams& params)
{
    const MinimalityVerdict verdict = classify(params);
    json rec = {{"inv_angles", to_string(params)}, {"kimura", verdict_name(verdict)}};
    try {
        const ProjectiveClass oracle = classify_projective(monodromy(params));
        rec["oracle"] = oracle;
        rec["agreement"] = oracle.integrable() == !is_strongly_minimal(verdict);
    } catch (const Inconclusive& e) {
        rec["oracle"] = {{"class", "Inconclusive"}, {"reason", e.what()}};
        rec["agreement"] = nullptr;
    }
    return rec;
}

/// Unordered triples (both classifiers are symmetric in the entries),
/// written as newline-delimited records in ascending order.
inline CommandResult cmd_sweep(long max_den, std::ostream& records, const std::optional<std::string>& out_path = {})
{
    const detail::Stopwatch clock;
    if (max_den < 2) {
        throw DomainError("sweep needs --max-den >= 2");
    }
    const auto vals = fractions_up_to(max_den);
    std::int64_t total = 0, agree = 0, disagree = 0, inconclusive = 0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        for (std::size_t j = i; j < vals.size(); ++j) {
            for (std::size_t k = j; k < vals.size(); ++k) {
                const json rec = sweep_record(AngleParams::exact(vals[i], vals[j], vals[k]));
                records << rec.dump() << '\n';
                ++total;
                if (rec["agreement"].is_null()) {
                    ++inconclusive;
                } else if (rec["agreement"].get<bool>()) {
                    ++agree;
                } else {
                    ++disagree;
                }
            }
        }
    }
    if (!records) {
        throw Error("failed writing sweep records");
    }
    json inputs = {{"max_den", max_den}, {"out", out_path ? json(*out_path) : json(nullptr)}};
    json result = {{"records", total}, {"agreements", agree}, {"disagreements", disagree},
                   {"inconclusive", inconclusive}};
    return {"sweep", inputs, result, clock.elapsed_ms()};
}

} // namespace schwarz
