#pragma once

// Local power-series solutions of psi'' + R psi / 2 = 0 and residual
// checks of the Riccati equation u' + u^2 + R/2 = 0, the principal
// equation S_y(t) = R(y), and the Schwarzian equation
// S_t(y) + (y')^2 R(y) = 0 for the inverse of t.
//
// Convention: with initial data (psi1, psi1') = (1, 0) and
// (psi2, psi2') = (0, 1) the quotient psi1/psi2 has a pole at the base
// point, so the Schwarz map is taken as t = psi2/psi1 instead. The two
// differ by the Mobius map t -> 1/t and have the same Schwarzian.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "errors.hpp"
#include "ratfunc.hpp"
#include "schwarzian.hpp"
#include "series.hpp"

namespace schwarz {

using Complex = std::complex<double>;

/// Complex roots of a polynomial (companion-matrix eigenvalues).
inline std::vector<Complex> complex_roots(const Poly& p)
{
    const long d = p.degree();
    if (d <= 0) {
        return {};
    }
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
    const double lead = p.leading().get_d();
    for (long i = 0; i < d; ++i) {
        companion(0, i) = -p.coeff(static_cast<std::size_t>(d - 1 - i)).get_d() / lead;
        if (i + 1 < d) {
            companion(i + 1, i) = 1.0;
        }
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<Complex> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + d);
    return roots;
}

/// Distance from z to the nearest finite pole of f (infinity if none).
inline double distance_to_nearest_pole(const RatFunc& f, Complex z)
{
    double best = std::numeric_limits<double>::infinity();
    for (const Complex& root : complex_roots(f.den())) {
        best = std::min(best, std::abs(z - root));
    }
    return best;
}

/// Fundamental pair at base: psi1 with (1, 0), psi2 with (0, 1) initial
/// data, coefficients from (n+2)(n+1) c_{n+2} = -sum_k f_k c_{n-k}, f = R/2.
template <class Scalar>
std::pair<TruncatedSeries<Scalar>, TruncatedSeries<Scalar>> series_solve_linear(const RatFunc& r, const Scalar& base,
                                                                                 int order)
{
    if (order < 2) {
        throw DomainError("series_solve_linear needs order >= 2");
    }
    const auto half_r = expand<Scalar>(Rational(1, 2) * r, base, order);
    const auto n = static_cast<std::size_t>(order) + 1;
    auto solve = [&](Scalar c0, Scalar c1) {
        std::vector<Scalar> c(n, Scalar(0));
        c[0] = c0;
        c[1] = c1;
        for (std::size_t k = 0; k + 2 < n; ++k) {
            Scalar acc(0);
            for (std::size_t j = 0; j <= k; ++j) {
                acc += half_r[j] * c[k - j];
            }
            c[k + 2] = -acc / Scalar(static_cast<long>((k + 2) * (k + 1)));
        }
        return TruncatedSeries<Scalar>(base, std::move(c));
    };
    return {solve(Scalar(1), Scalar(0)), solve(Scalar(0), Scalar(1))};
}

/// psi1 psi2' - psi2 psi1' as a series (order drops by one).
template <class Scalar>
TruncatedSeries<Scalar> wronskian(const TruncatedSeries<Scalar>& psi1, const TruncatedSeries<Scalar>& psi2)
{
    return psi1 * psi2.derivative() - psi2 * psi1.derivative();
}

/// Local solution t = psi2/psi1 of S_y(t) = R(y), normalized t(base) = 0,
/// t'(base) = 1.
template <class Scalar>
TruncatedSeries<Scalar> schwarz_map(const RatFunc& r, const Scalar& base, int order)
{
    auto [psi1, psi2] = series_solve_linear<Scalar>(r, base, order);
    return psi2 / psi1;
}

struct ResidualReport {
    std::vector<Complex> sample_points;
    double max_abs_residual = 0.0;
    int truncation_order = 0;

    friend bool operator==(const ResidualReport&, const ResidualReport&) = default;
};

/// Deterministic sample set: the center plus `per_ring` points on each of
/// the circles of radius `radius` and `radius / 2`.
inline std::vector<Complex> sample_disk(Complex center, double radius, int per_ring = 16)
{
    std::vector<Complex> pts{center};
    for (const double rho : {radius, radius / 2}) {
        for (int i = 0; i < per_ring; ++i) {
            const double angle = 2 * std::numbers::pi * (i + 0.5) / per_ring;
            pts.push_back(center + std::polar(rho, angle));
        }
    }
    return pts;
}

/// A quarter of the distance from base to the nearest pole of r.
inline double default_sample_radius(const RatFunc& r, Complex base)
{
    const double d = distance_to_nearest_pole(r, base);
    return std::isfinite(d) ? d / 4 : 0.25;
}

namespace detail {

inline void require_regular_point(const RatFunc& r, Complex base)
{
    if (distance_to_nearest_pole(r, base) < 1e-12) {
        throw DomainError("base point is a pole of R");
    }
}

/// S_tau(J) + J'(tau)^2 R(J(tau)) at each sample point.
inline ResidualReport star_residual(const PowerSeries& j, const RatFunc& r, const std::vector<Complex>& pts)
{
    ResidualReport rep{pts, 0.0, j.order()};
    for (const Complex& tau : pts) {
        const Complex d1 = j.derivative_at(1, tau);
        const Complex d2 = j.derivative_at(2, tau);
        const Complex d3 = j.derivative_at(3, tau);
        const Complex h = d2 / d1;
        const Complex s = d3 / d1 - 1.5 * h * h;
        const Complex res = s + d1 * d1 * r.eval(j(tau));
        rep.max_abs_residual = std::max(rep.max_abs_residual, std::abs(res));
    }
    return rep;
}

} // namespace detail

/// max |S_y(t) - R(y)| over the sample disk, t = schwarz_map(r, base, order).
inline ResidualReport residual_principal(const RatFunc& r, Complex base, int order,
                                         std::optional<double> radius = std::nullopt)
{
    detail::require_regular_point(r, base);
    const PowerSeries t = schwarz_map<Complex>(r, base, order);
    ResidualReport rep{sample_disk(base, radius.value_or(default_sample_radius(r, base))), 0.0, order};
    for (const Complex& y : rep.sample_points) {
        const Complex d1 = t.derivative_at(1, y);
        const Complex h = t.derivative_at(2, y) / d1;
        const Complex s = t.derivative_at(3, y) / d1 - 1.5 * h * h;
        rep.max_abs_residual = std::max(rep.max_abs_residual, std::abs(s - r.eval(y)));
    }
    return rep;
}

/// max |u' + u^2 + R/2| with u = psi1'/psi1.
inline ResidualReport residual_riccati(const RatFunc& r, Complex base, int order,
                                       std::optional<double> radius = std::nullopt)
{
    if (order < 5) {
        throw DomainError("residual_riccati needs order >= 5");
    }
    detail::require_regular_point(r, base);
    const auto psi1 = series_solve_linear<Complex>(r, base, order).first;
    ResidualReport rep{sample_disk(base, radius.value_or(default_sample_radius(r, base))), 0.0, order};
    for (const Complex& y : rep.sample_points) {
        const Complex p0 = psi1(y);
        const Complex u = psi1.derivative_at(1, y) / p0;
        const Complex du = psi1.derivative_at(2, y) / p0 - u * u;
        rep.max_abs_residual = std::max(rep.max_abs_residual, std::abs(du + u * u + 0.5 * r.eval(y)));
    }
    return rep;
}

/// Residual of S_tau(J) + (J')^2 R(J) = 0 for J the inverse of the Schwarz
/// map, sampled around tau = t(base) = 0 at half the y-radius.
inline ResidualReport residual_star(const RatFunc& r, Complex base, int order,
                                    std::optional<double> radius = std::nullopt)
{
    detail::require_regular_point(r, base);
    const PowerSeries j = series_invert(schwarz_map<Complex>(r, base, order));
    const double rho = radius.value_or(default_sample_radius(r, base)) / 2;
    return detail::star_residual(j, r, sample_disk(j.base(), rho));
}

/// Builds J2 from the R_phi = schwarz_pullback(R, phi) equation, maps it by
/// J1 = phi(J2) and reports the residual of J1 in the R equation.
inline ResidualReport verify_pullback(const RatFunc& r, const RatFunc& phi, Complex base, int order,
                                      std::optional<double> radius = std::nullopt)
{
    const RatFunc r_phi = schwarz_pullback(r, phi);
    detail::require_regular_point(r_phi, base);
    detail::require_regular_point(phi, base);
    const PowerSeries phi_series = expand<Complex>(phi, base, order);
    if (std::abs(phi_series[1]) < 1e-12) {
        throw DomainError("phi is ramified at the base point; J2 cannot be transported");
    }
    const PowerSeries j2 = series_invert(schwarz_map<Complex>(r_phi, base, order));
    const PowerSeries j1 = series_compose(phi_series, j2);
    const double rho = radius.value_or(default_sample_radius(r_phi, base)) / 2;
    return detail::star_residual(j1, r, sample_disk(j1.base(), rho));
}

} // namespace schwarz
