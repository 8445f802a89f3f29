#pragma once

// Numerical monodromy of psi'' + R psi / 2 = 0 around 0 and 1, and a
// classifier for the projective monodromy group. This is an oracle
// independent of the exponent-difference arithmetic in kimura.hpp.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <deque>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "errors.hpp"
#include "numerics.hpp"
#include "triangle.hpp"

namespace schwarz {

using Matrix2 = Eigen::Matrix2cd;

struct ContinuationOptions {
    int order = 36;              // local Taylor order
    double step_fraction = 0.35; // step <= fraction * distance to nearest pole
    double min_pole_distance = 1e-6;
};

namespace detail {

/// Transfer matrix of the fundamental system from z to z + h, the columns
/// being (value, derivative) of the two solutions.
inline Matrix2 local_transfer(const RatFunc& r, Complex z, Complex h, int order)
{
    const auto [phi1, phi2] = series_solve_linear<Complex>(r, z, order);
    const Complex at = z + h;
    Matrix2 t;
    t << phi1(at), phi2(at), phi1.derivative_at(1, at), phi2.derivative_at(1, at);
    return t;
}

} // namespace detail

/// Continues the fundamental pair with identity initial data at path[0]
/// along the polyline. Column j of the result holds (value, derivative) of
/// the continued j-th solution at the last vertex; for a closed path this
/// is the monodromy matrix in the original basis.
inline Matrix2 continue_solution(const RatFunc& r, const std::vector<Complex>& path,
                                 const ContinuationOptions& opt = {})
{
    if (path.size() < 2) {
        throw DomainError("continuation path needs at least two points");
    }
    const std::vector<Complex> poles = complex_roots(r.den());
    auto pole_distance = [&](Complex z) {
        double best = std::numeric_limits<double>::infinity();
        for (const Complex& p : poles) {
            best = std::min(best, std::abs(z - p));
        }
        return best;
    };

    Matrix2 y = Matrix2::Identity();
    for (std::size_t seg = 0; seg + 1 < path.size(); ++seg) {
        Complex z = path[seg];
        const Complex target = path[seg + 1];
        while (std::abs(target - z) > 0.0) {
            const double dist = pole_distance(z);
            if (dist < opt.min_pole_distance) {
                throw DomainError("step-size underflow near a pole of R");
            }
            const double remaining = std::abs(target - z);
            const double len = std::min(remaining, opt.step_fraction * dist);
            const Complex h = len >= remaining ? target - z : (target - z) * (len / remaining);
            y = detail::local_transfer(r, z, h, opt.order) * y;
            z = len >= remaining ? target : z + h;
        }
    }
    return y;
}

/// continue_solution for closed paths only.
inline Matrix2 continue_loop(const RatFunc& r, const std::vector<Complex>& path, const ContinuationOptions& opt = {})
{
    if (path.size() < 2 || std::abs(path.front() - path.back()) > 1e-12) {
        throw DomainError("loop path is not closed");
    }
    return continue_solution(r, path, opt);
}

/// Positively oriented loop: base -> nearest point of the circle, once
/// around the circle (as a polygon), back to base.
struct LoopSpec {
    Complex base{0.5, 0.0};
    Complex center{0.0, 0.0};
    double radius = 0.25;
    int steps = 64;

    void validate() const
    {
        if (!(radius > 0.0 && radius < 0.5)) {
            throw DomainError("loop radius must lie in (0, 1/2)");
        }
        if (steps < 8) {
            throw DomainError("loop polygon needs at least 8 vertices");
        }
        if (std::abs(base - center) <= radius) {
            throw DomainError("loop base point must lie outside the circle");
        }
    }
};

inline std::vector<Complex> loop_path(const LoopSpec& spec)
{
    spec.validate();
    const Complex dir = (spec.base - spec.center) / std::abs(spec.base - spec.center);
    const double start = std::arg(dir);
    std::vector<Complex> path{spec.base};
    for (int i = 0; i <= spec.steps; ++i) {
        const double angle = start + 2 * std::numbers::pi * i / spec.steps;
        path.push_back(spec.center + std::polar(spec.radius, angle));
    }
    path.back() = path[1];
    path.push_back(spec.base);
    return path;
}

struct MonodromyOptions {
    Complex base{0.5, 0.0};
    double radius = 0.25;
    int polygon_steps = 64;
    ContinuationOptions continuation{};
};

/// Loop matrices around 0 and 1 in the basis with (1,0), (0,1) data at the
/// base point. M_inf = (M1 M0)^-1 is implied.
struct MonodromyRep {
    Matrix2 m0;
    Matrix2 m1;
    double estimated_error = 0.0;
    bool resonant = false; // some exponent difference is an integer; logarithmic terms possible

    friend bool operator==(const MonodromyRep&, const MonodromyRep&) = default;
};

inline MonodromyRep monodromy(const AngleParams& params, const MonodromyOptions& opt = {})
{
    const RatFunc r = build_R(params);
    const ExponentTriple e = exponent_differences(params);
    MonodromyRep rep;
    rep.m0 = continue_loop(r, loop_path({opt.base, {0.0, 0.0}, opt.radius, opt.polygon_steps}), opt.continuation);
    rep.m1 = continue_loop(r, loop_path({opt.base, {1.0, 0.0}, opt.radius, opt.polygon_steps}), opt.continuation);
    rep.estimated_error = std::max(std::abs(rep.m0.determinant() - 1.0), std::abs(rep.m1.determinant() - 1.0));
    rep.resonant = is_integer(e.at0) || is_integer(e.at1) || is_integer(e.at_inf);
    return rep;
}

struct ProjectiveCaps {
    std::size_t max_order = 120;
    int max_word_length = 20;

    friend bool operator==(const ProjectiveCaps&, const ProjectiveCaps&) = default;
};

struct FiniteGroup {
    std::size_t order;
    friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;
};
struct Dihedral {
    friend bool operator==(const Dihedral&, const Dihedral&) = default;
};
struct Triangularizable {
    friend bool operator==(const Triangularizable&, const Triangularizable&) = default;
};
struct Dense {
    friend bool operator==(const Dense&, const Dense&) = default;
};

struct ProjectiveClass {
    std::variant<FiniteGroup, Dihedral, Triangularizable, Dense> kind;
    double tolerance_used;
    ProjectiveCaps caps;

    /// Finite, dihedral or triangularizable: the equation is Liouville integrable.
    bool integrable() const { return !std::holds_alternative<Dense>(kind); }

    friend bool operator==(const ProjectiveClass&, const ProjectiveClass&) = default;
};

inline std::string to_string(const ProjectiveClass& c)
{
    return std::visit(
        [](const auto& k) -> std::string {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, FiniteGroup>) {
                return "Finite";
            } else if constexpr (std::is_same_v<K, Dihedral>) {
                return "Dihedral";
            } else if constexpr (std::is_same_v<K, Triangularizable>) {
                return "Triangularizable";
            } else {
                return "Dense";
            }
        },
        c.kind);
}

namespace detail {

inline bool projectively_equal(const Matrix2& a, const Matrix2& b, double tol)
{
    const double scale = std::max(1.0, a.norm());
    return std::min((a - b).norm(), (a + b).norm()) <= tol * scale;
}

/// Breadth-first closure of <a, b> in PSL2; the element list, and whether
/// it closed up within the caps.
inline std::pair<std::vector<Matrix2>, bool> projective_closure(const Matrix2& a, const Matrix2& b, double tol,
                                                                const ProjectiveCaps& caps)
{
    std::vector<Matrix2> elements{Matrix2::Identity()};
    std::deque<std::pair<std::size_t, int>> queue{{0, 0}};
    const std::array<const Matrix2*, 2> gens{&a, &b};
    while (!queue.empty()) {
        const auto [index, depth] = queue.front();
        queue.pop_front();
        if (depth >= caps.max_word_length) {
            return {elements, false};
        }
        for (const Matrix2* g : gens) {
            const Matrix2 next = elements[index] * *g;
            const bool seen = std::any_of(elements.begin(), elements.end(),
                                          [&](const Matrix2& m) { return projectively_equal(m, next, tol); });
            if (seen) {
                continue;
            }
            elements.push_back(next);
            if (elements.size() > caps.max_order) {
                return {elements, false};
            }
            queue.emplace_back(elements.size() - 1, depth + 1);
        }
    }
    return {elements, true};
}

/// True if g has infinite order in any finite primitive subgroup's sense:
/// elements of the tetrahedral, octahedral and icosahedral groups have
/// projective order <= 5, so tr^2 is one of 0, 1, 2, 3, 4, (3 +- sqrt5)/2,
/// and tr = +-2 only for +-I.
inline bool outside_primitive_finite(const Matrix2& g, double tol)
{
    const Complex t = g.trace();
    if (std::abs(t.imag()) > tol || std::abs(t.real()) > 2.0 + tol) {
        return true;
    }
    const double t2 = t.real() * t.real();
    const double sqrt5 = std::sqrt(5.0);
    for (const double allowed : {0.0, 1.0, 2.0, 3.0, (3.0 - sqrt5) / 2, (3.0 + sqrt5) / 2}) {
        if (std::abs(t2 - allowed) <= tol) {
            return false;
        }
    }
    if (std::abs(t2 - 4.0) <= tol) {
        // parabolic unless +-I
        return !projectively_equal(g, Matrix2::Identity(), tol);
    }
    return true;
}

} // namespace detail

/// Classifies the projective group generated by a and b (both in SL2 up to
/// tol). Checks run in the order Finite, Triangularizable, Dihedral, Dense;
/// Dense needs a positive certificate (irreducible, no invariant pair of
/// lines, and an element of infinite order), otherwise Inconclusive is
/// thrown.
inline ProjectiveClass classify_projective(const Matrix2& a, const Matrix2& b, double tol = 1e-6,
                                           const ProjectiveCaps& caps = {})
{
    if (std::abs(a.determinant() - 1.0) > tol || std::abs(b.determinant() - 1.0) > tol) {
        throw DomainError("monodromy matrices are not unimodular within tolerance");
    }
    const auto [elements, closed] = detail::projective_closure(a, b, tol, caps);
    if (closed) {
        return {FiniteGroup{elements.size()}, tol, caps};
    }
    const Complex commutator_trace = (a * b * a.inverse() * b.inverse()).trace();
    if (std::abs(commutator_trace - 2.0) <= tol) {
        return {Triangularizable{}, tol, caps};
    }
    int zero_traces = 0;
    for (const Complex t : {a.trace(), b.trace(), Complex((a * b).trace())}) {
        zero_traces += std::abs(t) <= tol ? 1 : 0;
    }
    if (zero_traces >= 2) {
        return {Dihedral{}, tol, caps};
    }
    for (const Matrix2& g : elements) {
        if (detail::outside_primitive_finite(g, tol)) {
            return {Dense{}, tol, caps};
        }
    }
    throw Inconclusive("projective closure exceeded its caps without a density certificate");
}

inline ProjectiveClass classify_projective(const MonodromyRep& rep, double tol = 1e-6, const ProjectiveCaps& caps = {})
{
    return classify_projective(rep.m0, rep.m1, tol, caps);
}

} // namespace schwarz
