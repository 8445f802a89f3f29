#pragma once

// Truncated power series sum_{i<=N} c_i (y - p)^i around a base point p.
// The scalar type is a template parameter so the same code runs in exact
// rational arithmetic (tests) and in complex double precision.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ratfunc.hpp"

namespace schwarz {

template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static Rational from_rational(const Rational& q) { return q; }
    static bool is_zero(const Rational& x) { return x == 0; }
    static bool same_point(const Rational& a, const Rational& b) { return a == b; }
};

template <>
struct ScalarTraits<std::complex<double>> {
    static std::complex<double> from_rational(const Rational& q) { return {q.get_d(), 0.0}; }
    static bool is_zero(const std::complex<double>& x) { return x == 0.0; }
    static bool same_point(const std::complex<double>& a, const std::complex<double>& b)
    {
        return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a));
    }
};

namespace detail {

template <class S>
std::vector<S> mul_trunc(const std::vector<S>& a, const std::vector<S>& b, std::size_t n)
{
    std::vector<S> out(n, S(0));
    for (std::size_t i = 0; i < std::min(a.size(), n); ++i) {
        if (ScalarTraits<S>::is_zero(a[i])) {
            continue;
        }
        const std::size_t jmax = std::min(b.size(), n - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

/// a / b truncated to n terms; b[0] must be invertible.
template <class S>
std::vector<S> div_trunc(const std::vector<S>& a, const std::vector<S>& b, std::size_t n)
{
    std::vector<S> q(n, S(0));
    const S inv = S(1) / b[0];
    for (std::size_t k = 0; k < n; ++k) {
        S acc = k < a.size() ? a[k] : S(0);
        for (std::size_t j = 1; j <= std::min(k, b.size() - 1); ++j) {
            acc -= b[j] * q[k - j];
        }
        q[k] = acc * inv;
    }
    return q;
}

/// sum_i outer[i] * inner^i, inner with zero constant term, n terms.
template <class S>
std::vector<S> compose_trunc(const std::vector<S>& outer, const std::vector<S>& inner, std::size_t n)
{
    std::vector<S> acc(n, S(0));
    for (std::size_t i = outer.size(); i-- > 0;) {
        acc = mul_trunc(acc, inner, n);
        acc[0] += outer[i];
    }
    return acc;
}

/// Coefficients of p(x + a).
template <class S>
std::vector<S> taylor_shift(std::vector<S> v, const S& a)
{
    const std::size_t n = v.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = n - 1; j > i; --j) {
            v[j - 1] += a * v[j];
        }
    }
    return v;
}

} // namespace detail

template <class Scalar>
class TruncatedSeries {
public:
    using Traits = ScalarTraits<Scalar>;

    /// coeffs.size() - 1 is the truncation order.
    TruncatedSeries(Scalar base, std::vector<Scalar> coeffs) : base_(std::move(base)), c_(std::move(coeffs))
    {
        if (c_.empty()) {
            throw DomainError("a truncated series needs at least one coefficient");
        }
    }

    static TruncatedSeries constant(Scalar base, Scalar value, int order)
    {
        std::vector<Scalar> c(static_cast<std::size_t>(order) + 1, Scalar(0));
        c[0] = std::move(value);
        return {std::move(base), std::move(c)};
    }

    /// The series of y itself: base + (y - base).
    static TruncatedSeries variable(Scalar base, int order)
    {
        std::vector<Scalar> c(static_cast<std::size_t>(order) + 1, Scalar(0));
        c[0] = base;
        if (order >= 1) {
            c[1] = Scalar(1);
        }
        return {std::move(base), std::move(c)};
    }

    const Scalar& base() const { return base_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Scalar>& coefficients() const { return c_; }
    const Scalar& operator[](std::size_t i) const { return c_[i]; }

    TruncatedSeries truncated(int order) const
    {
        std::vector<Scalar> c(c_.begin(), c_.begin() + std::min<std::ptrdiff_t>(order + 1, std::ssize(c_)));
        return {base_, std::move(c)};
    }

    TruncatedSeries derivative() const
    {
        if (c_.size() == 1) {
            throw DomainError("derivative of an order-0 series has no coefficients left");
        }
        std::vector<Scalar> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            d[i - 1] = c_[i] * Scalar(static_cast<long>(i));
        }
        return {base_, std::move(d)};
    }

    /// Value of the truncated polynomial at y.
    Scalar operator()(const Scalar& y) const
    {
        const Scalar x = y - base_;
        Scalar acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * x + c_[i];
        }
        return acc;
    }

    /// k-th derivative of the truncated polynomial at y.
    Scalar derivative_at(int k, const Scalar& y) const
    {
        const Scalar x = y - base_;
        Scalar acc(0);
        for (std::size_t i = c_.size(); i-- > static_cast<std::size_t>(k);) {
            Scalar falling(1);
            for (int j = 0; j < k; ++j) {
                falling *= Scalar(static_cast<long>(i) - j);
            }
            acc = acc * x + c_[i] * falling;
        }
        return acc;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        check_base(a, b);
        const std::size_t n = std::min(a.c_.size(), b.c_.size());
        std::vector<Scalar> c(n);
        for (std::size_t i = 0; i < n; ++i) {
            c[i] = a.c_[i] + b.c_[i];
        }
        return {a.base_, std::move(c)};
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        check_base(a, b);
        const std::size_t n = std::min(a.c_.size(), b.c_.size());
        std::vector<Scalar> c(n);
        for (std::size_t i = 0; i < n; ++i) {
            c[i] = a.c_[i] - b.c_[i];
        }
        return {a.base_, std::move(c)};
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        check_base(a, b);
        return {a.base_, detail::mul_trunc(a.c_, b.c_, std::min(a.c_.size(), b.c_.size()))};
    }

    friend TruncatedSeries operator*(const Scalar& s, TruncatedSeries a)
    {
        for (auto& c : a.c_) {
            c *= s;
        }
        return a;
    }

    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        check_base(a, b);
        if (Traits::is_zero(b.c_[0])) {
            throw DomainError("series division by a series vanishing at the base point");
        }
        return {a.base_, detail::div_trunc(a.c_, b.c_, std::min(a.c_.size(), b.c_.size()))};
    }

private:
    static void check_base(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        if (!Traits::same_point(a.base_, b.base_)) {
            throw DomainError("series arithmetic requires equal base points");
        }
    }

    Scalar base_;
    std::vector<Scalar> c_;
};

using PowerSeries = TruncatedSeries<std::complex<double>>;

/// Taylor expansion of an exact rational function around base.
template <class Scalar>
TruncatedSeries<Scalar> expand(const RatFunc& f, const Scalar& base, int order)
{
    using T = ScalarTraits<Scalar>;
    auto convert = [](const Poly& p) {
        std::vector<Scalar> v;
        v.reserve(p.coefficients().size());
        for (const auto& c : p.coefficients()) {
            v.push_back(T::from_rational(c));
        }
        if (v.empty()) {
            v.push_back(Scalar(0));
        }
        return v;
    };
    const auto num = detail::taylor_shift(convert(f.num()), base);
    const auto den = detail::taylor_shift(convert(f.den()), base);
    bool pole = T::is_zero(den[0]);
    if constexpr (std::is_same_v<Scalar, std::complex<double>>) {
        double scale = 0.0;
        for (const auto& d : den) {
            scale = std::max(scale, std::abs(d));
        }
        pole = std::abs(den[0]) <= 1e-13 * scale;
    }
    if (pole) {
        throw DomainError("expansion point is a pole of the rational function");
    }
    return {base, detail::div_trunc(num, den, static_cast<std::size_t>(order) + 1)};
}

/// outer(inner(s)); inner's value at its base must be outer's base point.
/// The result lives at inner's base point.
template <class Scalar>
TruncatedSeries<Scalar> series_compose(const TruncatedSeries<Scalar>& outer, const TruncatedSeries<Scalar>& inner)
{
    if (!ScalarTraits<Scalar>::same_point(inner[0], outer.base())) {
        throw DomainError("series_compose: inner series does not start at the outer base point");
    }
    std::vector<Scalar> shifted = inner.coefficients();
    shifted[0] = Scalar(0);
    const std::size_t n = static_cast<std::size_t>(std::min(outer.order(), inner.order())) + 1;
    return {inner.base(), detail::compose_trunc(outer.coefficients(), shifted, n)};
}

/// Compositional inverse J with J(t(p)) = p, by Newton iteration with
/// doubling precision.
template <class Scalar>
TruncatedSeries<Scalar> series_invert(const TruncatedSeries<Scalar>& t)
{
    if (t.order() < 1 || ScalarTraits<Scalar>::is_zero(t[1])) {
        throw DomainError("series_invert: vanishing first derivative");
    }
    const std::size_t n = static_cast<std::size_t>(t.order()) + 1;
    std::vector<Scalar> shifted = t.coefficients(); // t - t(p)
    shifted[0] = Scalar(0);
    std::vector<Scalar> dt(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
        dt[i - 1] = shifted[i] * Scalar(static_cast<long>(i));
    }

    // x(s) = J(s) - p, no constant term.
    std::vector<Scalar> x{Scalar(0), Scalar(1) / shifted[1]};
    std::size_t precision = 2;
    while (precision < n) {
        precision = std::min(2 * precision, n);
        x.resize(precision, Scalar(0));
        const auto tx = detail::compose_trunc(shifted, x, precision);
        const auto dtx = detail::compose_trunc(dt, x, precision);
        std::vector<Scalar> err = tx;
        err[1] -= Scalar(1);
        const auto step = detail::div_trunc(err, dtx, precision);
        for (std::size_t i = 0; i < precision; ++i) {
            x[i] -= step[i];
        }
    }
    x.resize(n, Scalar(0));
    x[0] = t.base();
    return {t[0], std::move(x)};
}

/// S(t) = t'''/t' - 3/2 (t''/t')^2; the order drops by 3.
template <class Scalar>
TruncatedSeries<Scalar> series_schwarzian(const TruncatedSeries<Scalar>& t)
{
    if (t.order() < 3) {
        throw DomainError("series_schwarzian needs order >= 3");
    }
    const auto d1 = t.derivative();
    if (ScalarTraits<Scalar>::is_zero(d1[0])) {
        throw DomainError("series_schwarzian: vanishing first derivative");
    }
    const auto d2 = d1.derivative();
    const auto d3 = d2.derivative();
    const auto h = d2 / d1;
    return (d3 / d1) - ScalarTraits<Scalar>::from_rational(Rational(3, 2)) * (h * h).truncated(d3.order());
}

} // namespace schwarz
