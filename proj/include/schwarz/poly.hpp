#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "detail/modular_gcd.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace schwarz {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial is the empty coefficient vector; otherwise the
/// leading coefficient is non-zero.
class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

    static Poly monomial(const Rational& c, std::size_t degree)
    {
        std::vector<Rational> v(degree + 1);
        v[degree] = c;
        return Poly(std::move(v));
    }

    /// The polynomial y.
    static Poly identity() { return monomial(1, 1); }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const std::vector<Rational>& coefficients() const { return c_; }

    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    const Rational& leading() const { return c_.back(); }

    Poly derivative() const
    {
        if (c_.size() <= 1) {
            return {};
        }
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            d[i - 1] = c_[i] * static_cast<unsigned long>(i);
        }
        return Poly(std::move(d));
    }

    Rational operator()(const Rational& x) const
    {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    std::complex<double> eval(std::complex<double> x) const
    {
        std::complex<double> acc = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * x + it->get_d();
        }
        return acc;
    }

    /// Coefficients of p(y + a).
    Poly taylor_shift(const Rational& a) const
    {
        std::vector<Rational> v = c_;
        const std::size_t n = v.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = n - 1; j > i; --j) {
                v[j - 1] += a * v[j];
            }
        }
        return Poly(std::move(v));
    }

    Poly monic() const
    {
        if (is_zero()) {
            return {};
        }
        Poly out = *this;
        const Rational inv = 1 / leading();
        for (auto& c : out.c_) {
            c *= inv;
        }
        return out;
    }

    Poly& operator+=(const Poly& o)
    {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size());
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] += o.c_[i];
        }
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o)
    {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size());
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] -= o.c_[i];
        }
        trim();
        return *this;
    }

    Poly& operator*=(const Rational& s)
    {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) {
            c *= s;
        }
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend Poly operator-(Poly a)
    {
        for (auto& c : a.c_) {
            c = -c;
        }
        return a;
    }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                v[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Poly(std::move(v));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) {
            c_.pop_back();
        }
    }

    std::vector<Rational> c_;
};

inline Poly pow(Poly base, unsigned exp)
{
    Poly result = Poly::constant(1);
    while (exp != 0) {
        if ((exp & 1U) != 0) {
            result = result * base;
        }
        exp >>= 1U;
        if (exp != 0) {
            base = base * base;
        }
    }
    return result;
}

/// Euclidean division; returns (quotient, remainder).
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    if (b.is_zero()) {
        throw DomainError("polynomial division by zero");
    }
    if (a.degree() < b.degree()) {
        return {Poly{}, a};
    }
    std::vector<Rational> rem = a.coefficients();
    std::vector<Rational> quot(rem.size() - b.coefficients().size() + 1);
    const auto& bc = b.coefficients();
    const Rational inv_lead = 1 / b.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Rational q = rem[k + bc.size() - 1] * inv_lead;
        quot[k] = q;
        if (q == 0) {
            continue;
        }
        for (std::size_t i = 0; i < bc.size(); ++i) {
            rem[k + i] -= q * bc[i];
        }
    }
    rem.resize(bc.size() - 1);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

namespace detail {

/// Clears denominators and content; leading coefficient positive.
inline IntPoly to_primitive_integer(const Poly& p)
{
    mpz_class lcm = 1;
    for (const auto& c : p.coefficients()) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    IntPoly out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
        out.push_back(c.get_num() * (lcm / c.get_den()));
    }
    return primitive_part(std::move(out));
}

inline Poly euclid_gcd(Poly a, Poly b)
{
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

} // namespace detail

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline Poly gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero()) {
        return b.monic();
    }
    if (b.is_zero()) {
        return a.monic();
    }
    if (a.degree() == 0 || b.degree() == 0) {
        return Poly::constant(1);
    }
    const auto ia = detail::to_primitive_integer(a);
    const auto ib = detail::to_primitive_integer(b);
    if (auto g = detail::modular_gcd(ia, ib)) {
        std::vector<Rational> coeffs(g->begin(), g->end());
        return Poly(std::move(coeffs)).monic();
    }
    return detail::euclid_gcd(a, b);
}

} // namespace schwarz
