#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace schwarz {

/// Rational function num/den over Q in canonical form: gcd(num, den) = 1
/// and den monic. Two RatFuncs are equal iff their representations are.
class RatFunc {
public:
    RatFunc() : den_(Poly::constant(1)) {}

    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    explicit RatFunc(Poly p) : num_(std::move(p)), den_(Poly::constant(1)) {}

    static RatFunc constant(const Rational& c) { return RatFunc(Poly::constant(c)); }
    static RatFunc identity() { return RatFunc(Poly::identity()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RatFunc derivative() const
    {
        // (n/d)' = (n'd - nd')/d^2; d^2 shares no factor with the new
        // numerator beyond what normalize() removes.
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    /// Exact value at x; throws at a pole.
    Rational operator()(const Rational& x) const
    {
        const Rational d = den_(x);
        if (d == 0) {
            throw DomainError("evaluation at a pole (y = " + to_string(x) + ")");
        }
        return num_(x) / d;
    }

    std::complex<double> eval(std::complex<double> x) const { return num_.eval(x) / den_.eval(x); }

    /// Multiplicity of y = a as a root of the denominator.
    unsigned pole_order_at(const Rational& a) const
    {
        unsigned order = 0;
        Poly d = den_;
        const Poly factor{-a, Rational(1)};
        while (!d.is_constant()) {
            auto [q, r] = divmod(d, factor);
            if (!r.is_zero()) {
                break;
            }
            ++order;
            d = std::move(q);
        }
        return order;
    }

    /// deg(den) - deg(num): positive means a zero at infinity of that order,
    /// negative a pole. Undefined (returns 0) for the zero function.
    long order_at_infinity() const { return is_zero() ? 0 : den_.degree() - num_.degree(); }

    /// f(g(y)); throws if the result lands identically on a pole of f.
    RatFunc compose(const RatFunc& g) const
    {
        const long n = std::max(num_.degree(), den_.degree());
        std::vector<Poly> u_pows{Poly::constant(1)};
        std::vector<Poly> v_pows{Poly::constant(1)};
        for (long i = 1; i <= n; ++i) {
            u_pows.push_back(u_pows.back() * g.num_);
            v_pows.push_back(v_pows.back() * g.den_);
        }
        auto homogenize = [&](const Poly& p) {
            Poly acc;
            const auto& c = p.coefficients();
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (c[i] != 0) {
                    acc += c[i] * (u_pows[i] * v_pows[static_cast<std::size_t>(n) - i]);
                }
            }
            return acc;
        };
        Poly new_den = homogenize(den_);
        if (new_den.is_zero()) {
            throw DomainError("composition lands identically on a pole");
        }
        return RatFunc(homogenize(num_), std::move(new_den));
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend RatFunc operator+(const RatFunc& f, const RatFunc& g)
    {
        if (f.den_ == g.den_) {
            return RatFunc(f.num_ + g.num_, f.den_);
        }
        return RatFunc(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
    }

    friend RatFunc operator-(const RatFunc& f)
    {
        RatFunc out = f;
        out.num_ = -out.num_;
        return out;
    }

    friend RatFunc operator-(const RatFunc& f, const RatFunc& g) { return f + (-g); }

    friend RatFunc operator*(const RatFunc& f, const RatFunc& g)
    {
        // Cross-cancel first so the final gcd works on smaller inputs.
        const Poly g1 = gcd(f.num_, g.den_);
        const Poly g2 = gcd(g.num_, f.den_);
        return from_parts(divmod(f.num_, g1).first * divmod(g.num_, g2).first,
                          divmod(f.den_, g2).first * divmod(g.den_, g1).first);
    }

    friend RatFunc operator*(const Rational& s, const RatFunc& f)
    {
        RatFunc out = f;
        out.num_ *= s;
        return out;
    }

    friend RatFunc operator/(const RatFunc& f, const RatFunc& g)
    {
        if (g.is_zero()) {
            throw DomainError("division by the zero function");
        }
        return f * RatFunc::from_parts(g.den_, g.num_);
    }

    friend bool operator==(const RatFunc& f, const RatFunc& g) = default;

private:
    // Already-coprime parts; only the monic scaling is redone.
    static RatFunc from_parts(Poly num, Poly den)
    {
        RatFunc out;
        out.num_ = std::move(num);
        out.den_ = std::move(den);
        out.make_monic();
        return out;
    }

    void normalize()
    {
        if (den_.is_zero()) {
            throw DomainError("zero denominator");
        }
        if (num_.is_zero()) {
            den_ = Poly::constant(1);
            return;
        }
        const Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        make_monic();
    }

    void make_monic()
    {
        if (num_.is_zero()) {
            den_ = Poly::constant(1);
            return;
        }
        const Rational lead = den_.leading();
        if (lead != 1) {
            const Rational inv = 1 / lead;
            num_ *= inv;
            den_ *= inv;
        }
    }

    Poly num_;
    Poly den_;
};

inline RatFunc derivative(const RatFunc& f) { return f.derivative(); }
inline RatFunc compose(const RatFunc& f, const RatFunc& g) { return f.compose(g); }

enum class ArithOp { Add, Mul, Div };

inline RatFunc ratfunc_arith(const RatFunc& f, const RatFunc& g, ArithOp op)
{
    switch (op) {
    case ArithOp::Add:
        return f + g;
    case ArithOp::Mul:
        return f * g;
    case ArithOp::Div:
        return f / g;
    }
    throw DomainError("unknown arithmetic operation");
}

/// "[n0,n1,...]/[d0,d1,...]", ascending coefficients, each "p" or "p/q".
inline std::string to_string(const RatFunc& f)
{
    auto list = [](const Poly& p) {
        std::string s = "[";
        const auto& c = p.coefficients();
        if (c.empty()) {
            s += "0";
        }
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i != 0) {
                s += ",";
            }
            s += to_string(c[i]);
        }
        return s + "]";
    };
    return list(f.num()) + "/" + list(f.den());
}

namespace detail {

inline Poly parse_coeff_list(std::string_view text, std::size_t& i)
{
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) {
            ++i;
        }
    };
    skip_ws();
    if (i >= text.size() || text[i] != '[') {
        throw ParseError("expected '['", i);
    }
    ++i;
    std::vector<Rational> coeffs;
    while (true) {
        const std::size_t start = i;
        while (i < text.size() && text[i] != ',' && text[i] != ']') {
            ++i;
        }
        if (i >= text.size()) {
            throw ParseError("unterminated coefficient list", start);
        }
        coeffs.push_back(parse_rational(text.substr(start, i - start), start));
        if (text[i++] == ']') {
            break;
        }
    }
    skip_ws();
    return Poly(std::move(coeffs));
}

} // namespace detail

inline RatFunc parse_ratfunc(std::string_view text)
{
    std::size_t i = 0;
    Poly num = detail::parse_coeff_list(text, i);
    if (i >= text.size() || text[i] != '/') {
        throw ParseError("expected '/' between coefficient lists", i);
    }
    ++i;
    Poly den = detail::parse_coeff_list(text, i);
    if (i != text.size()) {
        throw ParseError("trailing characters", i);
    }
    if (den.is_zero()) {
        throw ParseError("zero denominator", i);
    }
    return RatFunc(std::move(num), std::move(den));
}

} // namespace schwarz
