#pragma once

#include "errors.hpp"
#include "ratfunc.hpp"

namespace schwarz {

/// y -> (a y + b) / (c y + d) with ad - bc != 0.
class MobiusMap {
public:
    MobiusMap(Rational a, Rational b, Rational c, Rational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d))
    {
        if (a_ * d_ - b_ * c_ == 0) {
            throw DomainError("degenerate Mobius map (ad - bc = 0)");
        }
    }

    static MobiusMap identity() { return {1, 0, 0, 1}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    Rational determinant() const { return a_ * d_ - b_ * c_; }

    RatFunc as_ratfunc() const
    {
        return RatFunc(Poly{b_, a_}, Poly{d_, c_});
    }

    MobiusMap inverse() const { return {d_, -b_, -c_, a_}; }

private:
    Rational a_, b_, c_, d_;
};

/// (a f + b) / (c f + d).
inline RatFunc mobius_apply(const MobiusMap& m, const RatFunc& f)
{
    const RatFunc lower = m.c() * f + RatFunc::constant(m.d());
    if (lower.is_zero()) {
        throw DomainError("Mobius image has identically zero denominator");
    }
    return (m.a() * f + RatFunc::constant(m.b())) / lower;
}

} // namespace schwarz
