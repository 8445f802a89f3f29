#include <random>

#include <gtest/gtest.h>

#include <schwarz/expr.hpp>
#include <schwarz/mobius.hpp>
#include <schwarz/schwarzian.hpp>

#include "random_ratfunc.hpp"

using namespace schwarz;

namespace {

RatFunc y() { return RatFunc::identity(); }
RatFunc k(long p, long q = 1) { return RatFunc::constant(make_rational(p, q)); }

void expect_canonical(const RatFunc& f)
{
    ASSERT_FALSE(f.den().is_zero());
    EXPECT_EQ(f.den().leading(), 1);
    EXPECT_EQ(gcd(f.num(), f.den()), Poly::constant(1));
}

} // namespace

TEST(Rational, ParseAndFormat)
{
    EXPECT_EQ(parse_rational("-6/4"), make_rational(-3, 2));
    EXPECT_EQ(to_string(make_rational(-3, 2)), "-3/2");
    EXPECT_EQ(to_string(make_rational(4, 2)), "2");
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    try {
        parse_rational("12x");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 2U);
    }
}

TEST(Poly, GcdMatchesEuclid)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly common = gen::random_poly(rng, 3);
        const Poly a = gen::random_poly(rng, 5) * common;
        const Poly b = gen::random_poly(rng, 5) * common;
        if (a.is_zero() || b.is_zero()) {
            continue;
        }
        EXPECT_EQ(gcd(a, b), detail::euclid_gcd(a, b));
    }
}

TEST(Poly, TaylorShift)
{
    const Poly p{1, 2, 3}; // 1 + 2y + 3y^2
    const Poly shifted = p.taylor_shift(2);
    for (int x = -3; x <= 3; ++x) {
        EXPECT_EQ(shifted(x), p(Rational(x + 2)));
    }
}

TEST(RatFuncArith, CommonDenominator)
{
    const RatFunc sum = ratfunc_arith(k(1) / y(), k(1) / (y() - k(1)), ArithOp::Add);
    EXPECT_EQ(sum, RatFunc(Poly{-1, 2}, Poly{0, -1, 1}));
    expect_canonical(sum);
}

TEST(RatFuncArith, InverseCancels)
{
    const RatFunc f = y() * y() + k(3);
    EXPECT_EQ(ratfunc_arith(f, k(1) / f, ArithOp::Mul), k(1));
}

TEST(RatFuncArith, DivisionByZeroThrows)
{
    EXPECT_THROW(ratfunc_arith(y() / (y() - k(1)), RatFunc(), ArithOp::Div), DomainError);
}

TEST(RatFuncArith, CanonicalFormIsStructural)
{
    // (2y^2 - 2)/(4y + 4) == (y - 1)/2
    const RatFunc f(Poly{-2, 0, 2}, Poly{4, 4});
    EXPECT_EQ(f, RatFunc(Poly{make_rational(-1, 2), make_rational(1, 2)}));
    EXPECT_THROW(RatFunc(Poly{1}, Poly{}), DomainError);
}

TEST(Derivative, Basics)
{
    EXPECT_EQ(derivative(y() * y()), k(2) * y());
    EXPECT_EQ(derivative(k(1) / y()), k(-1) / (y() * y()));
    EXPECT_EQ(derivative(k(5)), RatFunc());
}

TEST(Compose, Basics)
{
    EXPECT_EQ(compose(k(1) / y(), y() - k(1)), k(1) / (y() - k(1)));
    const RatFunc f = (y() * y() + k(1)) / (y() - k(3));
    EXPECT_EQ(compose(f, y()), f);
    EXPECT_THROW(compose(k(1) / (y() - k(2)), k(2)), DomainError);
    EXPECT_EQ(compose(k(1) / (y() - k(2)), k(3)), k(1));
}

TEST(Schwarzian, MobiusIsZero)
{
    const RatFunc m = (k(2) * y() + k(1)) / (k(3) * y() - k(5));
    EXPECT_TRUE(schwarzian(m).is_zero());
    EXPECT_TRUE(schwarzian(y() + k(7)).is_zero());
}

TEST(Schwarzian, Powers)
{
    EXPECT_EQ(schwarzian(y() * y()), k(-3, 2) / (y() * y()));
    EXPECT_EQ(schwarzian(y() * y() * y()), k(-4) / (y() * y()));
}

TEST(Schwarzian, ConstantThrows)
{
    EXPECT_THROW(schwarzian(k(4)), DomainError);
}

TEST(SchwarzPullback, IdentityAndSquare)
{
    const RatFunc r = (y() + k(2)) / (y() * (y() - k(1)));
    EXPECT_EQ(schwarz_pullback(r, y()), r);

    // R = 1/y, phi = y^2: 4y^2 * 1/y^2 - 3/(2y^2) = 4 - 3/(2y^2)
    EXPECT_EQ(schwarz_pullback(k(1) / y(), y() * y()), k(4) - k(3, 2) / (y() * y()));
    EXPECT_THROW(schwarz_pullback(r, k(3)), DomainError);
}

TEST(SchwarzPullback, MobiusIsCoordinateChange)
{
    // For Mobius phi the Schwarzian term vanishes and only R(phi) phi'^2 remains.
    const RatFunc r = (y() * y() - k(3)) / (y() * (y() - k(1)) * (y() - k(1)));
    const RatFunc phi = (y() + k(1)) / (k(2) * y() - k(1));
    const RatFunc dphi = derivative(phi);
    EXPECT_EQ(schwarz_pullback(r, phi), compose(r, phi) * dphi * dphi);
}

TEST(Mobius, Apply)
{
    const RatFunc f = (y() * y() - k(1)) / (y() + k(4));
    EXPECT_EQ(mobius_apply(MobiusMap::identity(), f), f);
    EXPECT_EQ(mobius_apply(MobiusMap(0, -1, 1, 0), y()), k(-1) / y());
    EXPECT_EQ(mobius_apply(MobiusMap(1, 1, 0, 1), y()), y() + k(1));
    EXPECT_THROW(MobiusMap(1, 2, 2, 4), DomainError);
    // c f + d == 0 identically
    EXPECT_THROW(mobius_apply(MobiusMap(1, 0, 1, -3), k(3)), DomainError);
}

TEST(Serialization, TextRoundTrip)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const RatFunc f = gen::random_ratfunc(rng, 4);
        EXPECT_EQ(parse_ratfunc(to_string(f)), f);
    }
    EXPECT_EQ(to_string(k(1) / y()), "[1]/[0,1]");
    EXPECT_EQ(to_string(RatFunc()), "[0]/[1]");
    EXPECT_THROW(parse_ratfunc("[1,2]/[0]"), ParseError);
    EXPECT_THROW(parse_ratfunc("[1,2]"), ParseError);
}

TEST(Expression, Grammar)
{
    EXPECT_EQ(parse_expression("y^2"), y() * y());
    EXPECT_EQ(parse_expression("(y+1)/(2*y - 3)"), (y() + k(1)) / (k(2) * y() - k(3)));
    EXPECT_EQ(parse_expression("-y^-2 + 1/2"), k(-1) / (y() * y()) + k(1, 2));
    EXPECT_THROW(parse_expression("y^"), ParseError);
    EXPECT_THROW(parse_expression("1/(y-y)"), ParseError);
    try {
        parse_expression("y + x");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4U);
    }
}

// Property tests.

TEST(Properties, CanonicalInvariant)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const RatFunc f = gen::random_ratfunc(rng, 4);
        const RatFunc g = gen::random_nonconstant(rng, 4);
        for (const RatFunc& h : {f + g, f * g, f / g, derivative(f), compose(f, g)}) {
            EXPECT_EQ(h.den().leading(), 1);
            EXPECT_EQ(gcd(h.num(), h.den()), Poly::constant(1));
        }
    }
}

TEST(Properties, SchwarzianCocycle)
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        const RatFunc f = gen::random_nonconstant(rng, 3);
        const RatFunc g = gen::random_nonconstant(rng, 3);
        const RatFunc dg = derivative(g);
        EXPECT_EQ(schwarzian(compose(f, g)), compose(schwarzian(f), g) * dg * dg + schwarzian(g));
    }
}

TEST(Properties, MobiusInvariance)
{
    std::mt19937_64 rng(9);
    for (int i = 0; i < 40; ++i) {
        const RatFunc f = gen::random_nonconstant(rng, 4);
        const MobiusMap m = gen::random_mobius(rng);
        EXPECT_EQ(schwarzian(mobius_apply(m, f)), schwarzian(f));
    }
}

TEST(Properties, PullbackFunctorial)
{
    std::mt19937_64 rng(13);
    for (int i = 0; i < 30; ++i) {
        const RatFunc r = gen::random_ratfunc(rng, 3);
        const RatFunc phi = gen::random_nonconstant(rng, 2);
        const RatFunc psi = gen::random_nonconstant(rng, 2);
        EXPECT_EQ(schwarz_pullback(schwarz_pullback(r, phi), psi),
                  schwarz_pullback(r, compose(phi, psi)));
    }
}
