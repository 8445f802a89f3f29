#include <random>

#include <gtest/gtest.h>

#include <schwarz/triangle.hpp>

using namespace schwarz;

namespace {

AngleParams exact(long a, long ad, long b, long bd, long c, long cd)
{
    return AngleParams::exact(make_rational(a, ad), make_rational(b, bd), make_rational(c, cd));
}

} // namespace

TEST(BuildR, ZeroParameters)
{
    const RatFunc r = build_R(exact(0, 1, 0, 1, 0, 1));
    const RatFunc y = RatFunc::identity();
    const RatFunc y1 = y - RatFunc::constant(1);
    const RatFunc one = RatFunc::constant(1);
    EXPECT_EQ(r, Rational(1, 2) * (one / (y * y) + one / (y1 * y1) - one / (y * y1)));
    EXPECT_EQ(r(Rational(2)), make_rational(3, 8));
}

TEST(BuildR, GenericRejected)
{
    EXPECT_THROW(build_R(AngleParams::generic()), UnsupportedParams);
    EXPECT_THROW(exponent_differences(AngleParams::generic()), UnsupportedParams);
    EXPECT_THROW(to_hypergeometric(AngleParams::generic()), UnsupportedParams);
}

TEST(BuildR, IrrationalRejected)
{
    const auto p = AngleParams::from_entries({Rational(1, 2), AlgebraicValue{"sqrt(2)"}, Rational(1, 3)});
    EXPECT_THROW(build_R(p), UnsupportedParams);
}

TEST(ExponentDifferences, Ordering)
{
    const ExponentTriple e = exponent_differences(exact(1, 2, 1, 3, 1, 7));
    EXPECT_EQ(e, (ExponentTriple{make_rational(1, 3), make_rational(1, 7), make_rational(1, 2)}));
    EXPECT_EQ(exponent_differences(exact(0, 1, 0, 1, 0, 1)), (ExponentTriple{0, 0, 0}));
}

TEST(Hypergeometric, KnownValues)
{
    EXPECT_EQ(to_hypergeometric(exact(0, 1, 0, 1, 0, 1)), (HGParams{Rational(1, 2), Rational(1, 2), 1}));
    EXPECT_EQ(to_hypergeometric(exact(1, 2, 1, 3, 1, 7)),
              (HGParams{make_rational(43, 84), make_rational(1, 84), make_rational(2, 3)}));
}

TEST(Hypergeometric, ExponentRelationsRandom)
{
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 30);
    for (int i = 0; i < 100; ++i) {
        const auto p = exact(num(rng), den(rng), num(rng), den(rng), num(rng), den(rng));
        const auto [ia, ib, ic] = p.rational_entries();
        const HGParams hg = to_hypergeometric(p);
        EXPECT_EQ(1 - hg.c, ib);
        EXPECT_EQ(hg.c - hg.a - hg.b, ic);
        EXPECT_EQ(hg.a - hg.b, ia);
    }
}

TEST(LinearOde, ZeroR)
{
    const ODECoefficients ode = linear_ode(RatFunc());
    EXPECT_TRUE(ode.first_order.is_zero());
    EXPECT_TRUE(ode.zeroth_order.is_zero());
}

TEST(LinearOde, PolesOnlyAtZeroAndOne)
{
    const ODECoefficients ode = linear_ode(build_R(exact(1, 2, 1, 3, 1, 7)));
    EXPECT_TRUE(ode.first_order.is_zero());
    const RatFunc& q = ode.zeroth_order;
    EXPECT_EQ(q.pole_order_at(0), 2U);
    EXPECT_EQ(q.pole_order_at(1), 2U);
    EXPECT_EQ(q.den().degree(), 4); // y^2 (y-1)^2, nothing else
}

TEST(LinearOde, RegularSingularSweep)
{
    // Every R has poles only at 0 and 1, each of order <= 2, and vanishes
    // at infinity to order >= 2 (exactly 2 unless alpha^-1 = +-1).
    for (long a = -6; a <= 6; ++a) {
        for (long b = -6; b <= 6; ++b) {
            for (long c = -6; c <= 6; c += 3) {
                const RatFunc r = build_R(exact(a, 4, b, 3, c, 5));
                if (r.is_zero()) {
                    continue;
                }
                EXPECT_LE(r.pole_order_at(0), 2U);
                EXPECT_LE(r.pole_order_at(1), 2U);
                EXPECT_EQ(static_cast<long>(r.pole_order_at(0) + r.pole_order_at(1)), r.den().degree());
                EXPECT_GE(r.order_at_infinity(), 2);
                if (a * a != 16) {
                    EXPECT_EQ(r.order_at_infinity(), 2);
                }
            }
        }
    }
}TEST(AngleParamsText, ParsesAndPrints)
{
    EXPECT_EQ(parse_angle_params("1/2,1/3,1/7"),
              AngleParams::exact(make_rational(1, 2), make_rational(1, 3), make_rational(1, 7)));
    EXPECT_TRUE(parse_angle_params(" generic ").is_generic());
    EXPECT_EQ(to_string(parse_angle_params("0, 2/4 ,1")), "0,1/2,1");
    EXPECT_EQ(to_string(AngleParams::generic()), "generic");

    const AngleParams irr = parse_angle_params("sqrt(2),1/3,sqrt(9/4)");
    EXPECT_FALSE(irr.is_rational());
    EXPECT_EQ(to_string(irr), "sqrt(2),1/3,3/2");
    EXPECT_THROW(irr.rational_entries(), UnsupportedParams);
}

TEST(AngleParamsText, ErrorPositions)
{
    auto position = [](const char* text) -> long {
        try {
            parse_angle_params(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    EXPECT_EQ(position("1/2,1/3"), 7);
    EXPECT_EQ(position("1/2,x,1/7"), 4);
    EXPECT_EQ(position("1/2,1/3,1/0"), 8);
    EXPECT_EQ(position("1/2,1/3,1/7,1"), 11);
    EXPECT_EQ(position("generic,1,1"), 0);
    EXPECT_EQ(position("1,sqrt(2,1"), 2);
}


