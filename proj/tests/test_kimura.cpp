#include <random>

#include <gtest/gtest.h>

#include <schwarz/groups.hpp>
#include <schwarz/kimura.hpp>

using namespace schwarz;

namespace {

ExponentTriple et(Rational a0, Rational a1, Rational ainf) { return {std::move(a0), std::move(a1), std::move(ainf)}; }

AngleParams inv(Rational a, Rational b, Rational c) { return AngleParams::exact(std::move(a), std::move(b), std::move(c)); }

const Rational half(1, 2), third(1, 3), quarter(1, 4), fifth(1, 5), seventh(1, 7);

} // namespace

TEST(Condition1, OddSum)
{
    const auto w = check_condition1(et(third, third, third));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->value, 1);
    EXPECT_EQ(w->negated, NegatedEntry::None);

    const auto w2 = check_condition1(et(half, half, 0));
    ASSERT_TRUE(w2);
    EXPECT_EQ(w2->value, 1);
}

TEST(Condition1, NoneForHyperbolic237)
{
    // All four signed sums of (1/2, 1/3, 1/7) lie strictly between -1 and 1
    // and are non-zero.
    const std::array<Rational, 4> sums{half + third + seventh, -half + third + seventh, half - third + seventh,
                                       half + third - seventh};
    for (const auto& s : sums) {
        EXPECT_LT(abs(s), 1);
        EXPECT_NE(s, 0);
    }
    EXPECT_FALSE(check_condition1(et(third, seventh, half)));
}

TEST(Condition1, EvenIntegerIsNotEnough)
{
    EXPECT_FALSE(check_condition1(et(0, 0, 0)));
    EXPECT_FALSE(check_condition1(et(1, 1, 0)));
    EXPECT_TRUE(check_condition1(et(1, 1, 1)));
}

TEST(Condition2, DihedralRow)
{
    const auto w = check_condition2(et(half, Rational(3, 2), fifth));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->row, 1);
    EXPECT_FALSE(w->shifts[2].has_value());
    EXPECT_TRUE(verify_witness(et(half, Rational(3, 2), fifth), *w));
}

TEST(Condition2, OctahedralRow)
{
    const auto e = et(half, third, quarter);
    const auto w = check_condition2(e);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->row, 4);
    EXPECT_FALSE(w->parity_used);
    EXPECT_TRUE(verify_witness(e, *w));
}

TEST(Condition2, TetrahedralRows)
{
    const auto w = check_condition2(et(half, third, third));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->row, 2);
    const auto w3 = check_condition2(et(Rational(2, 3), third, third));
    ASSERT_TRUE(w3);
    EXPECT_EQ(w3->row, 3);
    EXPECT_TRUE(w3->parity_used);
}

TEST(Condition2, ParityClauseBlocks)
{
    // (1/5, 1/5, 1/5) reaches row 13's (4/5, 1/5, 1/5) only via -1/5 = 4/5 - 1,
    // which makes l + m + n odd.
    EXPECT_FALSE(check_condition2(et(fifth, fifth, fifth)));
    // (4/5, 1/5, 1/5) itself matches with l = m = n = 0.
    EXPECT_TRUE(check_condition2(et(Rational(4, 5), fifth, fifth)));
}

TEST(Condition2, NoneForHyperbolic237)
{
    EXPECT_FALSE(check_condition2(et(third, seventh, half)));
}

TEST(Classify, Examples)
{
    EXPECT_TRUE(std::holds_alternative<StronglyMinimal>(classify(inv(half, third, seventh))));
    const auto v = classify(inv(third, third, third));
    ASSERT_TRUE(std::holds_alternative<NotStronglyMinimal>(v));
    EXPECT_TRUE(std::holds_alternative<Condition1Witness>(std::get<NotStronglyMinimal>(v).witness));
    EXPECT_TRUE(std::holds_alternative<GenericStronglyMinimal>(classify(AngleParams::generic())));
}

TEST(Classify, IrrationalRejected)
{
    const auto p = AngleParams::from_entries({half, AlgebraicValue{"sqrt(2)"}, third});
    EXPECT_THROW(classify(p), UnsupportedParams);
}

TEST(Witness, TamperedWitnessFails)
{
    const auto e = et(half, third, quarter);
    auto w = *check_condition2(e);
    w.shifts[0] = *w.shifts[0] + 1;
    EXPECT_FALSE(verify_witness(e, w));
    Condition1Witness bogus{NegatedEntry::None, 1};
    EXPECT_FALSE(verify_witness(e, bogus));
}

namespace {

std::vector<Rational> small_rationals()
{
    std::vector<Rational> out;
    for (long q = 1; q <= 6; ++q) {
        for (long p = -2 * q; p <= 2 * q; ++p) {
            Rational r = make_rational(p, q);
            if (std::find(out.begin(), out.end(), r) == out.end()) {
                out.push_back(r);
            }
        }
    }
    return out;
}

} // namespace

TEST(Properties, SignAndPermutationSymmetry)
{
    const auto pool = small_rationals();
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 500; ++i) {
        std::array<Rational, 3> v{pool[pick(rng)], pool[pick(rng)], pool[pick(rng)]};
        const bool base = is_strongly_minimal(classify(inv(v[0], v[1], v[2])));
        for (unsigned mask = 1; mask < 8; ++mask) {
            auto s = v;
            for (std::size_t k = 0; k < 3; ++k) {
                if ((mask >> k) & 1U) {
                    s[k] = -s[k];
                }
            }
            EXPECT_EQ(is_strongly_minimal(classify(inv(s[0], s[1], s[2]))), base);
        }
        std::array<int, 3> perm{0, 1, 2};
        while (std::next_permutation(perm.begin(), perm.end())) {
            EXPECT_EQ(is_strongly_minimal(classify(inv(v[perm[0]], v[perm[1]], v[perm[2]]))), base);
        }
    }
}

TEST(Properties, IntegerShiftSymmetry)
{
    const auto pool = small_rationals();
    for (std::size_t i = 0; i < pool.size(); i += 3) {
        for (std::size_t j = 0; j < pool.size(); j += 5) {
            for (std::size_t k = 0; k < pool.size(); k += 7) {
                const auto e = et(pool[i], pool[j], pool[k]);
                const auto w = check_condition2(e);
                if (!w) {
                    continue;
                }
                const Rational step = w->parity_used ? 2 : 1;
                for (int which = 0; which < 3; ++which) {
                    auto shifted = e;
                    (which == 0 ? shifted.at0 : which == 1 ? shifted.at1 : shifted.at_inf) += step;
                    EXPECT_TRUE(check_condition2(shifted).has_value());
                }
            }
        }
    }
}

TEST(Properties, WitnessSoundness)
{
    const auto pool = small_rationals();
    for (std::size_t i = 0; i < pool.size(); i += 2) {
        for (std::size_t j = 0; j < pool.size(); j += 3) {
            for (std::size_t k = 0; k < pool.size(); k += 4) {
                const auto v = classify(inv(pool[i], pool[j], pool[k]));
                if (const auto* n = std::get_if<NotStronglyMinimal>(&v)) {
                    EXPECT_TRUE(verify_witness(exponent_differences(inv(pool[i], pool[j], pool[k])), n->witness));
                }
            }
        }
    }
}

TEST(Properties, HyperbolicIntegerSignaturesStronglyMinimal)
{
    for (std::uint32_t k = 2; k <= 30; ++k) {
        for (std::uint32_t l = k; l <= 30; ++l) {
            for (std::uint32_t m = l; m <= 30; ++m) {
                const Signature sig{Order(k), Order(l), Order(m)};
                if (geometry(sig) != Geometry::Hyperbolic) {
                    continue;
                }
                EXPECT_TRUE(std::holds_alternative<StronglyMinimal>(classify(sig.to_angle_params())))
                    << sig.to_string();
            }
        }
    }
}
