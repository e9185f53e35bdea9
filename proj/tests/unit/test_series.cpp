#include <gtest/gtest.h>

#include <cfree/cfree.hpp>

#include "../support/helpers.hpp"
#include "../support/oracles.hpp"

using namespace cfree;
using namespace testing_helpers;

TEST(SeriesArith, Basics)
{
    const SQ z = SQ::identity(3);
    EXPECT_EQ(z + sq(3, {0, 0, 1}), sq(3, {0, 1, 1}));
    EXPECT_EQ(sq(3, {1, 1}) * sq(3, {1, -1}), sq(3, {1, 0, -1}));
    EXPECT_TRUE((sq(3, {0, 0, 0, 1}) * z).is_zero());
    EXPECT_EQ(sq(2, {1, 2}) * q(3), sq(2, {3, 6}));
    EXPECT_THROW(SQ(2) + SQ(3), std::invalid_argument);
    EXPECT_THROW(SQ(2).at(3), std::out_of_range);
    EXPECT_THROW(SQ(1, {1, 2, 3}), std::invalid_argument);
}

TEST(SeriesCompose, Examples)
{
    const SQ f = sq(4, {q(1, 2), 2, qi(1), 0, 5});
    EXPECT_EQ(compose(f, SQ::identity(4)), f);

    const Q lambda = q(2, 3);
    SQ geometric(4);
    for (std::size_t i = 1; i <= 4; ++i) {
        geometric.set(i, 1);
    }
    EXPECT_EQ(compose(geometric, sq(4, {0, lambda})), point_mass_moments(lambda, 4));
    EXPECT_THROW(compose(f, sq(4, {1, 1})), std::domain_error);
}

TEST(SeriesInvert, Examples)
{
    EXPECT_EQ(invert_composition(SQ::identity(5)), SQ::identity(5));
    const Q a = q(3), b = q(-2, 5);
    const auto inv = invert_composition(sq(2, {0, a, b}));
    EXPECT_EQ(inv, sq(2, {0, Q(1) / a, Q(0) - b / (a * a * a)}));
    EXPECT_EQ(invert_composition(sq(4, {0, 1, 1})), sq(4, {0, 1, -1, 2, -5}));
    EXPECT_THROW(invert_composition(sq(3, {0, 0, 1})), std::domain_error);
    EXPECT_THROW(invert_composition(sq(3, {1, 1})), std::domain_error);
}

TEST(SeriesInvert, RoundTripRandom)
{
    RandomInputs rnd(11);
    for (int i = 0; i < 30; ++i) {
        const SQ f = rnd.series(7);
        EXPECT_EQ(compose(invert_composition(f), f), SQ::identity(7));
        EXPECT_EQ(compose(f, invert_composition(f)), SQ::identity(7));
    }
}

TEST(SeriesReciprocal, Examples)
{
    EXPECT_EQ(reciprocal(SQ::constant(3, 1)), SQ::constant(3, 1));
    EXPECT_EQ(reciprocal(sq(3, {1, -1})), sq(3, {1, 1, 1, 1}));
    EXPECT_THROW(reciprocal(SQ::identity(3)), std::domain_error);
    RandomInputs rnd(12);
    for (int i = 0; i < 20; ++i) {
        const SQ f = rnd.unit_series(6);
        EXPECT_EQ(f * reciprocal(f), SQ::constant(6, 1));
    }
}

TEST(SeriesShift, DivideAndMultiplyByZ)
{
    const SQ f = sq(3, {0, 1, 2, 3});
    EXPECT_EQ(divide_by_z(f), sq(2, {1, 2, 3}));
    EXPECT_EQ(multiply_by_z(divide_by_z(f)), f);
    EXPECT_THROW(divide_by_z(sq(2, {1})), std::domain_error);
    EXPECT_EQ(extended(sq(1, {1, 2}), 3), sq(3, {1, 2}));
}

TEST(SeriesApprox, DoubleModeMatchesExact)
{
    RandomInputs rnd(13);
    const SQ f = rnd.series(6);
    const SQ g = rnd.series(6);
    const SD fd = to_approx(f);
    const SD gd = to_approx(g);
    EXPECT_LT(max_abs_diff(to_approx(compose(f, g)), compose(fd, gd)), 1e-12);
    EXPECT_LT(max_abs_diff(to_approx(invert_composition(f)), invert_composition(fd)), 1e-9);
}

TEST(CfWeight, Examples)
{
    const SQ f = sq(4, {0, 2, 3, 5, 7});
    EXPECT_EQ(cf_weight(NCPartition::singletons(4), f), q(16));
    EXPECT_EQ(cf_weight(NCPartition::one_block(4), f), q(7));
    EXPECT_EQ(cf_weight(NCPartition(3, {{1, 2}, {3}}), f), q(6));
    const SQ t = sq(4, {11, 2, 3, 5, 7});
    EXPECT_EQ(cf_weight(NCPartition(3, {{1, 2}, {3}}), t, IndexShift::minus_one), q(22));
    EXPECT_EQ(cf_weight(NCLinkedPartition(3, {{1, 2}, {2, 3}}), f), q(9));
}

namespace {

// gamma_n as a direct sum over brute-force NC(n) with brute-force Kreweras.
Q boxed_brute(const SQ &f, const SQ &g, int n)
{
    Q total(0);
    for (const auto &p : oracle::nc_partitions(n)) {
        Q term(1);
        for (const auto &b : p) {
            term = term * f[b.size()];
        }
        for (const auto &b : oracle::kreweras(p, n)) {
            term = term * g[b.size()];
        }
        total = total + term;
    }
    return total;
}

} // namespace

TEST(BoxedConvolution, LowOrderFormulas)
{
    const Q a1 = q(2), a2 = q(-1, 3), b1 = qi(1), b2 = q(5, 2);
    const SQ f = sq(2, {0, a1, a2});
    const SQ g = sq(2, {0, b1, b2});
    const SQ box = boxed_convolution(f, g);
    EXPECT_EQ(box[1], a1 * b1);
    EXPECT_EQ(box[2], a2 * b1 * b1 + a1 * a1 * b2);

    const SQ chk = boxed_convolution_checked(f, g);
    EXPECT_EQ(chk[1], a1 * b1);
    EXPECT_EQ(chk[2], a1 * a1 * b2);

    const SQ h = sq(5, {0, 4, 1, -2, 3, qi(1)});
    EXPECT_EQ(boxed_convolution(SQ::identity(5), h), h);
}

TEST(BoxedConvolution, MatchesBruteForceSum)
{
    RandomInputs rnd(21);
    for (int i = 0; i < 5; ++i) {
        const SQ f = rnd.series(6);
        const SQ g = rnd.series(6);
        const SQ box = boxed_convolution(f, g);
        for (int n = 1; n <= 6; ++n) {
            EXPECT_EQ(box[static_cast<std::size_t>(n)], boxed_brute(f, g, n));
        }
    }
}

TEST(BoxedConvolution, CheckedIdentity)
{
    const SQ f = sq(3, {0, q(3), q(-1, 2)});
    const SQ g = sq(3, {0, q(2, 3), qi(2)});
    const SQ lhs = compose(invert_composition(f), boxed_convolution(f, g));
    const SQ chk = boxed_convolution_checked(f, g);
    EXPECT_EQ(lhs, chk * (Q(1) / f[1]));
    EXPECT_EQ(lhs[1], g[1]);
    EXPECT_EQ(lhs[2], f[1] * g[2]);

    RandomInputs rnd(22);
    for (int i = 0; i < 20; ++i) {
        const SQ a = rnd.series(6);
        const SQ b = rnd.series(6);
        EXPECT_EQ(compose(invert_composition(a), boxed_convolution(a, b)),
                  boxed_convolution_checked(a, b) * (Q(1) / a[1]));
    }
}

TEST(BoxedConvolution, Preconditions)
{
    EXPECT_THROW(boxed_convolution(sq(3, {1, 1}), SQ::identity(3)), std::domain_error);
    EXPECT_THROW(boxed_convolution(SQ::identity(3), SQ::identity(4)), std::invalid_argument);
}
