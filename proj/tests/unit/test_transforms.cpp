#include <gtest/gtest.h>

#include <cfree/cfree.hpp>

#include "../support/helpers.hpp"
#include "../support/oracles.hpp"

using namespace cfree;
using namespace testing_helpers;

namespace {

// Sum over the brute-force NCL block families of t0^{n-|g|} prod t_{|B|-1},
// with exterior blocks (no other block D with min D < min B <= max D) taking
// weights from `ext`.
Q ncl_moment(const SQ &t, const SQ &ext, int n)
{
    Q total(0);
    for (const auto &g : oracle::ncl_families(n)) {
        Q term = ipow(t[0], static_cast<unsigned>(n - static_cast<int>(g.size())));
        for (const auto &b : g) {
            bool interior = false;
            for (const auto &d : g) {
                interior = interior || (d != b && d.front() < b.front() && b.front() <= d.back());
            }
            term = term * (interior ? t : ext)[b.size() - 1];
        }
        total = total + term;
    }
    return total;
}

} // namespace

TEST(RTransform, SolvesFunctionalEquation)
{
    RandomInputs rnd(41);
    for (int i = 0; i < 10; ++i) {
        const SQ m = rnd.series(7);
        const SQ M = rnd.series(7);
        const SQ R = r_transform(m);
        const SQ one = SQ::constant(7, 1);
        EXPECT_EQ(compose(R, SQ::identity(7) * (one + m)), m);
        EXPECT_EQ(R, free_cumulants_from_moments(m));
        const SQ cR = cr_transform(M, m);
        EXPECT_EQ(compose(cR, SQ::identity(7) * (one + m)) * (one + M), M * (one + m));
        EXPECT_EQ(cR, cfree_cumulants_from_moments(M, m));
    }
    const SQ m = sq(3, {0, q(2), q(7)});
    EXPECT_EQ(r_transform(m)[1], q(2));
    EXPECT_EQ(r_transform(m)[2], q(3));
}

TEST(TTransform, PointMassIsConstant)
{
    const Q lambda(mpq_class(3, 5), mpq_class(4, 5));
    const SQ m = point_mass_moments(lambda, 6);
    EXPECT_EQ(t_transform(m), SQ::constant(5, lambda));
    EXPECT_EQ(ct_transform(m, m), SQ::constant(5, lambda));
    EXPECT_THROW(t_transform(sq(4, {0, 0, 1})), std::domain_error);
    EXPECT_THROW(ct_transform(sq(4, {0, 1}), sq(4, {0, 0, 1})), std::domain_error);
}

TEST(TTransform, EqualStatesGiveEqualT)
{
    RandomInputs rnd(42);
    for (int i = 0; i < 10; ++i) {
        const SQ m = rnd.series(6);
        EXPECT_EQ(ct_transform(m, m), t_transform(m));
    }
}

TEST(EtaB, Examples)
{
    const Q lambda = qi(1);
    const SQ m = point_mass_moments(lambda, 5);
    EXPECT_EQ(eta_transform(m), sq(5, {0, lambda}));
    EXPECT_EQ(b_transform(m), SQ::constant(4, lambda));
    EXPECT_TRUE(eta_transform(SQ(5)).is_zero());
    EXPECT_TRUE(b_transform(SQ(5)).is_zero());

    RandomInputs rnd(43);
    const SQ x = rnd.series(6);
    EXPECT_EQ(moments_from_eta(eta_transform(x)), x);
    EXPECT_EQ(moments_from_b(b_transform(x)), x);
}

TEST(Sigma, DualRoutesAndPointMass)
{
    RandomInputs rnd(44);
    for (int i = 0; i < 20; ++i) {
        const SQ M = rnd.series(8);
        const SQ m = rnd.series(8);
        const auto routes = sigma_routes(M, m);
        EXPECT_EQ(routes.via_ct, routes.via_b);
        EXPECT_EQ(routes.via_b[0], M[1]);
        EXPECT_EQ(sigma_series(M, m), routes.via_b);
    }
    const Q lambda(mpq_class(-3, 5), mpq_class(4, 5));
    const SQ delta = point_mass_moments(lambda, 8);
    EXPECT_EQ(sigma_series(delta, rnd.series(8)), SQ::constant(7, lambda));
    EXPECT_THROW(sigma_series(delta, sq(8, {0, 0, 1})), std::domain_error);
}

TEST(InverseIdentities, LowOrderWitnesses)
{
    const Q t0 = q(2), t1 = q(-1, 3), t2 = qi(5), c0 = q(7), c1 = q(1, 2);
    const SQ t = sq(2, {t0, t1, t2});
    const SQ ct = sq(2, {c0, c1, q(3)});
    const SQ m = moments_from_t(t);
    ASSERT_EQ(m.order(), 3u);
    EXPECT_EQ(m[1], t0);
    EXPECT_EQ(m[2], t0 * t1 + t0 * t0);
    EXPECT_EQ(m[3], t0 * t0 * t0 + q(3) * t0 * t0 * t1 + t0 * t1 * t1 + t0 * t0 * t2);
    const SQ M = phi_moments_from_ct(ct, m);
    EXPECT_EQ(M[1], c0);
    EXPECT_EQ(M[2], t0 * c1 + c0 * c0);
    EXPECT_THROW(moments_from_t(sq(2, {0, 1})), std::domain_error);
}

TEST(InverseIdentities, ThreeWayAgreement)
{
    RandomInputs rnd(45);
    for (int i = 0; i < 3; ++i) {
        const SQ t = rnd.unit_series(6);
        const SQ ct = rnd.unit_series(6);
        const SQ m = moments_from_t(t);
        const SQ M = phi_moments_from_ct(ct, m);
        EXPECT_EQ(t_transform(m), t);
        EXPECT_EQ(ct_transform(M, m), ct);
        for (int n = 1; n <= 7; ++n) {
            EXPECT_EQ(moments_via_ncl(t, std::optional<SQ>{}, n), m[static_cast<std::size_t>(n)]);
            EXPECT_EQ(moments_via_ncl(t, std::optional<SQ>{ct}, n), M[static_cast<std::size_t>(n)]);
            if (n <= 6) {
                EXPECT_EQ(ncl_moment(t, t, n), m[static_cast<std::size_t>(n)]);
                EXPECT_EQ(ncl_moment(t, ct, n), M[static_cast<std::size_t>(n)]);
            }
        }
    }
}

TEST(Multiplicativity, ProductLawsFromZeroClassSums)
{
    RandomInputs rnd(46);
    for (int i = 0; i < 5; ++i) {
        const auto X = TwoStateData<Q>::from_cumulants(rnd.series(5), rnd.series(5));
        const auto Y = TwoStateData<Q>::from_cumulants(rnd.series(5), rnd.series(5));
        const auto XY = TwoStateData<Q>::from_cumulants(product_psi_cumulant_series(X, Y),
                                                         product_phi_cumulant_series(X, Y));
        EXPECT_EQ(t_transform(XY.psi.m), t_transform(X.psi.m) * t_transform(Y.psi.m));
        EXPECT_EQ(ct_transform(XY.M, XY.psi.m), ct_transform(X.M, X.psi.m) * ct_transform(Y.M, Y.psi.m));
    }
}

TEST(STransform, ReciprocalOfT)
{
    RandomInputs rnd(47);
    const SQ m = rnd.series(6);
    EXPECT_EQ(s_transform(m) * t_transform(m), SQ::constant(5, 1));
}

TEST(Bundle, MatchesFreeFunctions)
{
    RandomInputs rnd(48);
    const SQ m = rnd.series(6);
    const SQ M = rnd.series(6);
    const TransformBundle<Q> b(m, M);
    EXPECT_EQ(b.r(), r_transform(m));
    EXPECT_EQ(b.cr(), cr_transform(M, m));
    EXPECT_EQ(b.t(), t_transform(m));
    EXPECT_EQ(b.ct(), ct_transform(M, m));
    EXPECT_EQ(b.eta(), eta_transform(m));
    EXPECT_EQ(b.b(), b_transform(m));
    EXPECT_EQ(b.sigma(), sigma_series(M, m));
}

TEST(Approx, DoubleModeAgrees)
{
    RandomInputs rnd(49);
    const SQ m = rnd.series(6);
    const SQ M = rnd.series(6);
    EXPECT_LT(max_abs_diff(to_approx(ct_transform(M, m)), ct_transform(to_approx(M), to_approx(m))), 1e-8);
    EXPECT_LT(max_abs_diff(to_approx(sigma_series(M, m)), sigma_series(to_approx(M), to_approx(m))), 1e-8);
}
