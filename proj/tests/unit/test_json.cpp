#include <gtest/gtest.h>

#include <cfree/cfree.hpp>

#include "../support/helpers.hpp"

using namespace cfree;
using namespace testing_helpers;

TEST(Json, PartitionRoundTrip)
{
    const NCPartition p(5, {{1, 5}, {2, 3}, {4}});
    const json j = to_json(p);
    EXPECT_EQ(j.dump(), R"({"blocks":[[1,5],[2,3],[4]],"n":5})");
    EXPECT_EQ(nc_partition_from_json(j), p);

    const NCLinkedPartition g(3, {{1, 2}, {2, 3}});
    EXPECT_EQ(ncl_partition_from_json(to_json(g)), g);
    EXPECT_THROW(nc_partition_from_json(json::parse(R"({"n":4,"blocks":[[1,3],[2,4]]})")), std::invalid_argument);
    EXPECT_THROW(nc_partition_from_json(json::parse(R"({"blocks":[[1]]})")), std::invalid_argument);
}

TEST(Json, SeriesRoundTrip)
{
    const SQ s = sq(3, {0, q(1, 2), Q(mpq_class(-3), mpq_class(2, 7))});
    const json j = to_json(s);
    EXPECT_EQ(j.at("mode"), "exact");
    EXPECT_EQ(std::get<SQ>(series_from_json(j)), s);

    const SD d(2, {ComplexDouble{0.25, -1.5}, ComplexDouble{3.0}});
    EXPECT_EQ(std::get<SD>(series_from_json(to_json(d))), d);

    const auto plain = series_from_json(json::parse(R"({"order":2,"mode":"exact","coeffs":["0","1/3",2]})"));
    EXPECT_EQ(std::get<SQ>(plain), sq(2, {0, q(1, 3), q(2)}));
    EXPECT_THROW(series_from_json(json::parse(R"({"order":2,"mode":"fuzzy","coeffs":[]})")), std::invalid_argument);
    EXPECT_THROW(series_from_json(json::parse(R"({"order":1,"mode":"exact","coeffs":["1","2","3"]})")),
                 std::invalid_argument);
}

TEST(Json, MeasuresAndPairs)
{
    const json atomic = json::parse(R"({"type":"atomic","atoms":[{"turns":"1/4","weight":"1/3"},{"turns":"5/4","weight":"2/3"}]})");
    const auto m = measure_from_json(atomic);
    const auto &a = std::get<Atomic>(m);
    EXPECT_EQ(a.atoms.size(), 2u);
    EXPECT_EQ(measure_from_json(to_json(m)).index(), m.index());
    EXPECT_TRUE(is_haar(measure_from_json(json::parse(R"({"type":"haar"})"))));
    const auto p = measure_from_json(json::parse(R"({"type":"poisson","alpha":[0.5,0.25]})"));
    EXPECT_EQ(std::get<PoissonKernel>(p).alpha, ComplexDouble(0.5, 0.25));
    const auto ms = measure_from_json(json::parse(R"({"type":"moments","values":[[0.5,0],[0.25,0.1]]})"));
    EXPECT_EQ(std::get<MomentSeq>(ms).values.size(), 2u);
    EXPECT_THROW(measure_from_json(json::parse(R"({"type":"cantor"})")), std::invalid_argument);

    const MeasurePair pair{Haar{}, dirac(mpq_class(1, 3))};
    const auto back = pair_from_json(to_json(pair));
    EXPECT_TRUE(is_haar(back.mu));
    EXPECT_EQ(std::get<Atomic>(back.nu).atoms, std::get<Atomic>(pair.nu).atoms);
}

TEST(Json, Generator)
{
    const auto g = generator_from_json(json::parse(R"({"gamma":"1/4","sigma":[{"turns":"0","weight":"1/2"}]})"));
    EXPECT_NEAR(std::abs(g.gamma - ComplexDouble(0.0, 1.0)), 0.0, 1e-15);
    ASSERT_EQ(g.sigma.size(), 1u);
    EXPECT_EQ(g.sigma[0].weight, mpq_class(1, 2));
    const auto h = generator_from_json(json::parse(R"({"gamma":[0,-1],"sigma":{"atoms":[]}})"));
    EXPECT_EQ(h.gamma, ComplexDouble(0.0, -1.0));
    EXPECT_TRUE(h.sigma.empty());
}
