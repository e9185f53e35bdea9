#include <gtest/gtest.h>

#include <algorithm>

#include <cfree/cfree.hpp>

#include "../support/oracles.hpp"

using namespace cfree;

namespace {

std::vector<std::vector<Block>> as_families(const std::vector<NCPartition> &ps)
{
    std::vector<std::vector<Block>> out;
    for (const auto &p : ps) {
        out.push_back(p.blocks());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(SetPartition, CanonicalisesBlockOrder)
{
    const SetPartition p(4, {{4, 2}, {3}, {1}});
    EXPECT_EQ(p.blocks(), (std::vector<Block>{{1}, {2, 4}, {3}}));
    EXPECT_EQ(p.size(), 3);
    EXPECT_EQ(p.block_of(4), p.block_of(2));
}

TEST(SetPartition, RejectsNonPartitions)
{
    EXPECT_THROW(SetPartition(3, {{1, 2}}), std::invalid_argument);
    EXPECT_THROW(SetPartition(3, {{1, 2}, {2, 3}}), std::invalid_argument);
    EXPECT_THROW(SetPartition(2, {{1, 3}}), std::invalid_argument);
}

TEST(NCPartition, RejectsCrossing)
{
    EXPECT_THROW(NCPartition(4, {{1, 3}, {2, 4}}), std::invalid_argument);
    EXPECT_FALSE(is_noncrossing(SetPartition(4, {{1, 3}, {2, 4}})));
    EXPECT_NO_THROW(NCPartition(4, {{1, 4}, {2, 3}}));
}

TEST(NCPartition, ExteriorInterior)
{
    const NCPartition p(5, {{1, 5}, {2, 3}, {4}});
    EXPECT_EQ(p.exterior_blocks(), (std::vector<int>{0}));
    EXPECT_EQ(p.interior_blocks(), (std::vector<int>{1, 2}));
    EXPECT_TRUE(p.has_singleton_block(4));
    EXPECT_FALSE(p.has_singleton_block(2));
    EXPECT_TRUE(is_nc1(p));
    EXPECT_FALSE(is_nc2(p));
}

TEST(Enumeration, CountsMatchCatalan)
{
    const auto c = oracle::catalan(10);
    for (int n = 1; n <= 10; ++n) {
        EXPECT_EQ(enumerate_nc(n).size(), c[static_cast<std::size_t>(n)]) << "n=" << n;
    }
}

TEST(Enumeration, SameSetAsBruteForce)
{
    for (int n = 1; n <= 7; ++n) {
        auto brute = oracle::nc_partitions(n);
        for (auto &f : brute) {
            std::sort(f.begin(), f.end());
        }
        std::sort(brute.begin(), brute.end());
        EXPECT_EQ(as_families(enumerate_nc(n)), brute) << "n=" << n;
    }
}

TEST(Enumeration, IsSortedAndForEachMatches)
{
    const auto all = enumerate_nc(6);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    std::vector<NCPartition> visited;
    for_each_nc(6, [&](const NCPartition &p) { visited.push_back(p); });
    EXPECT_EQ(visited, all);
}

TEST(Enumeration, Guards)
{
    EXPECT_THROW(enumerate_nc(0), std::invalid_argument);
    EXPECT_THROW(enumerate_nc(limits::max_nc + 1), resource_error);
    EXPECT_THROW(enumerate_ncl(limits::max_ncl + 1), resource_error);
    EXPECT_THROW(enumerate_nc_0(limits::max_nc_0 + 2), resource_error);
    EXPECT_THROW(enumerate_nc_s(5), std::invalid_argument);
    EXPECT_THROW(enumerate_nc_0(3), std::invalid_argument);
}

TEST(Kreweras, SmallCases)
{
    EXPECT_EQ(kreweras(NCPartition::one_block(4)), NCPartition::singletons(4));
    EXPECT_EQ(kreweras(NCPartition::singletons(4)), NCPartition::one_block(4));
    EXPECT_EQ(kreweras(NCPartition::singletons(1)), NCPartition::singletons(1));
}

TEST(Kreweras, MatchesBruteForceMaximum)
{
    for (int n = 1; n <= 7; ++n) {
        for (const auto &p : enumerate_nc(n)) {
            const auto k = kreweras(p);
            EXPECT_EQ(p.size() + k.size(), n + 1);
            EXPECT_TRUE(oracle::noncrossing(oracle::interleave(p.blocks(), k.blocks())));
            if (n <= 6) {
                EXPECT_EQ(k.blocks(), oracle::kreweras(p.blocks(), n)) << "n=" << n;
            }
        }
    }
}

TEST(Join, MatchesBruteForceMinimalUpperBound)
{
    for (int n = 1; n <= 6; ++n) {
        const auto all = enumerate_nc(n);
        for (std::size_t i = 0; i < all.size(); i += 3) {
            for (std::size_t j = 0; j < all.size(); j += 5) {
                EXPECT_EQ(nc_join(all[i], all[j]).blocks(), oracle::nc_join(all[i].blocks(), all[j].blocks(), n));
            }
        }
    }
    // Join in the set-partition lattice is (1,3)(2,4), which crosses.
    EXPECT_EQ(nc_join(NCPartition(4, {{1, 3}, {2}, {4}}), NCPartition(4, {{1}, {3}, {2, 4}})),
              NCPartition::one_block(4));
}

TEST(Doubling, SplitsEachElement)
{
    EXPECT_EQ(double_partition(NCPartition(2, {{1, 2}})).blocks(), (std::vector<Block>{{1, 2, 3, 4}}));
    EXPECT_EQ(double_partition(NCPartition::singletons(3)).blocks(),
              (std::vector<Block>{{1, 2}, {3, 4}, {5, 6}}));
}

TEST(ParityClasses, SmallExamples)
{
    EXPECT_EQ(enumerate_nc_s(2), (std::vector<NCPartition>{NCPartition::singletons(2)}));
    EXPECT_EQ(as_families(enumerate_nc_s(4)),
              (std::vector<std::vector<Block>>{{{1}, {2}, {3}, {4}}, {{1}, {2, 4}, {3}}, {{1, 3}, {2}, {4}}}));
    EXPECT_EQ(enumerate_nc_0(2), (std::vector<NCPartition>{NCPartition::singletons(2)}));
    EXPECT_EQ(as_families(enumerate_nc_0(4)),
              (std::vector<std::vector<Block>>{{{1}, {2, 4}, {3}}, {{1, 3}, {2}, {4}}}));
}

TEST(ParityClasses, FilterMatchesBruteForce)
{
    for (int n = 1; n <= 4; ++n) {
        std::size_t expected = 0;
        for (const auto &f : oracle::nc_partitions(2 * n)) {
            expected += oracle::parity_constant(f) ? 1 : 0;
        }
        EXPECT_EQ(enumerate_nc_s(2 * n).size(), expected);
    }
}

TEST(ParityClasses, ZeroClassByJoinCriterion)
{
    for (int n = 1; n <= 5; ++n) {
        const auto zero = enumerate_nc_0(2 * n);
        // Brute join: the finest NC partition above sigma and the doubled singletons.
        for (const auto &sigma : enumerate_nc_s(2 * n)) {
            const bool in = std::find(zero.begin(), zero.end(), sigma) != zero.end();
            if (n <= 3) {
                Block all;
                for (int e = 1; e <= 2 * n; ++e) {
                    all.push_back(e);
                }
                const auto j = oracle::nc_join(sigma.blocks(), double_partition(NCPartition::singletons(n)).blocks(),
                                               2 * n);
                EXPECT_EQ(in, j == std::vector<Block>{all});
            }
            EXPECT_EQ(in, nc_join(sigma, double_partition(NCPartition::singletons(n))) ==
                              NCPartition::one_block(2 * n));
        }
        for (const auto &sigma : zero) {
            EXPECT_TRUE(is_parity_preserving(sigma));
            EXPECT_EQ(even_part(sigma), kreweras(odd_part(sigma)));
            EXPECT_TRUE(is_nc2(sigma));
            const auto ext = sigma.exterior_blocks();
            const auto blocks = sigma.blocks();
            EXPECT_EQ(blocks[static_cast<std::size_t>(ext[0])].front(), 1);
            EXPECT_EQ(blocks[static_cast<std::size_t>(ext[1])].back(), 2 * n);
        }
    }
    EXPECT_EQ(enumerate_nc_0(12).size(), oracle::catalan(6)[6]);
}

TEST(ParityClasses, JoinFibers)
{
    const auto fibers4 = group_nc_s_by_join(4);
    EXPECT_EQ(fibers4.at(NCPartition::singletons(2)), (std::vector<NCPartition>{NCPartition::singletons(4)}));
    EXPECT_EQ(fibers4.at(NCPartition::one_block(2)), enumerate_nc_0(4));
    for (int n = 1; n <= 4; ++n) {
        std::set<NCPartition> seen;
        for (const auto &[pi, fiber] : group_nc_s_by_join(2 * n)) {
            for (const auto &sigma : fiber) {
                EXPECT_TRUE(seen.insert(sigma).second);
                EXPECT_EQ(nc_join(sigma, double_partition(NCPartition::singletons(n))), double_partition(pi));
            }
        }
        const auto all = enumerate_nc_s(2 * n);
        EXPECT_EQ(std::set<NCPartition>(all.begin(), all.end()), seen);
    }
}

TEST(Juxtapose, ShiftsSecondFactor)
{
    const NCPartition a(2, {{1, 2}});
    const NCPartition b(3, {{1, 3}, {2}});
    EXPECT_EQ(juxtapose(a, b).blocks(), (std::vector<Block>{{1, 2}, {3, 5}, {4}}));
    const NCLinkedPartition g(3, {{1, 2}, {2, 3}});
    EXPECT_EQ(juxtapose(g, NCLinkedPartition(a)).blocks(), (std::vector<Block>{{1, 2}, {2, 3}, {4, 5}}));
}

TEST(Restrict, NCAndLinked)
{
    const NCPartition p(5, {{1, 3, 5}, {2}, {4}});
    EXPECT_EQ(restrict(p, {1, 2, 3, 4, 5}), p);
    EXPECT_EQ(restrict(p, {2, 3, 5}).blocks(), (std::vector<Block>{{1}, {2, 3}}));
    EXPECT_THROW(restrict(p, {0, 2}), std::invalid_argument);
    EXPECT_THROW(restrict(p, {3, 2}), std::invalid_argument);

    const NCLinkedPartition g(3, {{1, 2}, {2, 3}});
    EXPECT_EQ(restrict(g, {2, 3}).blocks(), (std::vector<Block>{{1, 2}}));
    EXPECT_EQ(restrict(g, {1, 2, 3}), g);

    for (int n = 1; n <= 6; ++n) {
        for (const auto &q : enumerate_nc(n)) {
            std::vector<int> odd;
            for (int e = 1; e <= n; e += 2) {
                odd.push_back(e);
            }
            EXPECT_TRUE(is_noncrossing(restrict(q, odd)));
        }
    }
}

TEST(Linked, Validation)
{
    EXPECT_TRUE(is_valid_ncl(3, {{1, 2}, {2, 3}}));
    EXPECT_FALSE(is_valid_ncl(3, {{1, 2}, {1, 3}}));  // shared element is the minimum of both
    EXPECT_FALSE(is_valid_ncl(3, {{1, 2}, {2}, {3}})); // shared element in a singleton
    EXPECT_FALSE(is_valid_ncl(4, {{1, 3}, {2, 4}}));
    EXPECT_FALSE(is_valid_ncl(4, {{1, 2, 3}, {2, 3, 4}}));
    EXPECT_THROW(NCLinkedPartition(3, {{1, 2}, {1, 3}}), std::invalid_argument);
    const NCLinkedPartition g(3, {{2, 3}, {1, 2}});
    EXPECT_EQ(g.blocks(), (std::vector<Block>{{1, 2}, {2, 3}}));
    EXPECT_EQ(g.cover_count(2), 2);
    EXPECT_EQ(g.cover_count(3), 1);
}

TEST(Linked, ClassificationExample)
{
    const NCLinkedPartition g(12, {{1, 4, 6, 9}, {2, 3}, {4, 5}, {6, 7, 8}, {10, 11}, {11, 12}});
    const auto c = ncl_classify(g);
    EXPECT_EQ(c.exterior, (std::vector<Block>{{1, 4, 6, 9}, {10, 11}}));
    EXPECT_EQ(c.interior, (std::vector<Block>{{2, 3}, {4, 5}, {6, 7, 8}, {11, 12}}));
    EXPECT_EQ(c.doubly, (std::set<int>{4, 6, 11}));
    EXPECT_EQ(c.singly.size(), 9u);
}

TEST(Linked, CountsMatchBlockFamilyOracle)
{
    for (int n = 1; n <= 7; ++n) {
        const auto lib = enumerate_ncl(n);
        const auto brute = oracle::ncl_families(n);
        ASSERT_EQ(lib.size(), brute.size()) << "n=" << n;
        for (std::size_t i = 0; i < lib.size(); ++i) {
            EXPECT_EQ(lib[i].blocks(), brute[i]);
        }
    }
    EXPECT_EQ(enumerate_ncl(3).size(), 6u);
    EXPECT_EQ(enumerate_ncl(4).size(), 22u);
}

TEST(Linked, ContainsNCWithSameExterior)
{
    for (int n = 1; n <= 6; ++n) {
        const auto ncl = enumerate_ncl(n);
        for (const auto &p : enumerate_nc(n)) {
            const NCLinkedPartition g(p);
            ASSERT_TRUE(std::binary_search(ncl.begin(), ncl.end(), g));
            const auto c = ncl_classify(g);
            const auto blocks = p.blocks();
            std::vector<Block> ext;
            for (int i : p.exterior_blocks()) {
                ext.push_back(blocks[static_cast<std::size_t>(i)]);
            }
            EXPECT_EQ(c.exterior, ext);
            EXPECT_EQ(is_nc1(p), c.exterior.size() == 1);
            EXPECT_EQ(is_nc2(p), c.exterior.size() == 2);
            EXPECT_TRUE(c.doubly.empty());
        }
    }
}
