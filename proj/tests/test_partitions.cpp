#include <algorithm>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include <gga/partitions.hpp>

#include "oracles.hpp"

using gga::integer;
using gga::IdentityParams;
using gga::Partition;

namespace
{

std::vector<std::vector<int>> as_vectors(const std::vector<Partition> &ps)
{
    std::vector<std::vector<int>> out;
    for (const auto &p : ps) {
        out.emplace_back(p.parts().begin(), p.parts().end());
    }
    return out;
}

} // namespace

TEST(Partition, Validation)
{
    EXPECT_NO_THROW(Partition({3, 3, 1}));
    EXPECT_NO_THROW(Partition(std::vector<int>{}));
    EXPECT_THROW(Partition({1, 3}), gga::invalid_part);
    EXPECT_THROW(Partition({2, 0}), gga::invalid_part);
    const Partition p({5, 3, 3, 1});
    EXPECT_EQ(p.weight(), 12);
    EXPECT_EQ(p.multiplicity(3), 2);
    EXPECT_EQ(p.multiplicity(4), 0);
}

TEST(IdentityParams, Validation)
{
    const auto p = IdentityParams::make(3, 1, 2, 10);
    EXPECT_EQ(p.ell(), 3);
    EXPECT_EQ(p.c_index(), 7);
    EXPECT_THROW(IdentityParams::make(1, 1, 0, 5), gga::param_error);
    EXPECT_THROW(IdentityParams::make(3, 4, 0, 5), gga::param_error);
    EXPECT_THROW(IdentityParams::make(3, 0, 0, 5), gga::param_error);
    EXPECT_THROW(IdentityParams::make(3, 1, -1, 5), gga::param_error);
    EXPECT_THROW(IdentityParams::make(3, 1, 0, -1), gga::param_error);
}

TEST(Enumerate, SmallCases)
{
    EXPECT_EQ(as_vectors(gga::enumerate_partitions(4)),
              (std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
    EXPECT_EQ(as_vectors(gga::enumerate_partitions(0)), (std::vector<std::vector<int>>{{}}));
    EXPECT_EQ(as_vectors(gga::enumerate_partitions(5, 2)), (std::vector<std::vector<int>>{{5}, {3, 2}}));
}

TEST(Enumerate, CountsAndOrder)
{
    const auto p = oracle::pentagonal_p(25);
    for (int n = 0; n <= 25; ++n) {
        const auto ps = as_vectors(gga::enumerate_partitions(n));
        ASSERT_EQ(ps.size(), p[static_cast<std::size_t>(n)]);
        EXPECT_TRUE(std::is_sorted(ps.rbegin(), ps.rend())) << "n=" << n;
        EXPECT_EQ(std::set<std::vector<int>>(ps.begin(), ps.end()).size(), ps.size());
    }
}

TEST(AllowedParts, Examples)
{
    EXPECT_EQ(gga::allowed_parts_C(2, 1, 12), (std::vector<int>{1, 4, 7, 9, 12}));
    EXPECT_EQ(gga::allowed_parts_C(2, 2, 12), (std::vector<int>{3, 4, 5, 11, 12}));
    // Frozen from the residue filter; 12 = 0 mod 12 is excluded.
    EXPECT_EQ(gga::allowed_parts_C(3, 2, 12), (std::vector<int>{1, 4, 5, 7, 8, 11}));
    EXPECT_THROW(gga::allowed_parts_C(2, 3, 12), gga::index_out_of_range);
    EXPECT_THROW(gga::allowed_parts_C(1, 1, 12), gga::param_error);
}

TEST(AllowedParts, AgreesWithOracleFilter)
{
    for (int r = 2; r <= 6; ++r) {
        for (int idx = 1; idx <= r; ++idx) {
            const auto got = gga::allowed_parts_C(r, idx, 80);
            const auto want = oracle::product_parts(r, idx, 80);
            EXPECT_EQ(std::set<int>(got.begin(), got.end()), want) << "r=" << r << " idx=" << idx;
        }
    }
}

TEST(CountC, Examples)
{
    const auto p = IdentityParams::make(2, 2, 0, 8);
    EXPECT_EQ(gga::count_C(p, 5), 2);
    EXPECT_EQ(gga::count_C(p, 8), 4);
    EXPECT_EQ(gga::count_C(p, 0), 1);
}

TEST(CountC, MatchesEnumerationOverAllowedParts)
{
    for (int r = 2; r <= 4; ++r) {
        for (int i = 1; i <= r; ++i) {
            const auto params = IdentityParams::make(r, i, 0, 24);
            const auto parts = oracle::product_parts(r, r - i + 1, 24);
            for (int n = 0; n <= 24; ++n) {
                ASSERT_EQ(gga::count_C(params, n), oracle::count_with_parts_in(n, parts))
                    << "r=" << r << " i=" << i << " n=" << n;
            }
        }
    }
}

TEST(SatisfiesD, Examples)
{
    EXPECT_TRUE(gga::satisfies_D(std::vector<int>{4, 1}, 2, 2));
    EXPECT_FALSE(gga::satisfies_D(std::vector<int>{3, 3}, 2, 2));
    EXPECT_FALSE(gga::satisfies_D(std::vector<int>{1, 1}, 2, 2));
    EXPECT_TRUE(gga::satisfies_D(std::vector<int>{}, 2, 1));
    // Only boundary parts 1 and 2 are limited by i.
    EXPECT_FALSE(gga::satisfies_D(std::vector<int>{2}, 2, 1));
    EXPECT_TRUE(gga::satisfies_D(std::vector<int>{2}, 2, 2));
}

TEST(CountD, Examples)
{
    EXPECT_EQ(gga::count_D(2, 2, 5), 2);
    EXPECT_EQ(gga::count_D(2, 2, 6), 2);
    EXPECT_EQ(gga::count_D(2, 1, 1), 0);
}

TEST(CountE, Examples)
{
    EXPECT_EQ(gga::count_E(2, 2, 1, 7), 1);
    EXPECT_EQ(gga::series_E(2, 1, 0, 3), (gga::TruncatedSeries{1, 0, 0, 1}));
    EXPECT_THROW(gga::count_E(2, 3, 0, 4), gga::param_error);
    EXPECT_THROW(gga::count_E(2, 1, -1, 4), gga::param_error);
    EXPECT_THROW(gga::series_E(2, 1, 0, -2), gga::param_error);
}

TEST(CountE, MatchesLiteralFilter)
{
    for (int r = 2; r <= 4; ++r) {
        for (int i = 1; i <= r; ++i) {
            for (int J = 0; J <= 2; ++J) {
                const auto s = gga::series_E(r, i, J, 20);
                for (int n = 0; n <= 20; ++n) {
                    ASSERT_EQ(s[n], oracle::count_E(r, i, J, n)) << r << ' ' << i << ' ' << J << ' ' << n;
                }
            }
        }
    }
}

TEST(CountE, SeriesAgreesWithPointwiseCount)
{
    const auto s = gga::series_E(3, 2, 1, 18);
    for (int n = 0; n <= 18; ++n) {
        EXPECT_EQ(s[n], gga::count_E(3, 2, 1, n));
    }
}

TEST(PartitionProperties, EAtLevelZeroIsD)
{
    for (int r = 2; r <= 4; ++r) {
        for (int i = 1; i <= r; ++i) {
            for (int n = 0; n <= 22; ++n) {
                ASSERT_EQ(gga::count_E(r, i, 0, n), gga::count_D(r, i, n)) << r << ' ' << i << ' ' << n;
            }
        }
    }
}

TEST(PartitionProperties, MonotoneInI)
{
    for (int r = 2; r <= 4; ++r) {
        for (int J = 0; J <= 2; ++J) {
            for (int i = 1; i < r; ++i) {
                const auto lo = gga::series_E(r, i, J, 22);
                const auto hi = gga::series_E(r, i + 1, J, 22);
                for (int n = 0; n <= 22; ++n) {
                    ASSERT_LE(lo[n], hi[n]) << r << ' ' << i << ' ' << J << ' ' << n;
                }
            }
        }
    }
}

TEST(PartitionProperties, LevelShiftFiltersSmallParts)
{
    // With i = r the boundary cap follows from the gap condition, so
    // E_{r,r,J} is the set of D_{r,r} partitions with every part above 2J.
    for (int r = 2; r <= 3; ++r) {
        for (int J = 0; J <= 2; ++J) {
            for (int n = 0; n <= 20; ++n) {
                integer filtered = 0;
                gga::for_each_partition(n, 2 * J + 1, [&](std::span<const int> p) {
                    filtered += oracle::is_E(std::vector<int>(p.begin(), p.end()), r, r, 0) ? 1 : 0;
                });
                ASSERT_EQ(gga::count_E(r, r, J, n), filtered) << r << ' ' << J << ' ' << n;
            }
        }
    }
}

TEST(PartitionProperties, GapConditionVacuousForShortPartitions)
{
    // Fewer than r parts: only the repeated-odd and boundary conditions apply.
    const int r = 4;
    for (int n = 0; n <= 16; ++n) {
        for (const auto &p : oracle::partitions(n)) {
            if (static_cast<int>(p.size()) >= r) {
                continue;
            }
            bool repeated_odd = false;
            int boundary = 0;
            for (std::size_t m = 0; m < p.size(); ++m) {
                repeated_odd = repeated_odd || (m + 1 < p.size() && p[m] == p[m + 1] && p[m] % 2 == 1);
                boundary += p[m] <= 2;
            }
            EXPECT_EQ(gga::satisfies_D(p, r, r), !repeated_odd && boundary <= r - 1);
        }
    }
}
