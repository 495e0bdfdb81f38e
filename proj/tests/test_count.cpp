#include <map>
#include <optional>

#include "doctest.h"

#include "hanoi/count.hpp"

using namespace hanoi;

namespace {

// Oracle: every composition of n-1 into k-2 nonnegative blocks, evaluated
// with a plain recursion that shares no code with the engine.
MoveCount brute_t(int n, int k);

std::vector<std::vector<int>> compositions(int total, int parts)
{
    if (parts == 1)
        return {{total}};
    std::vector<std::vector<int>> out;
    for (int first = 0; first <= total; ++first)
        for (auto& rest : compositions(total - first, parts - 1)) {
            rest.insert(rest.begin(), first);
            out.push_back(rest);
        }
    return out;
}

MoveCount brute_cost(const std::vector<int>& blocks, int k)
{
    MoveCount c = 1;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        c += 2 * brute_t(blocks[i], k - static_cast<int>(i));
    return c;
}

MoveCount brute_t(int n, int k)
{
    static std::map<std::pair<int, int>, MoveCount> seen;
    if (n == 0)
        return 0;
    if (k == 3)
        return 2 * brute_t(n - 1, 3) + 1;
    if (auto it = seen.find({n, k}); it != seen.end())
        return it->second;
    std::optional<MoveCount> best;
    for (const auto& c : compositions(n - 1, k - 2)) {
        auto v = brute_cost(c, k);
        if (!best || v < *best)
            best = v;
    }
    seen[{n, k}] = *best;
    return *best;
}

MoveCount pow2m1(int n)
{
    MoveCount v = 1;
    v <<= n;
    return v - 1;
}

}  // namespace

TEST_CASE("count_three_peg")
{
    CHECK(count_three_peg(0) == 0);
    CHECK(count_three_peg(3) == 7);
    CHECK(count_three_peg(8) == 255);
    CHECK(count_three_peg(64).str() == "18446744073709551615");
    CHECK(count_three_peg(100).str() == "1267650600228229401496703205375");
}

TEST_CASE("count_stewart examples")
{
    CountEngine e;
    CHECK(e.stewart(0, 4) == 0);
    CHECK(e.stewart(3, 4) == 5);
    CHECK(e.stewart(2, 4) == 3);
    CHECK(e.stewart(10, 4) == 49);  // oracle value, see test_oracle
    CHECK_THROWS_AS(e.stewart(3, 2), InvalidConfiguration);
}

TEST_CASE("count_stewart agrees with brute-force composition enumeration")
{
    CountEngine e;
    for (int k = 3; k <= 6; ++k)
        for (int n = 0; n <= (k <= 4 ? 14 : 10); ++n)
            CHECK_MESSAGE(e.stewart(n, k) == brute_t(n, k), "n=" << n << " k=" << k);
}

TEST_CASE("count_frame")
{
    CountEngine e;
    CHECK(e.frame(3, 4) == 5);
    CHECK(e.frame_detailed(3, 4).small_tower_fallback);
    CHECK(e.frame(5, 4) == 13);
    CHECK_FALSE(e.frame_detailed(5, 4).small_tower_fallback);
    CHECK(e.frame(3, 5) == 5);
    CHECK(e.frame(0, 5) == 0);
    CHECK(e.frame(10, 3) == 1023);
    CHECK_THROWS_AS(e.frame(1, 2), InvalidConfiguration);
}

TEST_CASE("optimal_splits")
{
    CountEngine e;
    CHECK(e.optimal_splits(1, 4) == std::vector<SplitPlan>{{4, {0, 0}}});
    CHECK(e.optimal_splits(3, 4) == std::vector<SplitPlan>{{4, {1, 1}}});
    CHECK(e.optimal_splits(4, 4) == std::vector<SplitPlan>{{4, {1, 2}}, {4, {2, 1}}});
    CHECK(e.optimal_splits(5, 3) == std::vector<SplitPlan>{{3, {4}}});
    CHECK_THROWS_AS(e.optimal_splits(0, 4), DomainError);
    CHECK(e.canonical_split(4, 4) == SplitPlan{4, {1, 2}});
    CHECK(to_string(SplitPlan{4, {1, 2}}) == "(1,2)");
}

TEST_CASE("optimal_splits is exactly the argmin set")
{
    CountEngine e;
    for (int k = 3; k <= 5; ++k) {
        for (int n = 1; n <= (k == 5 ? 12 : 20); ++n) {
            const auto found = e.optimal_splits(n, k);
            const auto best = e.stewart(n, k);
            std::vector<SplitPlan> expected;
            for (const auto& c : compositions(n - 1, k - 2))
                if (brute_cost(c, k) == best)
                    expected.push_back({k, c});
            CHECK_MESSAGE(found == expected, "n=" << n << " k=" << k);
            CHECK(e.canonical_split(n, k) == found.front());
            for (const auto& p : found)
                CHECK(e.plan_cost(p) == best);
        }
    }
}

TEST_CASE("count properties")
{
    CountEngine e;
    for (int n = 0; n <= 64; ++n)
        CHECK(e.stewart(n, 3) == pow2m1(n));
    for (int k = 3; k <= 6; ++k) {
        for (int n = 0; n <= 40; ++n) {
            CHECK(e.frame(n, k) == e.stewart(n, k));
            CHECK(e.stewart(n, k) >= e.stewart(n, k + 1));
            CHECK(e.stewart(n + 1, k) > e.stewart(n, k));
            if (n >= 1) {
                const MoveCount& t = e.stewart(n, k);
                CHECK(t % 2 == 1);
                // S(n-1,k) is the cheapest way to park the smaller disks.
                const MoveCount parking = (t - 1) / 2;
                CHECK(2 * parking + 1 == e.plan_cost(e.canonical_split(n, k)));
            }
        }
    }
}

TEST_CASE("strategy_count")
{
    CountEngine e;
    CHECK(e.strategy_count(4, Strategy::S1) == 15);
    CHECK(e.strategy_count(4, Strategy::S2) == 15);
    CHECK(e.strategy_count(5, Strategy::S3) == 13);
    CHECK(e.strategy_count(4, Strategy::S3) == 9);
    CHECK(e.strategy_count(0, Strategy::S3) == 0);
    CHECK(e.strategy_count(1, Strategy::S3) == 1);
    CHECK(e.strategy_count(0, Strategy::Optimal) == 0);
    for (int n = 0; n <= 30; ++n) {
        const auto opt = e.strategy_count(n, Strategy::Optimal);
        const auto s3 = e.strategy_count(n, Strategy::S3);
        const auto s2 = e.strategy_count(n, Strategy::S2);
        CHECK(opt <= s3);
        CHECK(s3 <= s2);
        CHECK(s2 == e.strategy_count(n, Strategy::S1));
    }
    CHECK(parse_strategy("s3") == Strategy::S3);
    CHECK_FALSE(parse_strategy("s4"));
}
