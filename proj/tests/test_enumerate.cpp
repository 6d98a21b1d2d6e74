#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "bordered/construct.hpp"
#include "bordered/enumerate.hpp"
#include "bordered/verify.hpp"
#include "oracle.hpp"

using namespace bordered;

TEST(EnumerateOmega, SameParityIsEmpty) {
  std::uint64_t seen = 0;
  const auto stats = enumerate_omega({4, 1, 3}, {}, [&](const CanonicalBorder&) {
    ++seen;
    return true;
  });
  EXPECT_EQ(seen, 0u);
  EXPECT_EQ(stats.status, SearchStatus::complete);
}

TEST(EnumerateOmega, ContainsTableRows) {
  auto contains = [](const OmegaKey& key, BorderPlan plan) {
    const auto all = collect_omega(key);
    return std::find(all.begin(), all.end(), CanonicalBorder::from_plan(plan)) != all.end();
  };
  EXPECT_TRUE(contains({4, 1, 2}, {4, 1, 2, {34, 33, 32, 9}, {6, 30, 29, 10}}));
  EXPECT_TRUE(contains({4, 9, 10}, {4, 9, 10, {1, 32, 30, 29}, {2, 34, 33, 6}}));
}

TEST(EnumerateOmega, MatchesBruteForceAtFour) {
  for (Value v = 1; v <= 10; ++v) {
    for (Value w = 1; w <= 10; ++w) {
      if (v == w) continue;
      std::set<std::pair<std::vector<oracle::Int>, std::vector<oracle::Int>>> got;
      for (const auto& b : collect_omega({4, v, w})) {
        EXPECT_TRUE(std::is_sorted(b.b.begin(), b.b.end()));
        EXPECT_TRUE(got.emplace(b.b, b.c).second) << "duplicate border";
      }
      EXPECT_EQ(got, oracle::borders_n4(v, w)) << v << "," << w;
    }
  }
}

TEST(EnumerateOmega, DeterministicOrder) {
  EXPECT_EQ(collect_omega({4, 2, 5}), collect_omega({4, 2, 5}));
}

TEST(EnumerateOmega, RejectsBadKeys) {
  EXPECT_THROW(collect_omega({4, 1, 1}), std::invalid_argument);
  EXPECT_THROW(collect_omega({4, 1, 36}), std::invalid_argument);
  EXPECT_THROW(collect_omega({4, 1, 11}), std::invalid_argument);
  EXPECT_THROW(collect_omega({2, 1, 2}), std::invalid_argument);
}

TEST(EnumerateOmega, NodeBudget) {
  SearchBudget budget;
  budget.node_limit = 5;
  SearchStats stats;
  collect_omega({6, 1, 2}, budget, &stats);
  EXPECT_EQ(stats.status, SearchStatus::budget_exhausted);
}

TEST(EnumerateOmega, SolutionLimitStops) {
  SearchBudget budget;
  budget.solution_limit = 1;
  SearchStats stats;
  const auto got = collect_omega({4, 1, 2}, budget, &stats);
  EXPECT_EQ(got.size(), 1u);
  EXPECT_EQ(stats.status, SearchStatus::stopped);
}

TEST(SearchFirst, SmallCases) {
  const auto a = search_first({6, 1, 2});
  EXPECT_TRUE(oracle::border_ok(6, a.v, a.w, a.b, a.c));
  const auto b = search_first({4, 5, 6});
  EXPECT_TRUE(oracle::border_ok(4, b.v, b.w, b.b, b.c));
  EXPECT_THROW(search_first({4, 2, 4}), InfeasibleCorners);
}

TEST(SearchFirst, BudgetIsDistinct) {
  SearchBudget budget;
  budget.node_limit = 3;
  EXPECT_THROW(search_first({10, 1, 2}, budget), BudgetExhausted);
}

TEST(SplitSolve, LargeOrders) {
  for (int n : {12, 16, 20, 30}) {
    for (Value v = 1; v <= 6; ++v) {
      for (Value w = v + 1; w <= 2 * n + 2; w += 3) {
        if ((v + w) % 2 == 0) continue;
        const auto found = split_solve({n, v, w});
        ASSERT_TRUE(found.has_value()) << n << " " << v << " " << w;
        EXPECT_TRUE(oracle::border_ok(n, found->v, found->w, found->b, found->c));
      }
    }
  }
}

TEST(SplitSolve, OddOrders) {
  for (int n : {5, 7, 9, 11}) {
    const auto plan = build_border(n).plan;
    const auto found = find_border({n, plan.v, plan.w});
    EXPECT_TRUE(oracle::border_ok(n, found.v, found.w, found.b, found.c));
  }
}

TEST(CountOmega, SmallCases) {
  const auto table = count_omega(4);
  EXPECT_EQ(table.status, SearchStatus::complete);
  EXPECT_EQ(table.counts.size(), 90u);
  EXPECT_EQ(table.counts.at({1, 3}), 0u);
  EXPECT_GE(table.counts.at({1, 2}), 1u);
}

TEST(CountOmega, MatchesFixture) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/omega4_counts.txt");
  ASSERT_TRUE(in);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(format_counts(count_omega(4, {}, CornerRange::small_only, 2)), text.str());
}

TEST(CountOmega, ThreadCountDoesNotMatter) {
  EXPECT_EQ(count_omega(4, {}, CornerRange::small_only, 1).counts,
            count_omega(4, {}, CornerRange::small_only, 3).counts);
}

TEST(CountOmega, FullPoolAtThree) {
  const auto table = count_omega(3, {}, CornerRange::full_pool);
  std::size_t keys = 0;
  for (Value v : border_pool(3)) {
    for (Value w : border_pool(3)) keys += v != w && v + w != complement_base(3);
  }
  EXPECT_EQ(table.counts.size(), keys);
  std::uint64_t total = 0;
  for (const auto& [key, count] : table.counts) total += count;
  EXPECT_GT(total, 0u);
}
