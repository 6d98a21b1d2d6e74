#include <gtest/gtest.h>

#include <set>

#include "bordered/corners.hpp"
#include "bordered/verify.hpp"
#include "oracle.hpp"

using namespace bordered;

namespace {

bool oracle_ok(const BorderPlan& p) { return oracle::border_ok(p.n, p.v, p.w, p.b, p.c); }

}  // namespace

TEST(SeedExpr, Evaluates) {
  EXPECT_EQ(SeedExpr::parse("(m+2)^2-15").eval(8), 85);
  EXPECT_EQ(SeedExpr::parse("m^2+2m+4").eval(8), 84);
  EXPECT_EQ(SeedExpr::parse("2m-5").eval(12), 19);
  EXPECT_EQ(SeedExpr::parse("11+8i").eval(0, 2), 27);
  EXPECT_EQ(SeedExpr::parse("-3 + 2*m").eval(4), 5);
  EXPECT_EQ(SeedExpr::parse("2(m+1)").eval(3), 8);
  EXPECT_THROW(SeedExpr::parse("m+"), Error);
  EXPECT_THROW(SeedExpr::parse("x"), Error);
  EXPECT_THROW(SeedExpr::parse("(m"), Error);
}

TEST(SeedTables, ParsesBuiltIn) {
  const auto& t = builtin_seed_tables();
  EXPECT_EQ(t.format, 1);
  EXPECT_EQ(t.order4.size(), 25u);
  EXPECT_EQ(t.order_m.size(), 20u);
  EXPECT_EQ(t.block_b.size(), 4u);
  EXPECT_EQ(t.block_c.size(), 4u);
}

TEST(SeedTables, ReportsBadLines) {
  EXPECT_THROW(parse_seed_tables("format 1\norder4 1 2 | 3 4 | 5\n"), Error);
  EXPECT_THROW(parse_seed_tables("format 1\nbogus\n"), Error);
  try {
    parse_seed_tables("format 1\n\nbogus\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(Order4Table, EveryEntryValid) {
  for (const auto& seed : builtin_seed_tables().order4) {
    const BorderPlan plan{4, seed.v, seed.w, seed.b, seed.c};
    EXPECT_TRUE(verify_border(plan).valid()) << describe(plan);
    EXPECT_TRUE(oracle_ok(plan)) << describe(plan);
  }
}

TEST(CornersFeasible, ParityRule) {
  EXPECT_TRUE(corners_feasible(4, 1, 2));
  EXPECT_FALSE(corners_feasible(4, 1, 3));
  EXPECT_TRUE(corners_feasible(8, 2, 9));
  EXPECT_FALSE(corners_feasible(4, 1, 36));
  EXPECT_TRUE(corners_feasible(4, 36, 2));
  EXPECT_THROW(corners_feasible(5, 1, 2), std::invalid_argument);
  EXPECT_THROW(corners_feasible(4, 1, 11), std::invalid_argument);
  EXPECT_THROW(corners_feasible(4, 2, 2), std::invalid_argument);
}

TEST(SeedOrder4, PrintedRows) {
  auto p = seed_order4(1, 2);
  EXPECT_EQ(p.b, (std::vector<Value>{34, 33, 32, 9}));
  EXPECT_EQ(p.c, (std::vector<Value>{6, 30, 29, 10}));
  p = seed_order4(9, 10);
  EXPECT_EQ(p.b, (std::vector<Value>{1, 32, 30, 29}));
  EXPECT_EQ(p.c, (std::vector<Value>{2, 34, 33, 6}));
  p = seed_order4(7, 8);
  EXPECT_EQ(p.b, (std::vector<Value>{36, 5, 28, 27}));
  EXPECT_EQ(p.c, (std::vector<Value>{2, 34, 33, 6}));
  EXPECT_THROW(seed_order4(1, 3), std::invalid_argument);
}

TEST(ExtendBorder, ShiftsCorners) {
  const auto a = extend_border(seed_order4(1, 2), 0);
  EXPECT_EQ(a.n, 8);
  EXPECT_EQ(std::make_pair(a.v, a.w), std::make_pair(Value(1), Value(2)));
  EXPECT_TRUE(oracle_ok(a));
  const auto b = extend_border(seed_order4(1, 2), 2);
  EXPECT_EQ(std::make_pair(b.v, b.w), std::make_pair(Value(3), Value(4)));
  EXPECT_TRUE(oracle_ok(b));
  const auto c = extend_border(seed_order4(9, 10), 8);
  EXPECT_EQ(std::make_pair(c.v, c.w), std::make_pair(Value(17), Value(18)));
  EXPECT_TRUE(oracle_ok(c));
}

TEST(ExtendBorder, RejectsBadInput) {
  EXPECT_THROW(extend_border(seed_order4(1, 2), 3), std::invalid_argument);
  EXPECT_THROW(extend_border(seed_order4(1, 2), 10), std::invalid_argument);
  BorderPlan broken = seed_order4(1, 2);
  broken.b[0] = 1;
  EXPECT_THROW(extend_border(broken, 0), std::invalid_argument);
}

TEST(ExtendBorder, EveryShiftOfEveryTableRow) {
  for (const auto& seed : builtin_seed_tables().order4) {
    const BorderPlan base{4, seed.v, seed.w, seed.b, seed.c};
    for (int j = 0; j <= 8; j += 2) {
      const auto up = extend_border(base, j);
      EXPECT_TRUE(oracle_ok(up)) << describe(up);
      EXPECT_EQ(up.v, seed.v + j);
      EXPECT_EQ(up.w, seed.w + j);
      // Chain once more to order 12.
      EXPECT_TRUE(oracle_ok(extend_border(up, 8 - j)));
    }
  }
}

TEST(MissingPairs, ExactlyTheUnreachedPairsAtEight) {
  std::set<std::pair<Value, Value>> reached;
  for (const auto& seed : builtin_seed_tables().order4) {
    const Value lo = std::min(seed.v, seed.w), hi = std::max(seed.v, seed.w);
    for (int j = 0; j <= 8; j += 2) reached.emplace(lo + j, hi + j);
  }
  std::set<std::pair<Value, Value>> missing;
  for (Value v = 1; v <= 18; ++v) {
    for (Value w = v + 1; w <= 18; ++w) {
      if ((v + w) % 2 == 1 && !reached.contains({v, w})) missing.emplace(v, w);
    }
  }
  const auto listed = missing_pairs(8);
  EXPECT_EQ(listed.size(), 20u);
  const std::set<std::pair<Value, Value>> listed_set(listed.begin(), listed.end());
  EXPECT_EQ(missing, listed_set);
}

TEST(SeedOrderM, KnownBadRowIsRepaired) {
  const auto out = seed_order_m(8, 1, 18);
  EXPECT_EQ(out.label, "1&2m+2");
  EXPECT_EQ(out.raw.b, (std::vector<Value>{10, 14, 16, 84, 85, 88, 89, 99}));
  EXPECT_EQ(out.raw.c, (std::vector<Value>{7, 8, 9, 11, 95, 96, 97, 98}));
  ASSERT_TRUE(out.raw_report.has("row_sum"));
  for (const auto& v : out.raw_report.violations) {
    if (v.condition == "row_sum") {
      EXPECT_EQ(v.expected, 505);
      EXPECT_EQ(v.actual, 504);
    }
  }
  EXPECT_NE(out.status, SeedStatus::valid);
  EXPECT_EQ(out.plan.v, 1);
  EXPECT_EQ(out.plan.w, 18);
  EXPECT_TRUE(oracle_ok(out.plan));
}

TEST(SeedOrderM, ClassifiesEveryRow) {
  for (int m : {8, 12, 16}) {
    const auto audit = audit_order_m(m);
    ASSERT_EQ(audit.size(), 20u);
    for (const auto& out : audit) {
      EXPECT_EQ(out.raw_report.valid(), out.status == SeedStatus::valid) << out.label;
      EXPECT_TRUE(oracle_ok(out.plan)) << out.label;
      EXPECT_EQ(out.plan.v, out.v);
      EXPECT_EQ(out.plan.w, out.w);
      if (out.status == SeedStatus::valid) EXPECT_EQ(out.plan, out.raw);
    }
  }
}

TEST(SeedOrderM, TwoAndEightAgainstSeventeen) {
  for (Value v : {2, 8}) {
    const auto out = seed_order_m(8, v, 17);
    EXPECT_EQ(out.raw_report.valid(), oracle_ok(out.raw));
    EXPECT_TRUE(oracle_ok(out.plan));
  }
}

TEST(SeedOrderM, RejectsUnlistedPairsAndOrders) {
  EXPECT_THROW(seed_order_m(8, 1, 2), std::invalid_argument);
  EXPECT_THROW(seed_order_m(10, 1, 22), std::invalid_argument);
}

TEST(ConstructWithCorners, SmallCases) {
  auto p = construct_with_corners(4, 1, 4);
  EXPECT_EQ(p, seed_order4(1, 4));
  p = construct_with_corners(8, 3, 4);
  EXPECT_EQ(std::make_pair(p.v, p.w), std::make_pair(Value(3), Value(4)));
  EXPECT_TRUE(oracle_ok(p));
  EXPECT_EQ(canonical_corner_borders(8).at({3, 4}).source, CornerSource::extension);
  p = construct_with_corners(6, 1, 2);
  EXPECT_TRUE(oracle_ok(p));
}

TEST(ConstructWithCorners, InfeasibleCitesParity) {
  try {
    construct_with_corners(8, 1, 3);
    FAIL();
  } catch (const InfeasibleCorners& e) {
    EXPECT_NE(std::string(e.what()).find("parity"), std::string::npos);
  }
  EXPECT_THROW(construct_with_corners(8, 1, 100), InfeasibleCorners);
  EXPECT_THROW(construct_with_corners(7, 1, 2), std::invalid_argument);
}

TEST(ConstructWithCorners, AnyPoolCorners) {
  const int n = 6;
  for (Value v : border_pool(n)) {
    for (Value w : border_pool(n)) {
      if (v == w || !corners_feasible(n, v, w)) continue;
      const auto p = construct_with_corners(n, v, w);
      ASSERT_EQ(p.v, v);
      ASSERT_EQ(p.w, w);
      ASSERT_TRUE(oracle_ok(p)) << describe(p);
    }
  }
}

TEST(CanonicalCornerBorders, SourcesAtEight) {
  const auto& table = canonical_corner_borders(8);
  EXPECT_EQ(table.size(), 81u);
  const auto missing = missing_pairs(8);
  const std::set<std::pair<Value, Value>> missing_set(missing.begin(), missing.end());
  for (const auto& [key, border] : table) {
    if (missing_set.contains(key)) {
      EXPECT_TRUE(border.source == CornerSource::param_table ||
                  border.source == CornerSource::param_table_repaired);
    } else {
      EXPECT_EQ(border.source, CornerSource::extension);
    }
  }
}
