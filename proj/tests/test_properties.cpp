#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bordered/construct.hpp"
#include "bordered/corners.hpp"
#include "bordered/enumerate.hpp"
#include "bordered/pairing.hpp"
#include "bordered/transform.hpp"
#include "bordered/verify.hpp"
#include "oracle.hpp"

using namespace bordered;

namespace {

bool oracle_ok(const BorderPlan& p) { return oracle::border_ok(p.n, p.v, p.w, p.b, p.c); }

// Random valid plan at inner order n: a corner-prescribed border for even n,
// the recipe border under a random symmetry for odd n, then shuffled lines.
BorderPlan random_plan(std::mt19937& rng, int n) {
  BorderPlan plan;
  if (n % 2 == 0) {
    const auto pool = border_pool(n);
    for (;;) {
      const Value v = pool[rng() % pool.size()];
      const Value w = pool[rng() % pool.size()];
      if (v != w && corners_feasible(n, v, w)) {
        plan = construct_with_corners(n, v, w);
        break;
      }
    }
  } else {
    plan = apply_symmetry(build_border(n).plan, kAllSymmetries[rng() % 8]);
  }
  std::vector<int> pb(n), pc(n);
  std::iota(pb.begin(), pb.end(), 0);
  std::iota(pc.begin(), pc.end(), 0);
  std::shuffle(pb.begin(), pb.end(), rng);
  std::shuffle(pc.begin(), pc.end(), rng);
  return permute_lines(plan, pb, pc);
}

// Random perfect matching of xs into pairs.
std::vector<Pair> random_pairs(std::mt19937& rng, std::vector<Value> xs, PairLabel label) {
  std::shuffle(xs.begin(), xs.end(), rng);
  std::vector<Pair> out;
  for (std::size_t k = 0; k + 1 < xs.size(); k += 2) out.push_back({xs[k], xs[k + 1], label});
  return out;
}

}  // namespace

TEST(Properties, RecipeBalanceLaws) {
  for (int n = 3; n <= 50; ++n) {
    const auto built = build_border(n);
    const auto& plan = built.plan;
    Value beta = 0, gamma = 0;
    for (const auto& p : built.scheme.pairs) {
      (p.label == PairLabel::b_pair ? beta : gamma) += pair_d(p, n);
    }
    if (n % 2 == 0) {
      EXPECT_EQ(beta, 0) << n;
      EXPECT_EQ(gamma, -d_value(plan.v, complement(plan.w, n), n)) << n;
    } else {
      EXPECT_EQ(beta, -d_corner(plan.v, n)) << n;
      EXPECT_EQ(gamma, -d_corner(plan.v, n)) << n;
      if (n >= 5) EXPECT_EQ(beta, Value(n * n + 2 * n - 9) / 2) << n;
    }
  }
}

TEST(Properties, OrderThreeCannotReachTheOddRecipeValue) {
  // Both line sums are -d_corner(v) for every odd border, so (n^2+2n-9)/2 = 3
  // would need v = 10, which is not in the order-3 pool.
  const auto table = count_omega(3, {}, CornerRange::full_pool);
  ASSERT_EQ(table.status, SearchStatus::complete);
  for (const auto& [key, count] : table.counts) {
    if (count == 0) continue;
    EXPECT_NE(-d_corner(key.first, 3), 3);
    for (const auto& border : collect_omega({3, key.first, key.second})) {
      EXPECT_TRUE(verify_balance(border.to_plan(), scheme_from_plan(border.to_plan())).valid());
    }
  }
  EXPECT_FALSE(in_pool(10, 3));
}

TEST(Properties, BalanceDoesNotDependOnTheMatching) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 9);
    const auto plan = random_plan(rng, n);
    std::vector<Value> beta = plan.b, gamma = plan.c;
    if (n % 2 == 0) {
      beta.push_back(plan.v);
      beta.push_back(plan.w);
    } else {
      beta.push_back(plan.w);
      gamma.push_back(complement(plan.w, n));
    }
    PairingScheme scheme = scheme_from_plan(plan);
    scheme.pairs = random_pairs(rng, beta, PairLabel::b_pair);
    const auto more = random_pairs(rng, gamma, PairLabel::c_pair);
    scheme.pairs.insert(scheme.pairs.end(), more.begin(), more.end());
    EXPECT_TRUE(verify_balance(plan, scheme).valid()) << describe(plan);
  }
}

TEST(Properties, PermutationsAndSymmetriesPreserveValidity) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 9);
    const auto plan = random_plan(rng, n);
    ASSERT_TRUE(oracle_ok(plan));
    for (Symmetry s : kAllSymmetries) EXPECT_TRUE(oracle_ok(apply_symmetry(plan, s)));
    std::vector<int> pb(n), pc(n);
    std::iota(pb.begin(), pb.end(), 0);
    std::iota(pc.begin(), pc.end(), 0);
    std::shuffle(pb.begin(), pb.end(), rng);
    std::shuffle(pc.begin(), pc.end(), rng);
    EXPECT_TRUE(oracle_ok(permute_lines(plan, pb, pc)));
  }
}

TEST(Properties, VerifierAgreesWithOracleOnPerturbations) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 10);
    BorderPlan plan = random_plan(rng, n);
    const auto pool = border_pool(n);
    auto& line = rng() % 2 ? plan.b : plan.c;
    line[rng() % line.size()] = pool[rng() % pool.size()];
    if (rng() % 3 == 0) plan.v = pool[rng() % pool.size()];
    EXPECT_EQ(verify_border(plan).valid(), oracle_ok(plan)) << describe(plan);
  }
}

TEST(Properties, SchemeFromPlanRebuildsPlan) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const auto plan = random_plan(rng, n);
    const auto scheme = scheme_from_plan(plan);
    EXPECT_TRUE(selection_problems(scheme).empty());
    EXPECT_EQ(plan_from_scheme(scheme), plan);
  }
}
