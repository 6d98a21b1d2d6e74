#include <gtest/gtest.h>

#include <random>

#include "bordered/kernels.hpp"

using namespace bordered;
using namespace bordered::kernels;

namespace {

std::vector<Value> random_grid(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<Value> dist(-1'000'000'000, 1'000'000'000);
  std::vector<Value> cells(rows * cols);
  for (auto& x : cells) x = dist(rng);
  return cells;
}

std::vector<Value> naive_rows(const GridView& g) {
  std::vector<Value> out(g.rows, 0);
  for (std::size_t r = 0; r < g.rows; ++r) {
    for (std::size_t c = 0; c < g.cols; ++c) out[r] += g.row(r)[c];
  }
  return out;
}

std::vector<Value> naive_cols(const GridView& g) {
  std::vector<Value> out(g.cols, 0);
  for (std::size_t r = 0; r < g.rows; ++r) {
    for (std::size_t c = 0; c < g.cols; ++c) out[c] += g.row(r)[c];
  }
  return out;
}

}  // namespace

TEST(Kernels, ScalarMatchesNaive) {
  std::mt19937_64 rng(1);
  for (std::size_t rows = 1; rows <= 19; ++rows) {
    for (std::size_t cols = 1; cols <= 19; ++cols) {
      const auto cells = random_grid(rng, rows, cols);
      const GridView g{cells.data(), cols, rows, cols};
      std::vector<Value> r(rows), c(cols);
      scalar::row_sums(g, r);
      scalar::col_sums(g, c);
      EXPECT_EQ(r, naive_rows(g));
      EXPECT_EQ(c, naive_cols(g));
    }
  }
}

#if defined(BORDERED_HAVE_AVX2)
TEST(Kernels, Avx2MatchesScalar) {
  if (!isa_available(Isa::avx2)) GTEST_SKIP() << "CPU lacks AVX2";
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t rows = 1 + rng() % 40;
    const std::size_t cols = 1 + rng() % 40;
    const std::size_t pad = rng() % 5;
    const auto cells = random_grid(rng, rows + 3, cols + pad + 3);
    const GridView whole{cells.data(), cols + pad + 3, rows + 3, cols + pad + 3};
    // Unaligned windows inside a wider grid.
    const GridView g = whole.sub(rng() % 4, rng() % 4, rows, cols);
    std::vector<Value> rs(rows), ra(rows), cs(cols), ca(cols);
    scalar::row_sums(g, rs);
    avx2::row_sums(g, ra);
    scalar::col_sums(g, cs);
    avx2::col_sums(g, ca);
    ASSERT_EQ(rs, ra) << rows << "x" << cols;
    ASSERT_EQ(cs, ca) << rows << "x" << cols;
  }
}
#endif

TEST(Kernels, DispatchFollowsForcedIsa) {
  EXPECT_TRUE(isa_available(Isa::scalar));
  force_isa(Isa::scalar);
  EXPECT_EQ(active_isa(), Isa::scalar);
  const std::vector<Value> cells = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  const GridView g{cells.data(), 3, 3, 3};
  std::vector<Value> r(3), c(3);
  row_sums(g, r);
  col_sums(g, c);
  EXPECT_EQ(r, (std::vector<Value>{6, 15, 24}));
  EXPECT_EQ(c, (std::vector<Value>{12, 15, 18}));
  EXPECT_EQ(diagonal_sum(g), 15);
  EXPECT_EQ(anti_diagonal_sum(g), 15);
  reset_isa();
  if (isa_available(Isa::avx2)) {
    EXPECT_EQ(active_isa(), Isa::avx2);
  } else {
    EXPECT_THROW(force_isa(Isa::avx2), std::invalid_argument);
  }
  EXPECT_EQ(isa_name(Isa::scalar), "scalar");
}
