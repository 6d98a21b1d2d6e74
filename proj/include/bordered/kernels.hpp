#pragma once

// Line-sum kernels for square verification. Each kernel has a scalar
// reference and, on x86-64, an AVX2 variant chosen once at runtime.

#include <cstddef>
#include <span>
#include <string_view>

#include "bordered/core.hpp"

namespace bordered::kernels {

enum class Isa { scalar, avx2 };

/// Row-major window into a larger grid.
struct GridView {
  const Value* data = nullptr;
  std::size_t stride = 0;  // elements between row starts
  std::size_t rows = 0;
  std::size_t cols = 0;

  const Value* row(std::size_t r) const { return data + r * stride; }
  GridView sub(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
    return {data + row0 * stride + col0, stride, nrows, ncols};
  }
};

/// out[r] = sum of row r. out.size() must equal view.rows.
using RowSumsFn = void (*)(const GridView& view, std::span<Value> out);
/// out[c] = sum of column c. out.size() must equal view.cols.
using ColSumsFn = void (*)(const GridView& view, std::span<Value> out);

namespace scalar {
void row_sums(const GridView& view, std::span<Value> out);
void col_sums(const GridView& view, std::span<Value> out);
}  // namespace scalar

#if defined(BORDERED_HAVE_AVX2)
namespace avx2 {
void row_sums(const GridView& view, std::span<Value> out);
void col_sums(const GridView& view, std::span<Value> out);
}  // namespace avx2
#endif

bool isa_available(Isa isa);
Isa active_isa();
/// Pins dispatch to `isa`; throws std::invalid_argument if unavailable.
void force_isa(Isa isa);
/// Back to the best available ISA.
void reset_isa();
std::string_view isa_name(Isa isa);

// Dispatched entry points.
void row_sums(const GridView& view, std::span<Value> out);
void col_sums(const GridView& view, std::span<Value> out);
/// Main diagonal and anti-diagonal of a square view (scalar; strided access).
Value diagonal_sum(const GridView& view);
Value anti_diagonal_sum(const GridView& view);

}  // namespace bordered::kernels
