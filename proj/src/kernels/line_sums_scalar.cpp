#include <algorithm>
#include <cassert>

#include "bordered/kernels.hpp"

namespace bordered::kernels::scalar {

void row_sums(const GridView& view, std::span<Value> out) {
  assert(out.size() == view.rows);
  for (std::size_t r = 0; r < view.rows; ++r) {
    const Value* p = view.row(r);
    Value s = 0;
    for (std::size_t c = 0; c < view.cols; ++c) s += p[c];
    out[r] = s;
  }
}

void col_sums(const GridView& view, std::span<Value> out) {
  assert(out.size() == view.cols);
  std::fill(out.begin(), out.end(), Value{0});
  for (std::size_t r = 0; r < view.rows; ++r) {
    const Value* p = view.row(r);
    for (std::size_t c = 0; c < view.cols; ++c) out[c] += p[c];
  }
}

}  // namespace bordered::kernels::scalar
