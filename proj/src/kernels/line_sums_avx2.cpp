// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <cassert>

#include "bordered/kernels.hpp"

namespace bordered::kernels::avx2 {

namespace {

inline Value horizontal_sum(__m256i acc) {
  const __m128i lo = _mm256_castsi256_si128(acc);
  const __m128i hi = _mm256_extracti128_si256(acc, 1);
  const __m128i s = _mm_add_epi64(lo, hi);
  return _mm_cvtsi128_si64(s) + _mm_extract_epi64(s, 1);
}

}  // namespace

void row_sums(const GridView& view, std::span<Value> out) {
  assert(out.size() == view.rows);
  const std::size_t body = view.cols & ~std::size_t{7};
  for (std::size_t r = 0; r < view.rows; ++r) {
    const Value* p = view.row(r);
    __m256i acc0 = _mm256_setzero_si256();
    __m256i acc1 = _mm256_setzero_si256();
    std::size_t c = 0;
    for (; c < body; c += 8) {
      acc0 = _mm256_add_epi64(acc0, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + c)));
      acc1 = _mm256_add_epi64(acc1,
                              _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + c + 4)));
    }
    Value s = horizontal_sum(_mm256_add_epi64(acc0, acc1));
    for (; c < view.cols; ++c) s += p[c];
    out[r] = s;
  }
}

void col_sums(const GridView& view, std::span<Value> out) {
  assert(out.size() == view.cols);
  const std::size_t body = view.cols & ~std::size_t{3};
  // Column strips of four lanes; each strip walks all rows.
  for (std::size_t c = 0; c < body; c += 4) {
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t r = 0; r < view.rows; ++r) {
      acc = _mm256_add_epi64(acc,
                             _mm256_loadu_si256(reinterpret_cast<const __m256i*>(view.row(r) + c)));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + c), acc);
  }
  for (std::size_t c = body; c < view.cols; ++c) {
    Value s = 0;
    for (std::size_t r = 0; r < view.rows; ++r) s += view.row(r)[c];
    out[c] = s;
  }
}

}  // namespace bordered::kernels::avx2
