#include <atomic>
#include <stdexcept>
#include <string>

#include "bordered/kernels.hpp"

namespace bordered::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(BORDERED_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa best_isa() { return cpu_has_avx2() ? Isa::avx2 : Isa::scalar; }

std::atomic<Isa>& selected() {
  static std::atomic<Isa> isa{best_isa()};
  return isa;
}

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
      return cpu_has_avx2();
  }
  return false;
}

Isa active_isa() { return selected().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument("kernel ISA " + std::string(isa_name(isa)) +
                                " is not available on this machine");
  }
  selected().store(isa, std::memory_order_relaxed);
}

void reset_isa() { selected().store(best_isa(), std::memory_order_relaxed); }

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void row_sums(const GridView& view, std::span<Value> out) {
#if defined(BORDERED_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::row_sums(view, out);
#endif
  scalar::row_sums(view, out);
}

void col_sums(const GridView& view, std::span<Value> out) {
#if defined(BORDERED_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::col_sums(view, out);
#endif
  scalar::col_sums(view, out);
}

Value diagonal_sum(const GridView& view) {
  Value s = 0;
  for (std::size_t i = 0; i < view.rows; ++i) s += view.row(i)[i];
  return s;
}

Value anti_diagonal_sum(const GridView& view) {
  Value s = 0;
  for (std::size_t i = 0; i < view.rows; ++i) s += view.row(i)[view.cols - 1 - i];
  return s;
}

}  // namespace bordered::kernels
