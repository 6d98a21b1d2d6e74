#include "bordered/assemble.hpp"

#include <stdexcept>
#include <string>

#include "bordered/construct.hpp"
#include "bordered/verify.hpp"

namespace bordered {

MagicSquare base_square(int order) {
  switch (order) {
    case 3:
      return MagicSquare(3, {2, 7, 6, 9, 5, 1, 4, 3, 8});
    case 4:
      return MagicSquare(4, {16, 3, 2, 13, 5, 10, 11, 8, 9, 6, 7, 12, 4, 15, 14, 1});
    default:
      throw std::invalid_argument("base squares exist for orders 3 and 4 only, got " +
                                  std::to_string(order));
  }
}

BorderFrame render_frame(const BorderPlan& plan) {
  if (const auto report = verify_border(plan); !report.valid()) {
    throw std::invalid_argument("cannot render an invalid border:\n" + report.to_text());
  }
  const int n = plan.n;
  const Value cbase = complement_base(n);
  BorderFrame frame(n);
  const int last = n + 1;
  frame.at(0, 0) = plan.v;
  frame.at(0, last) = plan.w;
  frame.at(last, 0) = cbase - plan.w;
  frame.at(last, last) = cbase - plan.v;
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    frame.at(0, i + 1) = plan.b[k];
    frame.at(last, i + 1) = cbase - plan.b[k];
    frame.at(i + 1, 0) = plan.c[k];
    frame.at(i + 1, last) = cbase - plan.c[k];
  }
  return frame;
}

LayerStack layer_stack(int order) {
  if (order < 3) {
    throw std::invalid_argument("bordered squares start at order 3; order " +
                                std::to_string(order) + " has no normal magic square worth building");
  }
  const int base = order % 2 == 0 ? 4 : 3;
  LayerStack stack{base_square(base), {}};
  for (int n = base; n + 2 <= order; n += 2) stack.layers.push_back(build_border(n).plan);
  return stack;
}

MagicSquare assemble(const LayerStack& stack) {
  MagicSquare square = stack.base;
  for (const auto& plan : stack.layers) {
    const int n = square.order();
    if (plan.n != n) {
      throw std::invalid_argument("layer of inner order " + std::to_string(plan.n) +
                                  " cannot wrap a square of order " + std::to_string(n));
    }
    const BorderFrame frame = render_frame(plan);
    const int size = frame.size();
    const Value shift = 2 * Value(n) + 2;
    MagicSquare next(size, std::vector<Value>(static_cast<std::size_t>(size) * size, 0));
    for (int r = 0; r < size; ++r) {
      for (int c = 0; c < size; ++c) {
        next.at(r, c) = frame.on_border(r, c) ? frame.at(r, c) : square.at(r - 1, c - 1) + shift;
      }
    }
    square = std::move(next);
  }
  return square;
}

MagicSquare build_square(int order) { return assemble(layer_stack(order)); }

}  // namespace bordered
