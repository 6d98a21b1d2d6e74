#include "bordered/plan.hpp"

#include <sstream>
#include <stdexcept>

namespace bordered {

namespace {

void append_list(std::ostringstream& os, const std::vector<Value>& xs) {
  os << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << '}';
}

}  // namespace

std::string describe(const BorderPlan& plan) {
  std::ostringstream os;
  os << "n=" << plan.n << " v=" << plan.v << " w=" << plan.w << " b=";
  append_list(os, plan.b);
  os << " c=";
  append_list(os, plan.c);
  return os.str();
}

BorderFrame::BorderFrame(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("frame needs inner order >= 1");
  cells_.assign(static_cast<std::size_t>(n + 2) * static_cast<std::size_t>(n + 2), kEmpty);
}

BorderPlan plan_from_frame(const BorderFrame& frame) {
  const int n = frame.inner_order();
  BorderPlan plan;
  plan.n = n;
  plan.v = frame.at(0, 0);
  plan.w = frame.at(0, n + 1);
  for (int i = 1; i <= n; ++i) {
    plan.b.push_back(frame.at(0, i));
    plan.c.push_back(frame.at(i, 0));
  }
  return plan;
}

MagicSquare::MagicSquare(int order, std::vector<Value> cells)
    : order_(order), cells_(std::move(cells)) {
  if (order < 1) throw std::invalid_argument("square order must be positive");
  if (cells_.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order)) {
    throw std::invalid_argument("square of order " + std::to_string(order) + " needs " +
                                std::to_string(order * order) + " cells, got " +
                                std::to_string(cells_.size()));
  }
}

}  // namespace bordered
