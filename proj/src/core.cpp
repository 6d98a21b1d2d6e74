#include "bordered/core.hpp"

#include <string>

namespace bordered {

void require_inner_order(int n) {
  if (n < 3) {
    throw std::invalid_argument("inner order must be at least 3, got " + std::to_string(n));
  }
}

Value magic_constant(Value order) {
  if (order < 1) {
    throw std::invalid_argument("magic constant needs order >= 1, got " + std::to_string(order));
  }
  // One of N and N^2+1 is even.
  return order * (order * order + 1) / 2;
}

Value complement_base(int n) {
  require_inner_order(n);
  return pool_max(n) + 1;
}

bool in_pool(Value x, int n) {
  const Value rows = diagram_rows(n);
  return (x >= 1 && x <= rows) || (x > pool_max(n) - rows && x <= pool_max(n));
}

std::vector<Value> border_pool(int n) {
  require_inner_order(n);
  const Value rows = diagram_rows(n);
  std::vector<Value> pool;
  pool.reserve(2 * rows);
  for (Value x = 1; x <= rows; ++x) pool.push_back(x);
  for (Value x = pool_max(n) - rows + 1; x <= pool_max(n); ++x) pool.push_back(x);
  return pool;
}

namespace {

void require_pool(Value x, int n) {
  if (!in_pool(x, n)) {
    throw std::out_of_range(std::to_string(x) + " is not in the border pool of inner order " +
                            std::to_string(n));
  }
}

}  // namespace

Value complement(Value x, int n) {
  require_inner_order(n);
  require_pool(x, n);
  return complement_base(n) - x;
}

Value d_value(Value x, Value y, int n) {
  require_inner_order(n);
  require_pool(x, n);
  require_pool(y, n);
  return x + y - complement_base(n);
}

Value d_corner(Value v, int n) {
  require_inner_order(n);
  if (n % 2 == 0) {
    throw std::invalid_argument("corner deviation is only defined for odd inner orders");
  }
  return v - complement_base(n) / 2;
}

DiagramRow diagram_row(int i, int n) {
  require_inner_order(n);
  if (i < 1 || i > diagram_rows(n)) {
    throw std::out_of_range("diagram row " + std::to_string(i) + " outside 1.." +
                            std::to_string(diagram_rows(n)));
  }
  return {i, Value(i), complement_base(n) - i};
}

int row_of(Value x, int n) {
  require_pool(x, n);
  return x <= diagram_rows(n) ? static_cast<int>(x) : static_cast<int>(complement_base(n) - x);
}

Side side_of(Value x, int n) {
  require_pool(x, n);
  return x <= diagram_rows(n) ? Side::left : Side::right;
}

Value value_at(int row, Side side, int n) {
  const DiagramRow r = diagram_row(row, n);
  return side == Side::left ? r.left : r.right;
}

std::string to_string(Side s) { return s == Side::left ? "left" : "right"; }

}  // namespace bordered
