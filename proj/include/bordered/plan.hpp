#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bordered/core.hpp"

namespace bordered {

/// One magic border around an n x n core, held by its upper corners, its top
/// interior (left to right) and its left interior (top to bottom). The other
/// two lines are the complements and are never stored.
struct BorderPlan {
  int n = 0;
  Value v = 0;
  Value w = 0;
  std::vector<Value> b;
  std::vector<Value> c;

  friend bool operator==(const BorderPlan&, const BorderPlan&) = default;
};

std::string describe(const BorderPlan& plan);

/// (n+2) x (n+2) placement of a plan; interior cells hold kEmpty.
class BorderFrame {
 public:
  static constexpr Value kEmpty = 0;

  BorderFrame() = default;
  explicit BorderFrame(int n);

  int inner_order() const { return n_; }
  int size() const { return n_ + 2; }
  Value at(int row, int col) const { return cells_[index(row, col)]; }
  Value& at(int row, int col) { return cells_[index(row, col)]; }
  const std::vector<Value>& cells() const { return cells_; }

  bool on_border(int row, int col) const {
    return row == 0 || col == 0 || row == size() - 1 || col == size() - 1;
  }

  friend bool operator==(const BorderFrame&, const BorderFrame&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(size()) +
           static_cast<std::size_t>(col);
  }

  int n_ = 0;
  std::vector<Value> cells_;
};

/// Reads v, w, b, c back off a frame's top row and left column.
BorderPlan plan_from_frame(const BorderFrame& frame);

/// N x N grid stored row-major. Entries are not checked on construction.
class MagicSquare {
 public:
  MagicSquare() = default;
  MagicSquare(int order, std::vector<Value> cells);

  int order() const { return order_; }
  Value at(int row, int col) const { return cells_[index(row, col)]; }
  Value& at(int row, int col) { return cells_[index(row, col)]; }
  const std::vector<Value>& cells() const { return cells_; }

  friend bool operator==(const MagicSquare&, const MagicSquare&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(order_) +
           static_cast<std::size_t>(col);
  }

  int order_ = 0;
  std::vector<Value> cells_;
};

}  // namespace bordered
