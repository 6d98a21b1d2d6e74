#pragma once

// Reference checks written straight from the definitions, sharing no code
// with the library's verifier.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Int = std::int64_t;

inline Int square_constant(Int order) { return order * (order * order + 1) / 2; }

/// Frame of order n+2 from v, w, top interior b and left interior c.
inline std::vector<std::vector<Int>> frame(int n, Int v, Int w, const std::vector<Int>& b,
                                           const std::vector<Int>& c) {
  const int size = n + 2;
  const Int pair = Int(size) * size + 1;
  std::vector<std::vector<Int>> f(size, std::vector<Int>(size, 0));
  f[0][0] = v;
  f[0][size - 1] = w;
  f[size - 1][0] = pair - w;
  f[size - 1][size - 1] = pair - v;
  for (int i = 0; i < n; ++i) {
    f[0][i + 1] = b[i];
    f[size - 1][i + 1] = pair - b[i];
    f[i + 1][0] = c[i];
    f[i + 1][size - 1] = pair - c[i];
  }
  return f;
}

/// The frame uses every number of {1..2n+2} and {n^2+2n+3..(n+2)^2} exactly
/// once and its four lines share the order-(n+2) constant.
inline bool border_ok(int n, Int v, Int w, const std::vector<Int>& b, const std::vector<Int>& c) {
  if (static_cast<int>(b.size()) != n || static_cast<int>(c.size()) != n) return false;
  const int size = n + 2;
  const auto f = frame(n, v, w, b, c);
  std::multiset<Int> used;
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (i == 0 || j == 0 || i == size - 1 || j == size - 1) used.insert(f[i][j]);
    }
  }
  std::multiset<Int> pool;
  for (Int x = 1; x <= 2 * n + 2; ++x) pool.insert(x);
  for (Int x = Int(n) * n + 2 * n + 3; x <= Int(size) * size; ++x) pool.insert(x);
  if (used != pool) return false;
  const Int s = square_constant(size);
  Int top = 0, bottom = 0, left = 0, right = 0;
  for (int i = 0; i < size; ++i) {
    top += f[0][i];
    bottom += f[size - 1][i];
    left += f[i][0];
    right += f[i][size - 1];
  }
  return top == s && bottom == s && left == s && right == s;
}

/// Rows, columns and both diagonals of the m x m window at (off, off).
inline bool lines_equal(const std::vector<Int>& cells, int order, int off, int m, Int target) {
  auto at = [&](int r, int c) { return cells[std::size_t(r + off) * order + std::size_t(c + off)]; };
  Int d1 = 0, d2 = 0;
  for (int i = 0; i < m; ++i) {
    Int row = 0, col = 0;
    for (int j = 0; j < m; ++j) {
      row += at(i, j);
      col += at(j, i);
    }
    if (row != target || col != target) return false;
    d1 += at(i, i);
    d2 += at(i, m - 1 - i);
  }
  return d1 == target && d2 == target;
}

inline bool magic(const std::vector<Int>& cells, int order) {
  std::vector<Int> sorted = cells;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] != Int(k) + 1) return false;
  }
  return sorted.size() == std::size_t(order) * order &&
         lines_equal(cells, order, 0, order, square_constant(order));
}

/// Magic, and every centred m x m window (m >= 3, same parity as the order)
/// has line sum m(N^2+1)/2.
inline bool bordered(const std::vector<Int>& cells, int order) {
  if (!magic(cells, order)) return false;
  const Int big = Int(order) * order + 1;
  for (int m = order - 2; m >= 3; m -= 2) {
    if (!lines_equal(cells, order, (order - m) / 2, m, m * big / 2)) return false;
  }
  return true;
}

/// Every k-subset of xs in lexicographic index order.
template <typename F>
void for_each_subset(const std::vector<Int>& xs, int k, F&& f) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  const int n = static_cast<int>(xs.size());
  if (k > n) return;
  while (true) {
    std::vector<Int> pick;
    for (int i : idx) pick.push_back(xs[i]);
    f(pick);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Sorted (b, c) value sets of every order-4 border with upper corners (v, w),
/// found by trying all 4-subsets of the remaining values.
inline std::set<std::pair<std::vector<Int>, std::vector<Int>>> borders_n4(Int v, Int w) {
  constexpr int n = 4;
  constexpr Int pair = 37;
  constexpr Int s = 111;
  std::vector<Int> rest;
  for (Int x = 1; x <= 36; ++x) {
    if ((x <= 10 || x >= 27) && x != v && x != w && x != pair - v && x != pair - w) rest.push_back(x);
  }
  auto clean = [&](const std::vector<Int>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        if (xs[i] + xs[j] == pair) return false;
      }
    }
    return true;
  };
  std::vector<std::vector<Int>> tops, lefts;
  for_each_subset(rest, n, [&](const std::vector<Int>& pick) {
    Int sum = 0;
    for (Int x : pick) sum += x;
    if (!clean(pick)) return;
    if (v + sum + w == s) tops.push_back(pick);
    if (v + sum + (pair - w) == s) lefts.push_back(pick);
  });
  std::set<std::pair<std::vector<Int>, std::vector<Int>>> out;
  for (const auto& b : tops) {
    for (const auto& c : lefts) {
      std::vector<Int> all = b;
      all.insert(all.end(), c.begin(), c.end());
      bool ok = clean(all);
      for (Int x : b) {
        for (Int y : c) ok = ok && x != y;
      }
      if (ok) out.emplace(b, c);
    }
  }
  return out;
}

}  // namespace oracle
